#include "degen/degen.h"

#include <new>
#include <string>

#include "degen/error.hpp"
#include "degen/reports.hpp"

struct degen_session {
  degen::RunConfig config;
  std::string last_error;
};

struct degen_result {
  std::string json;
  std::string tsv;
  bool pass;
};

namespace {

degen_status to_status(degen::ErrorCode code) {
  using degen::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return DEGEN_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return DEGEN_ERR_PARSE;
    case ErrorCode::NonSplit: return DEGEN_ERR_NON_SPLIT;
    case ErrorCode::InfeasibleE: return DEGEN_ERR_INFEASIBLE;
    case ErrorCode::FieldTooSmall: return DEGEN_ERR_FIELD_TOO_SMALL;
    case ErrorCode::TypeMismatch: return DEGEN_ERR_TYPE_MISMATCH;
    case ErrorCode::InadmissiblePrime: return DEGEN_ERR_INADMISSIBLE_PRIME;
    case ErrorCode::InsufficientPrimes: return DEGEN_ERR_INSUFFICIENT_PRIMES;
    case ErrorCode::GuardrailExceeded: return DEGEN_ERR_GUARDRAIL;
    case ErrorCode::NotPolynomial: return DEGEN_ERR_NOT_POLYNOMIAL;
    case ErrorCode::CounterexampleFound: return DEGEN_ERR_COUNTEREXAMPLE;
    case ErrorCode::CheckFailed: return DEGEN_ERR_CHECK_FAILED;
    case ErrorCode::Internal: return DEGEN_ERR_INTERNAL;
  }
  return DEGEN_ERR_INTERNAL;
}

// Runs body, translating exceptions into a status and the session's error.
template <typename Body>
degen_status guarded(degen_session* session, Body&& body) {
  if (!session) return DEGEN_ERR_INVALID_ARGUMENT;
  session->last_error.clear();
  try {
    body();
    return DEGEN_OK;
  } catch (const degen::Error& e) {
    session->last_error = std::string(degen::error_code_name(e.code())) + ": " + e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    session->last_error = "Internal: out of memory";
    return DEGEN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    session->last_error = std::string("Internal: ") + e.what();
    return DEGEN_ERR_INTERNAL;
  }
}

template <typename Build>
degen_status run_report(degen_session* session, degen_result** out, Build&& build) {
  if (!out) {
    if (session) session->last_error = "InvalidArgument: null result pointer";
    return DEGEN_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded(session, [&] {
    const degen::Report report = build(session->config);
    *out = new degen_result{report.body.dump(2) + "\n", report.tsv, report.pass};
  });
}

const char* require_text(const char* text, const char* what) {
  if (!text) degen::fail(degen::ErrorCode::InvalidArgument, std::string(what) + " is null");
  return text;
}

}  // namespace

extern "C" {

const char* degen_status_name(degen_status status) {
  switch (status) {
    case DEGEN_OK: return "ok";
    case DEGEN_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case DEGEN_ERR_PARSE: return "parse";
    case DEGEN_ERR_NON_SPLIT: return "non_split";
    case DEGEN_ERR_FIELD_TOO_SMALL: return "field_too_small";
    case DEGEN_ERR_INFEASIBLE: return "infeasible";
    case DEGEN_ERR_INADMISSIBLE_PRIME: return "inadmissible_prime";
    case DEGEN_ERR_INSUFFICIENT_PRIMES: return "insufficient_primes";
    case DEGEN_ERR_GUARDRAIL: return "guardrail";
    case DEGEN_ERR_NOT_POLYNOMIAL: return "not_polynomial";
    case DEGEN_ERR_TYPE_MISMATCH: return "type_mismatch";
    case DEGEN_ERR_COUNTEREXAMPLE: return "counterexample";
    case DEGEN_ERR_CHECK_FAILED: return "check_failed";
    case DEGEN_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* degen_version(void) { return "0.1.0"; }

degen_status degen_session_create(degen_session** out) {
  if (!out) return DEGEN_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) degen_session{};
  return *out ? DEGEN_OK : DEGEN_ERR_INTERNAL;
}

void degen_session_destroy(degen_session* session) { delete session; }

const char* degen_session_last_error(const degen_session* session) {
  return session ? session->last_error.c_str() : "";
}

degen_status degen_session_set_field(degen_session* session, const char* field) {
  return guarded(session, [&] {
    const std::string text = require_text(field, "field");
    session->config.field = !text.empty() && text.front() == '{'
                                ? degen::json::field_from_json(degen::json::parse(text))
                                : degen::json::field_from_string(text);
  });
}

degen_status degen_session_set_seed(degen_session* session, uint64_t seed) {
  return guarded(session, [&] { session->config.seed = seed; });
}

degen_status degen_session_set_primes(degen_session* session, const uint64_t* primes, size_t count) {
  return guarded(session, [&] {
    if (!primes && count) degen::fail(degen::ErrorCode::InvalidArgument, "primes is null");
    std::vector<std::uint64_t> list(primes, primes + count);
    for (auto p : list)
      if (!degen::is_prime(p))
        degen::fail(degen::ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
    session->config.primes = std::move(list);
  });
}

degen_status degen_session_set_max_enum(degen_session* session, uint64_t max_enum) {
  return guarded(session, [&] { session->config.max_enum = max_enum; });
}

degen_status degen_session_set_threads(degen_session* session, unsigned threads) {
  return guarded(session, [&] { session->config.threads = threads; });
}

degen_status degen_session_set_samples(degen_session* session, int samples) {
  return guarded(session, [&] {
    if (samples < 1) degen::fail(degen::ErrorCode::InvalidArgument, "samples must be positive");
    session->config.samples = samples;
  });
}

degen_status degen_session_set_extend_primes(degen_session* session, int enabled) {
  return guarded(session, [&] { session->config.extend_primes = enabled != 0; });
}

degen_status degen_session_set_curve_mode(degen_session* session, int enabled) {
  return guarded(session, [&] { session->config.curve = enabled != 0; });
}

degen_status degen_analyze(degen_session* session, const char* matrix_json, degen_result** out) {
  return run_report(session, out, [&](const degen::RunConfig& cfg) {
    return degen::analyze_report(require_text(matrix_json, "matrix"), cfg);
  });
}

degen_status degen_sandwich(degen_session* session, const char* delta_json, degen_result** out) {
  return run_report(session, out, [&](const degen::RunConfig& cfg) {
    return degen::sandwich_report(require_text(delta_json, "delta"), cfg);
  });
}

degen_status degen_witness(degen_session* session, const char* delta_json, const char* mode,
                           degen_result** out) {
  return run_report(session, out, [&](const degen::RunConfig& cfg) {
    return degen::witness_report(require_text(delta_json, "delta"), require_text(mode, "mode"), cfg);
  });
}

degen_status degen_count_fixed(degen_session* session, const char* subject_json, int d, uint64_t q,
                               degen_result** out) {
  return run_report(session, out, [&](const degen::RunConfig& cfg) {
    return degen::count_fixed_report(require_text(subject_json, "subject"), d, q, cfg);
  });
}

degen_status degen_dimension(degen_session* session, const char* descriptor_json, int d,
                             degen_result** out) {
  return run_report(session, out, [&](const degen::RunConfig& cfg) {
    return degen::dimension_report(require_text(descriptor_json, "descriptor"), d, cfg);
  });
}

degen_status degen_verify_sum(degen_session* session, int n, int s, degen_result** out) {
  return run_report(session, out,
                    [&](const degen::RunConfig& cfg) { return degen::verify_sum_report(n, s, cfg); });
}

degen_status degen_verify_sandwich(degen_session* session, const char* delta_json,
                                   degen_result** out) {
  return run_report(session, out, [&](const degen::RunConfig& cfg) {
    return degen::verify_sandwich_report(require_text(delta_json, "delta"), cfg);
  });
}

degen_status degen_enumerate_types(degen_session* session, int n, degen_result** out) {
  return run_report(session, out,
                    [&](const degen::RunConfig& cfg) { return degen::enumerate_types_report(n, cfg); });
}

const char* degen_result_json(const degen_result* result) {
  return result ? result->json.c_str() : nullptr;
}

const char* degen_result_tsv(const degen_result* result) {
  return result && !result->tsv.empty() ? result->tsv.c_str() : nullptr;
}

int degen_result_passed(const degen_result* result) { return result && result->pass ? 1 : 0; }

void degen_result_destroy(degen_result* result) { delete result; }

}  // extern "C"
