// degen: command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "degen/degen.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

int exit_code_for(degen_status status) {
  switch (status) {
    case DEGEN_OK: return kExitOk;
    case DEGEN_ERR_INVALID_ARGUMENT:
    case DEGEN_ERR_PARSE:
    case DEGEN_ERR_INFEASIBLE:
      return kExitUsage;
    case DEGEN_ERR_NON_SPLIT:
    case DEGEN_ERR_FIELD_TOO_SMALL:
    case DEGEN_ERR_INADMISSIBLE_PRIME:
    case DEGEN_ERR_INSUFFICIENT_PRIMES:
    case DEGEN_ERR_GUARDRAIL:
      return kExitUnsupported;
    case DEGEN_ERR_NOT_POLYNOMIAL:
    case DEGEN_ERR_TYPE_MISMATCH:
    case DEGEN_ERR_COUNTEREXAMPLE:
    case DEGEN_ERR_CHECK_FAILED:
      return kExitCheckFailed;
    case DEGEN_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

// Inline JSON when the argument starts like a document, otherwise a path
// ("-" reads stdin).
std::string load_document(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::stringstream buffer;
  if (arg == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(arg);
  if (!in) throw CLI::ValidationError("input", "cannot read '" + arg + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

struct SessionDeleter {
  void operator()(degen_session* s) const { degen_session_destroy(s); }
};
struct ResultDeleter {
  void operator()(degen_result* r) const { degen_result_destroy(r); }
};
using SessionPtr = std::unique_ptr<degen_session, SessionDeleter>;
using ResultPtr = std::unique_ptr<degen_result, ResultDeleter>;

struct GlobalOptions {
  std::string field = "Q";
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  std::uint64_t max_enum = 50'000'000;
  unsigned threads = 0;
  int samples = 3;
  std::string output = "json";
  std::string out_file;
};

int report_error(degen_status status, const degen_session* session) {
  std::cerr << "{\"error\": \"" << degen_status_name(status) << "\", \"message\": \""
            << json_escape(degen_session_last_error(session)) << "\"}\n";
  return exit_code_for(status);
}

int emit(const GlobalOptions& opts, const std::string& command, degen_result* result) {
  std::string text;
  if (opts.output == "tsv") {
    const char* tsv = degen_result_tsv(result);
    if (!tsv) {
      std::cerr << "degen: '" << command << "' has no tsv output\n";
      return kExitUsage;
    }
    text = tsv;
  } else {
    text = degen_result_json(result);
  }
  if (opts.out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opts.out_file);
    if (!out) {
      std::cerr << "degen: cannot write '" << opts.out_file << "'\n";
      return kExitUsage;
    }
    out << text;
  }
  return degen_result_passed(result) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degen: Jordan-type invariants, degeneration witnesses and Grassmannian fixed-point checks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--field", opts.field, "Field: Q, F_p or p")->capture_default_str();
  app.add_option("--seed", opts.seed, "Seed for all sampling")->capture_default_str();
  app.add_option("--primes", opts.primes, "Comma-separated primes for interpolation")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--max-enum", opts.max_enum, "Largest Grassmannian to enumerate")->capture_default_str();
  app.add_option("--threads", opts.threads, "Counting threads (0 = hardware)");
  app.add_option("--samples", opts.samples, "Witness samples")->capture_default_str();
  app.add_option("--output", opts.output, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  app.add_option("--out-file", opts.out_file, "Write the report here instead of stdout");

  std::string matrix_arg;
  std::string delta_arg;
  std::string descriptor_arg;
  std::string mode = "ss-to-x";
  int d = 1;
  std::uint64_t q = 0;
  int n = 1;
  int s = 2;
  bool curve = false;
  bool extend_primes = false;
  bool strict_primes = false;

  auto* analyze = app.add_subcommand("analyze", "Jordan data and invariants of a matrix");
  analyze->add_option("--matrix", matrix_arg, "Matrix JSON (inline or path)")->required();

  auto* witness = app.add_subcommand("witness", "Verify a degeneration witness family");
  witness->add_option("--delta", delta_arg, "Jordan data JSON")->required();
  witness->add_option("--mode", mode, "ss-to-x or x-to-u")
      ->check(CLI::IsMember({"ss-to-x", "x-to-u"}))
      ->capture_default_str();
  witness->add_flag("--curve", curve, "Evaluate along slot = target + t * offset");

  auto* sandwich = app.add_subcommand("sandwich", "Sandwich invariants of a Jordan type");
  sandwich->add_option("--delta", delta_arg, "Jordan data JSON")->required();

  auto* count = app.add_subcommand("count-fixed", "Count invariant d-subspaces over F_q");
  auto* count_matrix = count->add_option("--matrix", matrix_arg, "Matrix JSON (inline or path)");
  auto* count_descriptor = count->add_option("--descriptor", descriptor_arg, "Variety descriptor JSON");
  count_matrix->excludes(count_descriptor);
  count->add_option("--d", d, "Subspace dimension")->required();
  count->add_option("--q", q, "Prime field size (optional for prime-field matrices)");

  auto* dimension = app.add_subcommand("dimension", "Dimension of invariant d-subspaces by interpolation");
  dimension->add_option("--descriptor", descriptor_arg, "Variety descriptor JSON")->required();
  dimension->add_option("--d", d, "Subspace dimension")->required();
  dimension->add_flag("--extend-primes", extend_primes, "Replace inadmissible primes and top up");

  auto* verify_sum = app.add_subcommand("verify-sum", "Exhaustive check of the sum inequality");
  verify_sum->add_option("--n", n, "Matrix size")->required();
  verify_sum->add_option("--s", s, "Tuple length (2 or 3)")->required();

  auto* verify_sandwich = app.add_subcommand("verify-sandwich", "Full sandwich verification");
  verify_sandwich->add_option("--delta", delta_arg, "Jordan data JSON")->required();
  verify_sandwich->add_flag("--strict-primes", strict_primes, "Use --primes verbatim");

  auto* enumerate = app.add_subcommand("enumerate-types", "List all Jordan types of size n");
  enumerate->add_option("--n", n, "Matrix size")->required();

  try {
    app.parse(argc, argv);
    if (count->parsed() && matrix_arg.empty() && descriptor_arg.empty())
      throw CLI::RequiredError("--matrix or --descriptor");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  degen_session* raw = nullptr;
  if (degen_session_create(&raw) != DEGEN_OK) return kExitInternal;
  SessionPtr session(raw);

  degen_status status = degen_session_set_field(session.get(), opts.field.c_str());
  if (status == DEGEN_OK) status = degen_session_set_seed(session.get(), opts.seed);
  if (status == DEGEN_OK)
    status = degen_session_set_primes(session.get(), opts.primes.data(), opts.primes.size());
  if (status == DEGEN_OK) status = degen_session_set_max_enum(session.get(), opts.max_enum);
  if (status == DEGEN_OK) status = degen_session_set_threads(session.get(), opts.threads);
  if (status == DEGEN_OK) status = degen_session_set_samples(session.get(), opts.samples);
  if (status == DEGEN_OK) status = degen_session_set_curve_mode(session.get(), curve ? 1 : 0);
  if (status != DEGEN_OK) return report_error(status, session.get());

  degen_result* result = nullptr;
  std::string command;
  try {
    if (analyze->parsed()) {
      command = "analyze";
      status = degen_analyze(session.get(), load_document(matrix_arg).c_str(), &result);
    } else if (witness->parsed()) {
      command = "witness";
      status = degen_witness(session.get(), load_document(delta_arg).c_str(), mode.c_str(), &result);
    } else if (sandwich->parsed()) {
      command = "sandwich";
      status = degen_sandwich(session.get(), load_document(delta_arg).c_str(), &result);
    } else if (count->parsed()) {
      command = "count-fixed";
      const std::string subject = load_document(matrix_arg.empty() ? descriptor_arg : matrix_arg);
      status = degen_count_fixed(session.get(), subject.c_str(), d, q, &result);
    } else if (dimension->parsed()) {
      command = "dimension";
      degen_session_set_extend_primes(session.get(), extend_primes ? 1 : 0);
      status = degen_dimension(session.get(), load_document(descriptor_arg).c_str(), d, &result);
    } else if (verify_sum->parsed()) {
      command = "verify-sum";
      status = degen_verify_sum(session.get(), n, s, &result);
    } else if (verify_sandwich->parsed()) {
      command = "verify-sandwich";
      degen_session_set_extend_primes(session.get(), strict_primes ? 0 : 1);
      status = degen_verify_sandwich(session.get(), load_document(delta_arg).c_str(), &result);
    } else if (enumerate->parsed()) {
      command = "enumerate-types";
      status = degen_enumerate_types(session.get(), n, &result);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "degen: " << e.what() << "\n";
    return kExitUsage;
  }
  ResultPtr owned(result);
  if (status != DEGEN_OK) return report_error(status, session.get());
  return emit(opts, command, owned.get());
}
