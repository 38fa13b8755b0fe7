#include "degen/reports.hpp"

#include "degen/error.hpp"
#include "degen/linear.hpp"

namespace degen {

using json::Json;

namespace {

Json config_json(const RunConfig& cfg) {
  return Json{{"field", json::to_json(cfg.field)},
              {"seed", cfg.seed},
              {"primes", cfg.primes},
              {"max_enum", cfg.max_enum},
              {"samples", cfg.samples},
              {"extend_primes", cfg.extend_primes}};
}

Json envelope(const char* command, const RunConfig& cfg) {
  return Json{{"command", command}, {"config", config_json(cfg)}};
}

CountOptions count_options(const RunConfig& cfg) { return {cfg.max_enum, cfg.threads}; }

JordanData parse_delta(const std::string& text) {
  return json::jordan_data_from_json(json::parse(text));
}

}  // namespace

Report analyze_report(const std::string& matrix_json, const RunConfig& cfg) {
  const Matrix a = json::matrix_from_json(json::parse(matrix_json));
  if (!a.is_square()) fail(ErrorCode::InvalidArgument, "analyze needs a square matrix");
  const Polynomial f = char_poly(a);
  const JordanData type = jordan_type_of(a);
  const SandwichReport sw = sandwich(type);
  const auto commutant = commutant_dim(a);

  Report r;
  r.body = envelope("analyze", cfg);
  r.body["input"] = json::to_json(a);
  r.body["char_poly"] = json::to_json(f);
  r.body["jordan"] = json::to_json(type);
  r.body["gamma"] = json::to_json(sw.gamma);
  r.body["gamma_t"] = json::to_json(sw.gamma_t);
  r.body["d"] = d_of(type);
  r.body["min_poly_degree"] = min_poly_degree(type);
  r.body["quadratic_minpoly"] = has_quadratic_minpoly(type);
  r.body["centralizer_dim"] = sw.centralizer_dim;
  r.body["commutant_dim"] = commutant;
  r.body["fixed_dims"] = sw.fixed_dims;
  r.pass = commutant == sw.centralizer_dim;
  r.body["claims"] = Json{{"sandwich.centralizer", r.pass}};
  r.body["pass"] = r.pass;
  return r;
}

Report sandwich_report(const std::string& delta_json, const RunConfig& cfg) {
  const SandwichReport sw = sandwich(parse_delta(delta_json));
  Report r;
  r.body = envelope("sandwich", cfg);
  r.body["report"] = json::to_json(sw);
  r.body["claims"] = Json{{"sandwich.centralizer", sw.centralizer_dim},
                          {"sandwich.grassmann", sw.fixed_dims}};
  r.body["pass"] = true;
  return r;
}

Report witness_report(const std::string& delta_json, const std::string& mode, const RunConfig& cfg) {
  const WitnessMode m = parse_witness_mode(mode);
  const WitnessFamily family = make_family(m, parse_delta(delta_json));
  const WitnessReport wr = cfg.curve ? verify_witness_curve(family, cfg.field, cfg.samples, cfg.seed)
                                     : verify_witness(family, cfg.field, cfg.samples, cfg.seed);
  Report r;
  r.body = envelope("witness", cfg);
  r.body["claim"] = m == WitnessMode::SemisimpleToX ? "sandwich.closure.semisimple"
                                                     : "sandwich.closure.equipotent";
  r.body["report"] = json::to_json(wr);
  r.pass = wr.pass;
  r.body["pass"] = r.pass;
  return r;
}

namespace {

std::string tsv_header() { return "subject\td\tq\tcount\tstrategy\n"; }

std::string tsv_row(const FixedCountSample& s) {
  return s.subject + "\t" + std::to_string(s.d) + "\t" + std::to_string(s.q) + "\t" +
         std::to_string(s.count) + "\t" + count_strategy_name(s.strategy) + "\n";
}

}  // namespace

Report count_fixed_report(const std::string& subject_json, int d, std::uint64_t q,
                          const RunConfig& cfg) {
  const Json subject = json::parse(subject_json);
  FixedCountSample sample{};
  int n = 0;
  Report r;
  r.body = envelope("count-fixed", cfg);
  if (subject.contains("kind") && subject.at("kind").is_string() &&
      subject.at("kind") != "rational" && subject.at("kind") != "prime") {
    const auto v = json::descriptor_from_json(subject);
    if (q == 0) fail(ErrorCode::InvalidArgument, "count-fixed on a descriptor needs --q");
    r.body["subject"] = json::to_json(v);
    n = v.n();
    sample = count_for_descriptor(v, d, q, count_options(cfg));
  } else {
    Matrix a = json::matrix_from_json(subject);
    if (!a.field().is_prime()) {
      if (q == 0) fail(ErrorCode::InvalidArgument, "rational matrix needs --q to reduce modulo");
      const FieldSpec fq = FieldSpec::prime(q);
      std::vector<Scalar> reduced;
      for (const auto& e : a.entries()) reduced.emplace_back(fq, e.value());
      a = Matrix(fq, a.rows(), a.cols(), std::move(reduced));
    } else if (q != 0 && q != a.field().characteristic()) {
      fail(ErrorCode::InvalidArgument, "--q disagrees with the matrix field");
    }
    r.body["subject"] = json::to_json(a);
    n = static_cast<int>(a.rows());
    sample = {"matrix", d, a.field().characteristic(), count_fixed_subspaces(a, d, count_options(cfg)),
              CountStrategy::Direct};
  }
  r.body["sample"] = json::to_json(sample);
  r.body["gaussian_binomial"] = gaussian_binomial(n, d, sample.q).get_str();
  r.body["pass"] = true;
  r.tsv = tsv_header() + tsv_row(sample);
  return r;
}

Report dimension_report(const std::string& descriptor_json, int d, const RunConfig& cfg) {
  const auto v = json::descriptor_from_json(json::parse(descriptor_json));
  const auto primes = cfg.extend_primes
                          ? admissible_prime_schedule(cfg.primes, v.eigenvalue_count(), v.n(), d)
                          : cfg.primes;
  const auto result = dimension_by_interpolation(v, d, primes, count_options(cfg));
  Report r;
  r.body = envelope("dimension", cfg);
  r.body["claim"] = "sandwich.grassmann";
  r.body["descriptor"] = json::to_json(v);
  r.body["primes_used"] = primes;
  r.body["result"] = json::to_json(result);
  if (v.kind() == VarietyDescriptor::Kind::S) {
    r.body["semisimple_count_polynomial"] =
        semisimple_count_polynomial(v.partition().parts(), d).to_string();
  }
  r.pass = result.certified;
  r.body["pass"] = r.pass;
  r.tsv = tsv_header();
  for (const auto& s : result.samples) r.tsv += tsv_row(s);
  return r;
}

Report verify_sum_report(int n, int s, const RunConfig& cfg) {
  const auto summary = exhaustive_sum_scan(n, s, /*stop_at_first=*/false);
  Report r;
  r.body = envelope("verify-sum", cfg);
  r.body["claim"] = "sum-inequality";
  r.body["summary"] = json::to_json(summary);
  r.pass = summary.pass;
  r.body["pass"] = r.pass;
  r.tsv = "id\tbranch\td_sum\td_bound\tpass\n";
  for (const auto* list : {&summary.exceptions, &summary.counterexamples})
    for (const auto& e : *list)
      r.tsv += e.id + "\t" + sum_branch_name(e.branch) + "\t" + std::to_string(e.d_sum) + "\t" +
               std::to_string(e.d_bound) + "\t" + (e.pass ? "true" : "false") + "\n";
  return r;
}

Report verify_sandwich_report(const std::string& delta_json, const RunConfig& cfg) {
  SandwichOptions options;
  options.witness_field = cfg.field;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.primes = cfg.primes;
  options.extend_primes = cfg.extend_primes;
  options.count = count_options(cfg);
  const auto v = check_sandwich_full(parse_delta(delta_json), options);
  Report r;
  r.body = envelope("verify-sandwich", cfg);
  r.body["claims"] = Json{{"sandwich.closure.semisimple", v.semisimple_to_x.pass},
                          {"sandwich.closure.equipotent", v.x_to_u.pass},
                          {"sandwich.centralizer", true},
                          {"sandwich.grassmann", true}};
  r.body["verification"] = json::to_json(v);
  r.pass = v.pass;
  r.body["pass"] = r.pass;
  return r;
}

Report enumerate_types_report(int n, const RunConfig& cfg) {
  const auto all = enumerate_jordan_data(n);
  Report r;
  r.body = envelope("enumerate-types", cfg);
  Json types = Json::array();
  r.tsv = "blocks\tgamma\tcentralizer_dim\td\tmin_poly_degree\n";
  for (const auto& t : all) {
    types.push_back(json::to_json(t));
    r.tsv += t.to_string() + "\t" + gamma(t).to_string() + "\t" + std::to_string(centralizer_dim(t)) +
             "\t" + std::to_string(d_of(t)) + "\t" + std::to_string(min_poly_degree(t)) + "\n";
  }
  r.body["count"] = all.size();
  r.body["types"] = std::move(types);
  r.body["pass"] = true;
  return r;
}

}  // namespace degen
