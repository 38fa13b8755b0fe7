#include "degen/json_io.hpp"

#include "degen/error.hpp"

namespace degen::json {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
}

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorCode::Parse, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    malformed(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  malformed("matrix entries must be strings or integers");
}

Json scalars(const std::vector<Scalar>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const FieldSpec& f) {
  Json out;
  if (f.is_rational()) {
    out["kind"] = "rational";
  } else {
    out["kind"] = "prime";
    out["p"] = f.characteristic();
  }
  return out;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"field", to_json(m.field())}, {"entries", std::move(rows)}};
}

Json to_json(const Polynomial& f) {
  return Json{{"text", f.to_string()}, {"coefficients", scalars(f.coefficients())}};
}

Json to_json(const JordanData& delta) {
  Json out;
  out["n"] = delta.n();
  if (delta.concrete()) {
    out["field"] = to_json(delta.concrete()->front().eigenvalue.field());
    Json items = Json::array();
    for (const auto& eb : *delta.concrete())
      items.push_back(Json{{"eig", eb.eigenvalue.to_string()}, {"partition", to_json(eb.partition)}});
    out["concrete"] = std::move(items);
  }
  Json blocks = Json::array();
  for (const auto& b : delta.blocks()) blocks.push_back(to_json(b));
  out["blocks"] = std::move(blocks);
  return out;
}

Json to_json(const VarietyDescriptor& v) {
  Json out;
  switch (v.kind()) {
    case VarietyDescriptor::Kind::X: {
      out["kind"] = "X";
      out["n"] = v.n();
      Json blocks = Json::array();
      for (const auto& b : v.delta().blocks()) blocks.push_back(to_json(b));
      out["blocks"] = std::move(blocks);
      break;
    }
    case VarietyDescriptor::Kind::U:
      out["kind"] = "U";
      out["n"] = v.n();
      out["partition"] = to_json(v.partition());
      break;
    case VarietyDescriptor::Kind::S:
      out["kind"] = "S";
      out["n"] = v.n();
      out["partition"] = to_json(v.partition());
      break;
  }
  return out;
}

Json to_json(const SandwichReport& r) {
  return Json{{"delta", to_json(r.delta)},
              {"gamma", to_json(r.gamma)},
              {"gamma_t", to_json(r.gamma_t)},
              {"centralizer_dim", r.centralizer_dim},
              {"fixed_dims", r.fixed_dims},
              {"semisimple", to_json(r.semisimple())},
              {"middle", to_json(r.middle())},
              {"equipotent", to_json(r.equipotent())}};
}

Json to_json(const WitnessFamily& f) {
  Json blocks = Json::array();
  for (const auto& b : f.blocks) {
    Json runs = Json::array();
    for (const auto& run : b.diagonal)
      runs.push_back(Json{{"slot", f.slots[run.slot]}, {"multiplicity", run.multiplicity}});
    blocks.push_back(Json{{"size", b.size()}, {"diagonal", std::move(runs)}});
  }
  Json rule = Json::object();
  for (std::size_t s = 0; s < f.slots.size(); ++s) rule[f.slots[s]] = f.slots[f.specialization[s]];
  return Json{{"mode", witness_mode_name(f.mode)},
              {"n", f.n},
              {"slots", f.slots},
              {"blocks", std::move(blocks)},
              {"specialization", std::move(rule)},
              {"generic_type", to_json(f.generic_type)},
              {"special_type", to_json(f.special_type)}};
}

Json to_json(const WitnessReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"fiber", c.fiber},
                          {"values", scalars(c.values)},
                          {"observed", to_json(c.observed)},
                          {"commutant_dim", c.commutant},
                          {"type_ok", c.type_ok}});
  return Json{{"family", to_json(r.family)},
              {"field", to_json(r.field)},
              {"seed", r.seed},
              {"curve_mode", r.curve_mode},
              {"expected_centralizer_dim", r.expected_centralizer},
              {"checks", std::move(checks)},
              {"pass", r.pass}};
}

Json to_json(const FixedCountSample& s) {
  return Json{{"subject", s.subject},
              {"d", s.d},
              {"q", s.q},
              {"count", s.count},
              {"strategy", count_strategy_name(s.strategy)}};
}

Json to_json(const InterpolationResult& r) {
  Json coeffs = Json::array();
  for (const auto& c : r.coefficients) coeffs.push_back(c.get_str());
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(to_json(s));
  return Json{{"dimension", r.dimension},
              {"certified", r.certified},
              {"fitted_points", r.fitted_points},
              {"coefficients", std::move(coeffs)},
              {"samples", std::move(samples)}};
}

Json to_json(const CheckReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.per_e)
    rows.push_back(Json{{"e", row.e}, {"lhs", row.lhs}, {"rhs", row.rhs}});
  return Json{{"id", r.id},
              {"n", r.n},
              {"s", r.s},
              {"d_sum", r.d_sum},
              {"d_bound", r.d_bound},
              {"hypothesis_holds", r.hypothesis_holds},
              {"branch", sum_branch_name(r.branch)},
              {"per_e", std::move(rows)},
              {"pass", r.pass}};
}

Json to_json(const SumScanSummary& s) {
  Json exceptions = Json::array();
  for (const auto& r : s.exceptions) exceptions.push_back(to_json(r));
  Json counterexamples = Json::array();
  for (const auto& r : s.counterexamples) counterexamples.push_back(to_json(r));
  return Json{{"n", s.n},
              {"s", s.s},
              {"instances", s.instances},
              {"hypothesis_fails", s.hypothesis_fails},
              {"exception_cases", s.exception_cases},
              {"inequality_cases", s.inequality_cases},
              {"exceptions", std::move(exceptions)},
              {"counterexamples", std::move(counterexamples)},
              {"pass", s.pass}};
}

Json to_json(const SandwichVerification& v) {
  Json commutants = Json::array();
  for (const auto& [variety, dim] : v.commutants)
    commutants.push_back(Json{{"variety", to_json(variety)}, {"commutant_dim", dim}});
  Json dims = Json::array();
  for (const auto& c : v.dimensions)
    dims.push_back(Json{{"d", c.d},
                        {"variety", to_json(c.variety)},
                        {"primes", c.primes},
                        {"dimension", c.interpolation.dimension},
                        {"certified", c.interpolation.certified},
                        {"expected", c.expected},
                        {"pass", c.pass}});
  return Json{{"sandwich", to_json(v.sandwich)},
              {"semisimple_to_x", to_json(v.semisimple_to_x)},
              {"x_to_u", to_json(v.x_to_u)},
              {"commutants", std::move(commutants)},
              {"dimensions", std::move(dims)},
              {"pass", v.pass}};
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) malformed("a partition must be a JSON array of integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) malformed("partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "partition must be nonempty");
  return Partition(std::move(parts));
}

FieldSpec field_from_string(const std::string& text) {
  if (text == "Q" || text == "rational") return FieldSpec::rational();
  std::string digits = text;
  if (digits.rfind("F_", 0) == 0) digits = digits.substr(2);
  else if (digits.rfind("prime:", 0) == 0) digits = digits.substr(6);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    malformed("unrecognized field '" + text + "'");
  return FieldSpec::prime(std::stoull(digits));
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) return field_from_string(j.get<std::string>());
  if (j.is_number_unsigned() || j.is_number_integer()) return FieldSpec::prime(j.get<std::uint64_t>());
  const auto& kind = member(j, "kind");
  if (!kind.is_string()) malformed("field kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "rational") return FieldSpec::rational();
  if (k == "prime") {
    const auto& p = member(j, "p");
    if (!p.is_number_integer()) malformed("field p must be an integer");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  malformed("unknown field kind '" + k + "'");
}

Matrix matrix_from_json(const Json& j) {
  const FieldSpec field = j.contains("field") ? field_from_json(j.at("field")) : FieldSpec::rational();
  const auto& rows = member(j, "entries");
  if (!rows.is_array() || rows.empty()) malformed("entries must be a nonempty array of rows");
  const std::size_t cols = rows.front().is_array() ? rows.front().size() : 0;
  if (cols == 0) malformed("matrix rows must be nonempty arrays");
  std::vector<Scalar> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != cols) malformed("ragged matrix rows");
    for (const auto& x : row) entries.push_back(Scalar::parse(field, scalar_text(x)));
  }
  return Matrix(field, rows.size(), cols, std::move(entries));
}

JordanData jordan_data_from_json(const Json& j) {
  std::optional<JordanData> out;
  if (j.is_array()) {
    std::vector<Partition> blocks;
    for (const auto& p : j) blocks.push_back(partition_from_json(p));
    out.emplace(std::move(blocks));
  } else if (j.is_object() && j.contains("concrete")) {
    const FieldSpec field = j.contains("field") ? field_from_json(j.at("field")) : FieldSpec::rational();
    std::vector<EigenBlocks> concrete;
    for (const auto& item : j.at("concrete"))
      concrete.push_back({Scalar::parse(field, scalar_text(member(item, "eig"))),
                          partition_from_json(member(item, "partition"))});
    out.emplace(std::move(concrete));
  } else {
    const auto& blocks = member(j, "blocks");
    if (!blocks.is_array()) malformed("blocks must be an array of partitions");
    std::vector<Partition> parts;
    for (const auto& p : blocks) parts.push_back(partition_from_json(p));
    out.emplace(std::move(parts));
  }
  if (j.is_object() && j.contains("n") && j.at("n") != out->n())
    fail(ErrorCode::InvalidArgument, "declared n does not match the partition sizes");
  return *out;
}

VarietyDescriptor descriptor_from_json(const Json& j) {
  const auto& kind = member(j, "kind");
  if (!kind.is_string()) malformed("descriptor kind must be a string");
  const auto k = kind.get<std::string>();
  std::optional<VarietyDescriptor> out;
  if (k == "X") out = VarietyDescriptor::x(jordan_data_from_json(j));
  else if (k == "U") out = VarietyDescriptor::u(partition_from_json(member(j, "partition")));
  else if (k == "S") out = VarietyDescriptor::s(partition_from_json(member(j, "partition")));
  else malformed("descriptor kind must be X, U or S");
  if (j.contains("n") && j.at("n") != out->n())
    fail(ErrorCode::InvalidArgument, "declared n does not match the descriptor");
  return *out;
}

}  // namespace degen::json
