#include "degen/witness.hpp"

#include <algorithm>
#include <random>

#include "degen/error.hpp"
#include "degen/linear.hpp"

namespace degen {

Matrix regular_block(const std::vector<std::pair<Scalar, int>>& diagonal) {
  if (diagonal.empty()) fail(ErrorCode::InvalidArgument, "regular_block needs a diagonal");
  const FieldSpec field = diagonal.front().first.field();
  std::vector<Scalar> values;
  for (const auto& [value, mult] : diagonal) {
    if (mult <= 0) fail(ErrorCode::InvalidArgument, "multiplicities must be positive");
    for (int k = 0; k < mult; ++k) values.push_back(value);
  }
  Matrix m = Matrix::diagonal(values);
  for (std::size_t i = 0; i + 1 < m.rows(); ++i) m(i, i + 1) = Scalar(field, 1);
  return m;
}

const char* witness_mode_name(WitnessMode mode) noexcept {
  return mode == WitnessMode::SemisimpleToX ? "ss-to-x" : "x-to-u";
}

WitnessMode parse_witness_mode(const std::string& text) {
  if (text == "ss-to-x") return WitnessMode::SemisimpleToX;
  if (text == "x-to-u") return WitnessMode::XToU;
  fail(ErrorCode::InvalidArgument, "unknown witness mode '" + text + "'");
}

int WitnessBlock::size() const noexcept {
  int total = 0;
  for (const auto& run : diagonal) total += run.multiplicity;
  return total;
}

Matrix WitnessFamily::evaluate(const std::vector<Scalar>& values) const {
  if (values.size() != slots.size())
    fail(ErrorCode::InvalidArgument, "expected one value per slot");
  std::vector<Matrix> pieces;
  for (const auto& block : blocks) {
    std::vector<std::pair<Scalar, int>> diagonal;
    for (const auto& run : block.diagonal)
      diagonal.emplace_back(values[run.slot], run.multiplicity);
    pieces.push_back(regular_block(diagonal));
  }
  return Matrix::direct_sum(pieces);
}

std::vector<Scalar> WitnessFamily::specialize(const std::vector<Scalar>& values) const {
  std::vector<Scalar> out;
  out.reserve(values.size());
  for (std::size_t s = 0; s < slots.size(); ++s) out.push_back(values[specialization[s]]);
  return out;
}

std::vector<std::size_t> WitnessFamily::target_slots() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (specialization[s] == s) out.push_back(s);
  return out;
}

WitnessFamily family_semisimple_to_x(const JordanData& delta) {
  const JordanData abstract = delta.abstract();
  WitnessFamily family{WitnessMode::SemisimpleToX,
                       abstract.n(),
                       {},
                       {},
                       {},
                       VarietyDescriptor::s(transpose(gamma(abstract))),
                       VarietyDescriptor::x(abstract)};
  for (std::size_t j = 0; j < abstract.m(); ++j) {
    const Partition& lambda = abstract.blocks()[j];
    const std::size_t first = family.slots.size();
    for (int i = 1; i <= lambda.largest(); ++i) {
      family.slots.push_back("a_" + std::to_string(j + 1) + "_" + std::to_string(i));
      family.specialization.push_back(first);
    }
    for (int part : lambda.parts()) {
      WitnessBlock block;
      for (int i = 0; i < part; ++i)
        block.diagonal.push_back({first + static_cast<std::size_t>(i), 1});
      family.blocks.push_back(std::move(block));
    }
  }
  return family;
}

WitnessFamily family_x_to_u(const JordanData& delta) {
  const JordanData abstract = delta.abstract();
  const Partition g = gamma(abstract);
  WitnessFamily family{WitnessMode::XToU,
                       abstract.n(),
                       {},
                       {},
                       {},
                       VarietyDescriptor::x(abstract),
                       VarietyDescriptor::u(g)};
  for (std::size_t i = 0; i < abstract.m(); ++i) {
    family.slots.push_back("alpha_" + std::to_string(i + 1));
    family.specialization.push_back(0);
  }
  for (std::size_t col = 0; col < g.length(); ++col) {
    WitnessBlock block;
    for (std::size_t i = 0; i < abstract.m(); ++i) {
      const int mult = abstract.blocks()[i].part_or_zero(col);
      if (mult > 0) block.diagonal.push_back({i, mult});
    }
    family.blocks.push_back(std::move(block));
  }
  return family;
}

WitnessFamily make_family(WitnessMode mode, const JordanData& delta) {
  return mode == WitnessMode::SemisimpleToX ? family_semisimple_to_x(delta)
                                            : family_x_to_u(delta);
}

std::uint64_t first_admissible_prime(const WitnessFamily& family) {
  return next_prime(family.slots.size());
}

namespace {

Scalar random_scalar(FieldSpec field, std::mt19937_64& rng) {
  if (field.is_prime()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
    return Scalar(field, static_cast<long>(dist(rng)));
  }
  std::uniform_int_distribution<long> num(-64, 64);
  std::uniform_int_distribution<long> den(1, 8);
  const long a = num(rng);
  const long b = den(rng);
  return Scalar(field, mpq_class(a, b));
}

bool pairwise_distinct(std::vector<Scalar> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

std::vector<Scalar> distinct_values(FieldSpec field, std::size_t count,
                                    std::mt19937_64& rng) {
  while (true) {
    std::vector<Scalar> values;
    for (std::size_t i = 0; i < count; ++i) values.push_back(random_scalar(field, rng));
    if (pairwise_distinct(values)) return values;
  }
}

void check_field(const WitnessFamily& family, FieldSpec field) {
  if (field.is_prime() && field.characteristic() <= family.slots.size())
    fail(ErrorCode::FieldTooSmall,
         field.to_string() + " is too small for " + std::to_string(family.slots.size()) +
             " pairwise distinct slot values (need p > " +
             std::to_string(family.slots.size()) + ")");
}

std::string describe(const std::vector<Scalar>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].to_string();
  }
  return out + "]";
}

FiberCheck check_fiber(const WitnessFamily& family, const std::vector<Scalar>& values,
                       const std::string& fiber, const VarietyDescriptor& expected,
                       std::int64_t centralizer) {
  const Matrix m = family.evaluate(values);
  FiberCheck check{values, fiber, jordan_type_of(m), commutant_dim(m), false};
  check.type_ok = membership(m, expected);
  if (!check.type_ok)
    fail(ErrorCode::TypeMismatch,
         std::string(witness_mode_name(family.mode)) + " " + fiber + " fiber at " +
             describe(values) + " has type " + check.observed.to_string() +
             ", expected " + expected.to_string());
  if (check.commutant != centralizer)
    fail(ErrorCode::TypeMismatch,
         std::string(witness_mode_name(family.mode)) + " " + fiber + " fiber at " +
             describe(values) + " has commutant dimension " +
             std::to_string(check.commutant) + ", expected " + std::to_string(centralizer));
  return check;
}

}  // namespace

WitnessReport verify_witness(const WitnessFamily& family, FieldSpec field, int samples,
                             std::uint64_t seed) {
  if (samples < 1) fail(ErrorCode::InvalidArgument, "samples must be positive");
  check_field(family, field);
  const std::int64_t centralizer = centralizer_dim(family.special_type.jordan_data());
  WitnessReport report{family, field, seed, false, {}, centralizer, true};
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const auto values = distinct_values(field, family.slots.size(), rng);
    report.checks.push_back(
        check_fiber(family, values, "generic", family.generic_type, centralizer));
    report.checks.push_back(check_fiber(family, family.specialize(values), "special",
                                        family.special_type, centralizer));
  }
  return report;
}

WitnessReport verify_witness_curve(const WitnessFamily& family, FieldSpec field,
                                   int samples, std::uint64_t seed, int curve_points) {
  if (samples < 1 || curve_points < 1)
    fail(ErrorCode::InvalidArgument, "samples and curve points must be positive");
  check_field(family, field);
  const std::int64_t centralizer = centralizer_dim(family.special_type.jordan_data());
  WitnessReport report{family, field, seed, true, {}, centralizer, true};
  std::mt19937_64 rng(seed);
  const std::size_t count = family.slots.size();
  for (int s = 0; s < samples; ++s) {
    // Offsets must be nonzero and distinct within each specialization group,
    // otherwise no t separates the slots. Over a small F_p every t can still
    // collide across groups, so the whole draw is retried a bounded number of
    // times.
    std::vector<Scalar> base;
    std::vector<Scalar> offsets;
    std::vector<Scalar> ts;
    auto at = [&](const Scalar& t) {
      std::vector<Scalar> values;
      for (std::size_t i = 0; i < count; ++i) values.push_back(base[i] + t * offsets[i]);
      return values;
    };
    bool found = false;
    for (int attempt = 0; attempt < 256 && !found; ++attempt) {
      base = family.specialize(distinct_values(field, count, rng));
      offsets.assign(count, Scalar(field));
      bool offsets_ok = true;
      for (std::size_t i = 0; i < count && offsets_ok; ++i) {
        if (family.specialization[i] == i) continue;
        Scalar o = random_scalar(field, rng);
        int tries = 0;
        auto clashes = [&](const Scalar& c) {
          if (c.is_zero()) return true;
          for (std::size_t j = 0; j < i; ++j)
            if (family.specialization[j] == family.specialization[i] && offsets[j] == c)
              return true;
          return false;
        };
        while (clashes(o) && ++tries < 1024) o = random_scalar(field, rng);
        offsets_ok = !clashes(o);
        offsets[i] = o;
      }
      if (!offsets_ok) continue;
      ts.clear();
      for (int tries = 0; tries < 1024 && static_cast<int>(ts.size()) < curve_points; ++tries) {
        const Scalar t = random_scalar(field, rng);
        if (t.is_zero() || !pairwise_distinct(at(t))) continue;
        ts.push_back(t);
      }
      found = static_cast<int>(ts.size()) == curve_points;
    }
    if (!found)
      fail(ErrorCode::FieldTooSmall,
           "no generic curve points found over " + field.to_string());
    for (const auto& t : ts)
      report.checks.push_back(check_fiber(family, at(t), "curve t=" + t.to_string(),
                                          family.generic_type, centralizer));
    report.checks.push_back(check_fiber(family, at(Scalar(field, 0)), "curve t=0",
                                        family.special_type, centralizer));
  }
  return report;
}

}  // namespace degen
