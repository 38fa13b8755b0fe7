#include "degen/checkers.hpp"

#include <functional>

#include "degen/error.hpp"
#include "degen/linear.hpp"

namespace degen {

const char* sum_branch_name(SumBranch b) noexcept {
  switch (b) {
    case SumBranch::HypothesisFails: return "hypothesis_fails";
    case SumBranch::ExceptionCase: return "exception_case";
    case SumBranch::InequalityCase: return "inequality_case";
  }
  return "?";
}

namespace {

std::string instance_id(const SumTheoremInstance& inst) {
  std::string out = "n=" + std::to_string(inst.n) + ";";
  for (std::size_t i = 0; i < inst.types.size(); ++i) {
    if (i) out += "|";
    out += inst.types[i].to_string();
  }
  return out;
}

}  // namespace

CheckReport check_sum_theorem(const SumTheoremInstance& instance) {
  const int n = instance.n;
  const int s = static_cast<int>(instance.types.size());
  if (s < 2) fail(ErrorCode::InvalidArgument, "sum theorem needs s >= 2");
  for (const auto& t : instance.types)
    if (t.n() != n)
      fail(ErrorCode::InvalidArgument, "type " + t.to_string() + " does not have size " +
                                           std::to_string(n));
  CheckReport report{instance_id(instance), n, s, 0, static_cast<std::int64_t>(s - 1) * n,
                     false, SumBranch::HypothesisFails, {}, true, instance.types};
  for (const auto& t : instance.types) report.d_sum += d_of(t);
  report.hypothesis_holds = report.d_sum <= report.d_bound;

  std::vector<Partition> duals;
  for (const auto& t : instance.types) duals.push_back(transpose(gamma(t)));
  for (int e = 1; e <= n / 2; ++e) {
    SumInequality row{e, 0, static_cast<std::int64_t>(s - 1) * e * (n - e)};
    for (const auto& dims : duals) row.lhs += fixed_dim_formula(dims.parts(), e);
    report.per_e.push_back(row);
  }

  if (!report.hypothesis_holds) return report;
  bool all_quadratic = true;
  for (const auto& t : instance.types) all_quadratic = all_quadratic && has_quadratic_minpoly(t);
  if (s == 2 && all_quadratic) {
    report.branch = SumBranch::ExceptionCase;
    return report;
  }
  report.branch = SumBranch::InequalityCase;
  for (const auto& row : report.per_e) report.pass = report.pass && row.lhs < row.rhs;
  return report;
}

SumScanSummary exhaustive_sum_scan(int n, int s, bool stop_at_first) {
  if (n < 1 || n > kMaxScanN)
    fail(ErrorCode::InvalidArgument, "scan size n must lie in [1, " + std::to_string(kMaxScanN) + "]");
  if (s != 2 && s != 3) fail(ErrorCode::InvalidArgument, "scan supports s in {2, 3}");
  const auto types = enumerate_jordan_data(n);
  SumScanSummary summary;
  summary.n = n;
  summary.s = s;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(idx.size()) == s) {
      SumTheoremInstance inst{n, {}};
      for (auto i : idx) inst.types.push_back(types[i]);
      const auto report = check_sum_theorem(inst);
      ++summary.instances;
      switch (report.branch) {
        case SumBranch::HypothesisFails: ++summary.hypothesis_fails; break;
        case SumBranch::ExceptionCase:
          ++summary.exception_cases;
          summary.exceptions.push_back(report);
          break;
        case SumBranch::InequalityCase: ++summary.inequality_cases; break;
      }
      if (!report.pass) {
        summary.pass = false;
        if (stop_at_first)
          fail(ErrorCode::CounterexampleFound, "sum inequality fails for " + report.id);
        summary.counterexamples.push_back(report);
      }
      return;
    }
    for (std::size_t i = from; i < types.size(); ++i) {
      idx.push_back(i);
      rec(i);
      idx.pop_back();
    }
  };
  rec(0);
  return summary;
}

namespace {

DimensionCheck check_dimension(const VarietyDescriptor& v, int d, std::int64_t expected,
                               const SandwichOptions& options, DimensionCache* cache) {
  const auto key = std::make_pair(v.to_string(), d);
  if (cache) {
    const auto it = cache->find(key);
    if (it != cache->end()) {
      DimensionCheck hit = it->second;
      hit.expected = expected;
      hit.pass = hit.interpolation.certified && hit.interpolation.dimension == expected;
      return hit;
    }
  }
  const auto primes = options.extend_primes
                          ? admissible_prime_schedule(options.primes, v.eigenvalue_count(), v.n(), d)
                          : options.primes;
  DimensionCheck check{d, v, primes, dimension_by_interpolation(v, d, primes, options.count),
                       expected, false};
  check.pass = check.interpolation.certified && check.interpolation.dimension == expected;
  if (cache) cache->emplace(key, check);
  return check;
}

}  // namespace

SandwichVerification check_sandwich_full(const JordanData& delta, const SandwichOptions& options,
                                         DimensionCache* cache) {
  const SandwichReport report = sandwich(delta);
  SandwichVerification out{
      report,
      verify_witness(family_semisimple_to_x(delta), options.witness_field, options.samples,
                     options.seed),
      verify_witness(family_x_to_u(delta), options.witness_field, options.samples, options.seed),
      {},
      {},
      true};

  const VarietyDescriptor varieties[] = {report.semisimple(), report.middle(), report.equipotent()};
  for (const auto& v : varieties) {
    const auto dim = commutant_dim(representative(v, FieldSpec::rational()));
    out.commutants.emplace_back(v, dim);
    if (dim != report.centralizer_dim)
      fail(ErrorCode::CheckFailed, "commutant of " + v.to_string() + " has dimension " +
                                       std::to_string(dim) + ", expected " +
                                       std::to_string(report.centralizer_dim));
  }

  std::vector<int> ds = options.d_values;
  if (ds.empty())
    for (int d = 1; d < delta.n(); ++d) ds.push_back(d);
  for (int d : ds) {
    if (d < 1 || d >= delta.n())
      fail(ErrorCode::InvalidArgument, "d = " + std::to_string(d) + " outside [1, n)");
    const auto expected = report.fixed_dims[static_cast<std::size_t>(d - 1)];
    for (const auto& v : varieties) {
      auto check = check_dimension(v, d, expected, options, cache);
      if (!check.pass)
        fail(ErrorCode::CheckFailed, "fixed-space dimension of " + v.to_string() + " on G_" +
                                         std::to_string(d) + " is " +
                                         std::to_string(check.interpolation.dimension) +
                                         ", expected " + std::to_string(expected));
      out.dimensions.push_back(std::move(check));
    }
  }
  return out;
}

}  // namespace degen
