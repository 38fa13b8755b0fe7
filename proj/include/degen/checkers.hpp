#ifndef DEGEN_CHECKERS_HPP
#define DEGEN_CHECKERS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degen/grassmann.hpp"
#include "degen/witness.hpp"

namespace degen {

struct SumTheoremInstance {
  int n;
  std::vector<JordanData> types;  // s = types.size() >= 2, each of size n
};

enum class SumBranch { HypothesisFails, ExceptionCase, InequalityCase };

const char* sum_branch_name(SumBranch b) noexcept;

struct SumInequality {
  int e;
  std::int64_t lhs;  // sum of fixed dimensions on G_e
  std::int64_t rhs;  // (s-1) e (n-e)
};

struct CheckReport {
  std::string id;
  int n;
  int s;
  std::int64_t d_sum;
  std::int64_t d_bound;  // (s-1) n
  bool hypothesis_holds;
  SumBranch branch;
  std::vector<SumInequality> per_e;  // 1 <= e <= n/2
  bool pass;
  std::vector<JordanData> types;
};

/// If sum d(A_i) <= (s-1)n then either s = 2 with both minimal polynomials
/// quadratic (recorded, nothing asserted), or the strict inequality must hold
/// for every 1 <= e <= floor(n/2).
CheckReport check_sum_theorem(const SumTheoremInstance& instance);

struct SumScanSummary {
  int n;
  int s;
  std::size_t instances = 0;
  std::size_t hypothesis_fails = 0;
  std::size_t exception_cases = 0;
  std::size_t inequality_cases = 0;
  std::vector<CheckReport> exceptions;
  std::vector<CheckReport> counterexamples;  // only filled when not stopping at the first
  bool pass = true;
};

inline constexpr int kMaxScanN = 8;

/// All multisets of s Jordan types of size n. Throws CounterexampleFound on
/// the first failing instance, or with stop_at_first = false records every
/// failing instance in `counterexamples` and clears `pass`.
SumScanSummary exhaustive_sum_scan(int n, int s, bool stop_at_first = true);

struct SandwichOptions {
  FieldSpec witness_field = FieldSpec::rational();
  int samples = 3;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  /// Drop primes not exceeding a representative's eigenvalue count and top
  /// up with the following primes; when false the list is used verbatim.
  bool extend_primes = true;
  /// Subspace dimensions to check; empty means 1..n-1.
  std::vector<int> d_values;
  CountOptions count;
};

struct DimensionCheck {
  int d;
  VarietyDescriptor variety;
  std::vector<std::uint64_t> primes;
  InterpolationResult interpolation;
  std::int64_t expected;
  bool pass;
};

struct SandwichVerification {
  SandwichReport sandwich;
  WitnessReport semisimple_to_x;
  WitnessReport x_to_u;
  std::vector<std::pair<VarietyDescriptor, std::int64_t>> commutants;
  std::vector<DimensionCheck> dimensions;
  bool pass;
};

/// Memo for repeated interpolation of the same representative.
using DimensionCache = std::map<std::pair<std::string, int>, DimensionCheck>;

/// Full check of the sandwich for one delta: both witness families,
/// commutant dimensions of the three representatives, and interpolated
/// fixed-space dimensions against the closed form. Throws (with the failing
/// sub-check in the message) on any failure.
SandwichVerification check_sandwich_full(const JordanData& delta, const SandwichOptions& options,
                                         DimensionCache* cache = nullptr);

}  // namespace degen

#endif
