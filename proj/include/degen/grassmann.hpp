#ifndef DEGEN_GRASSMANN_HPP
#define DEGEN_GRASSMANN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "degen/variety.hpp"

namespace degen {

/// Number of d-dimensional subspaces of F_q^n.
mpz_class gaussian_binomial(int n, int d, std::uint64_t q);

/// Polynomial in q with integer coefficients, lowest degree first.
class CountPolynomial {
 public:
  CountPolynomial() = default;
  explicit CountPolynomial(std::vector<mpz_class> coefficients);

  static CountPolynomial constant(long c) { return CountPolynomial({mpz_class(c)}); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  mpz_class evaluate(std::uint64_t q) const;
  std::string to_string() const;

  CountPolynomial operator+(const CountPolynomial& rhs) const;
  CountPolynomial operator*(const CountPolynomial& rhs) const;
  /// Multiply by q^k.
  CountPolynomial shifted(int k) const;
  friend bool operator==(const CountPolynomial&, const CountPolynomial&) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// [n choose d]_q as a polynomial, via the q-Pascal recurrence.
CountPolynomial gaussian_binomial_polynomial(int n, int d);

/// Sum over compositions (e_i) of d with e_i <= dims_i of the product of
/// [dims_i choose e_i]_q. Its degree is checked against fixed_dim_formula.
CountPolynomial semisimple_count_polynomial(std::span<const int> dims, int d);

inline constexpr std::uint64_t kDefaultMaxEnumeration = 50'000'000;

struct CountOptions {
  /// Refuse to enumerate more than this many subspaces.
  std::uint64_t max_enum = kDefaultMaxEnumeration;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Number of d-dimensional subspaces W of F_q^n with AW contained in W, by
/// enumerating reduced row echelon bases pivot pattern by pivot pattern.
/// A must be square over a prime field. Throws GuardrailExceeded when the
/// Grassmannian has more than options.max_enum points.
std::uint64_t count_fixed_subspaces(const Matrix& a, int d, const CountOptions& options = {});

/// Same count via the primary decomposition: an invariant subspace is the
/// direct sum of its intersections with the generalized eigenspaces, so the
/// count is a convolution of counts for the nilpotent parts, each obtained
/// by enumeration on its own (smaller) Grassmannians.
std::uint64_t count_fixed_subspaces_by_decomposition(const Matrix& a, int d,
                                                     const CountOptions& options = {});

enum class CountStrategy { Auto, Direct, Decomposition };

const char* count_strategy_name(CountStrategy s) noexcept;

struct FixedCountSample {
  std::string subject;  // descriptor or "matrix"
  int d;
  std::uint64_t q;
  std::uint64_t count;
  CountStrategy strategy;  // never Auto once recorded
};

/// Count for the deterministic representative of `v` over F_q. Auto picks
/// direct enumeration within the guardrail and falls back to the
/// decomposition when the representative has several eigenvalues.
FixedCountSample count_for_descriptor(const VarietyDescriptor& v, int d, std::uint64_t q,
                                      const CountOptions& options = {},
                                      CountStrategy strategy = CountStrategy::Auto);

struct InterpolationResult {
  int dimension;
  bool certified;
  int fitted_points;
  std::vector<mpq_class> coefficients;  // monomial basis, lowest degree first
  std::vector<FixedCountSample> samples;
};

/// Fits the interpolating polynomial through the first `fit_points`
/// (q, count) samples with exact rational arithmetic and checks that it
/// reproduces every remaining sample.
InterpolationResult interpolate_counts(std::span<const FixedCountSample> samples, int fit_points);

/// Dimension of the variety of invariant d-subspaces of v's representative,
/// as the degree of the point-count polynomial. Requires at least
/// d(n-d)+2 distinct primes, each larger than the eigenvalue count of the
/// representative. Throws NotPolynomial when the held-out samples disagree.
InterpolationResult dimension_by_interpolation(const VarietyDescriptor& v, int d,
                                               std::span<const std::uint64_t> primes,
                                               const CountOptions& options = {},
                                               CountStrategy strategy = CountStrategy::Auto);

/// Primes from `preferred` larger than eigenvalue_count, topped up with the
/// next primes beyond max(preferred) until there are d(n-d)+2 of them.
std::vector<std::uint64_t> admissible_prime_schedule(std::span<const std::uint64_t> preferred,
                                                     std::size_t eigenvalue_count, int n, int d);

}  // namespace degen

#endif
