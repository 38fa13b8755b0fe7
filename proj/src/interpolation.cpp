#include <algorithm>

#include "degen/error.hpp"
#include "degen/grassmann.hpp"

namespace degen {

namespace {

// Newton form through (xs[i], ys[i]) converted to monomial coefficients.
std::vector<mpq_class> newton_fit(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  const std::size_t k = xs.size();
  std::vector<mpq_class> dd = ys;
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  // Horner on the Newton basis: p = dd[k-1]; p = p * (x - xs[i]) + dd[i]
  std::vector<mpq_class> poly{dd[k - 1]};
  for (std::size_t idx = k - 1; idx-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * xs[idx];
    }
    next[0] += dd[idx];
    poly = std::move(next);
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  return poly;
}

mpq_class evaluate(const std::vector<mpq_class>& poly, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

InterpolationResult interpolate_counts(std::span<const FixedCountSample> samples, int fit_points) {
  if (fit_points < 1 || static_cast<std::size_t>(fit_points) > samples.size())
    fail(ErrorCode::InvalidArgument, "fit_points must lie in [1, number of samples]");
  std::vector<mpq_class> xs;
  std::vector<mpq_class> ys;
  for (int i = 0; i < fit_points; ++i) {
    const auto& s = samples[static_cast<std::size_t>(i)];
    xs.emplace_back(mpz_class(static_cast<unsigned long>(s.q)));
    ys.emplace_back(mpz_class(static_cast<unsigned long>(s.count)));
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (xs[i] == xs[j]) fail(ErrorCode::InvalidArgument, "sample primes must be distinct");
  InterpolationResult result{-1, true, fit_points, newton_fit(xs, ys),
                             std::vector<FixedCountSample>(samples.begin(), samples.end())};
  result.dimension = static_cast<int>(result.coefficients.size()) - 1;
  for (std::size_t i = static_cast<std::size_t>(fit_points); i < samples.size(); ++i) {
    const mpq_class x(mpz_class(static_cast<unsigned long>(samples[i].q)));
    const mpq_class y(mpz_class(static_cast<unsigned long>(samples[i].count)));
    if (evaluate(result.coefficients, x) != y) result.certified = false;
  }
  if (result.dimension < 0) result.certified = false;
  return result;
}

InterpolationResult dimension_by_interpolation(const VarietyDescriptor& v, int d,
                                               std::span<const std::uint64_t> primes,
                                               const CountOptions& options,
                                               CountStrategy strategy) {
  const int n = v.n();
  if (d < 1 || d >= n)
    fail(ErrorCode::InfeasibleE, "dimension_by_interpolation needs 1 <= d < n");
  const int bound = d * (n - d);
  if (primes.size() < static_cast<std::size_t>(bound) + 2)
    fail(ErrorCode::InsufficientPrimes,
         "need at least " + std::to_string(bound + 2) + " primes for d = " + std::to_string(d) +
             ", n = " + std::to_string(n) + "; got " + std::to_string(primes.size()));
  const std::size_t m = v.eigenvalue_count();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]))
      fail(ErrorCode::InvalidArgument, std::to_string(primes[i]) + " is not prime");
    if (primes[i] <= m)
      fail(ErrorCode::InadmissiblePrime,
           "prime " + std::to_string(primes[i]) + " does not exceed the eigenvalue count " +
               std::to_string(m) + " of " + v.to_string());
    for (std::size_t j = 0; j < i; ++j)
      if (primes[i] == primes[j]) fail(ErrorCode::InvalidArgument, "primes must be distinct");
  }
  std::vector<FixedCountSample> samples;
  for (auto q : primes) samples.push_back(count_for_descriptor(v, d, q, options, strategy));
  auto result = interpolate_counts(samples, bound + 1);
  if (!result.certified)
    fail(ErrorCode::NotPolynomial,
         "point counts of " + v.to_string() + " on G(" + std::to_string(d) + "," +
             std::to_string(n) + ") are not reproduced by a polynomial of degree <= " +
             std::to_string(bound));
  return result;
}

}  // namespace degen
