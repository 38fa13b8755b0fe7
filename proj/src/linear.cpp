#include "degen/linear.hpp"

#include <algorithm>

#include "degen/error.hpp"

namespace degen {

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  const std::size_t rows = work.rows();
  const std::size_t cols = work.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && work(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(work(pivot, j), work(r, j));
    const Scalar inv = work(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (work(i, c).is_zero()) continue;
      const Scalar factor = work(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j)
        if (!work(r, j).is_zero()) work(i, j) -= factor * work(r, j);
    }
    ++r;
  }
  return r;
}

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::InvalidArgument, "char_poly of non-square matrix");
  const FieldSpec field = m.field();
  const std::size_t n = m.rows();
  // Coefficients of the running char poly of the leading r x r block,
  // highest degree first.
  std::vector<Scalar> poly{Scalar(field, 1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading block is r x r; R is row r, C column r (first r entries).
    std::vector<Scalar> toeplitz;
    toeplitz.reserve(r + 2);
    toeplitz.push_back(Scalar(field, 1));
    toeplitz.push_back(-m(r, r));
    std::vector<Scalar> v(r, Scalar(field));  // A_r^k C
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Scalar dot(field);
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * v[i];
      toeplitz.push_back(-dot);
      if (k + 1 < r) {
        std::vector<Scalar> next(r, Scalar(field));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
        v = std::move(next);
      }
    }
    // poly_{r+1} = T * poly_r with T lower-triangular Toeplitz (r+2) x (r+1)
    std::vector<Scalar> next(r + 2, Scalar(field));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        next[i] += toeplitz[i - j] * poly[j];
    poly = std::move(next);
  }
  std::reverse(poly.begin(), poly.end());
  return Polynomial(field, std::move(poly));
}

namespace {

// Positive divisors of |value| (value != 0) via trial division.
std::vector<mpz_class> divisors(const mpz_class& value) {
  mpz_class rest = abs(value);
  std::vector<std::pair<mpz_class, int>> factors;
  constexpr unsigned long kTrialLimit = 10'000'000;
  for (unsigned long d = 2; d <= kTrialLimit && rest > 1; ++d) {
    if (mpz_class(d) * d > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      rest /= d;
      ++e;
    }
    if (e) factors.emplace_back(mpz_class(d), e);
  }
  if (rest > 1) {
    if (mpz_class(kTrialLimit) * kTrialLimit < rest &&
        mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0)
      fail(ErrorCode::GuardrailExceeded,
           "rational root search: coefficient too large to factor");
    factors.emplace_back(rest, 1);
  }
  std::vector<mpz_class> out{1};
  for (const auto& [prime, e] : factors) {
    const std::size_t base = out.size();
    mpz_class power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

std::vector<Scalar> rational_root_candidates(const Polynomial& f) {
  const FieldSpec field = f.field();
  mpz_class lcm = 1;
  for (const auto& c : f.coefficients())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : f.coefficients()) {
    mpq_class scaled = c.value() * lcm;
    ints.push_back(scaled.get_num());
  }
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  std::vector<Scalar> out;
  if (low > 0) out.emplace_back(field, 0);
  if (low + 1 >= ints.size()) return out;
  for (const auto& u : divisors(ints[low]))
    for (const auto& v : divisors(ints.back())) {
      const mpq_class r(u, v);
      out.emplace_back(field, r);
      out.emplace_back(field, mpq_class(-r));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<RootMultiplicity> split_roots(const Polynomial& f) {
  if (f.degree() < 1 || !f.is_monic())
    fail(ErrorCode::InvalidArgument, "split_roots expects a monic polynomial of degree >= 1");
  const FieldSpec field = f.field();
  std::vector<Scalar> candidates;
  if (field.is_prime()) {
    for (std::uint64_t r = 0; r < field.characteristic(); ++r)
      candidates.emplace_back(field, static_cast<long>(r));
  } else {
    candidates = rational_root_candidates(f);
  }
  std::vector<RootMultiplicity> roots;
  Polynomial rest = f;
  for (const auto& c : candidates) {
    if (rest.degree() == 0) break;
    int mult = 0;
    while (rest.degree() > 0 && rest.evaluate(c).is_zero()) {
      rest = rest.deflate(c);
      ++mult;
    }
    if (mult) roots.push_back({c, mult});
  }
  if (rest.degree() != 0)
    fail(ErrorCode::NonSplit, "characteristic polynomial " + f.to_string() +
                                  " does not split over " + field.to_string());
  return roots;
}

std::int64_t commutant_dim(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::InvalidArgument, "commutant of non-square matrix");
  const std::size_t n = a.rows();
  const FieldSpec field = a.field();
  Matrix op(field, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        op(row, k * n + j) += a(i, k);
        op(row, i * n + k) -= a(k, j);
      }
    }
  return static_cast<std::int64_t>(n * n) - static_cast<std::int64_t>(rank(op));
}

}  // namespace degen
