#include "degen/grassmann.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "degen/error.hpp"
#include "degen/linear.hpp"

namespace degen {

mpz_class gaussian_binomial(int n, int d, std::uint64_t q) {
  if (n < 0 || d < 0 || d > n)
    fail(ErrorCode::InvalidArgument, "gaussian_binomial needs 0 <= d <= n");
  if (q < 2) fail(ErrorCode::InvalidArgument, "gaussian_binomial needs q >= 2");
  mpz_class num = 1;
  mpz_class den = 1;
  const mpz_class base(static_cast<unsigned long>(q));
  for (int i = 0; i < d; ++i) {
    mpz_class top;
    mpz_class bottom;
    mpz_pow_ui(top.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(bottom.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(d - i));
    num *= top - 1;
    den *= bottom - 1;
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

CountPolynomial::CountPolynomial(std::vector<mpz_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void CountPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class CountPolynomial::evaluate(std::uint64_t q) const {
  mpz_class acc = 0;
  const mpz_class x(static_cast<unsigned long>(q));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string CountPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const mpz_class mag = abs(c);
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k > 0) out += k == 1 ? "q" : "q^" + std::to_string(k);
  }
  return out;
}

CountPolynomial CountPolynomial::operator+(const CountPolynomial& rhs) const {
  std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return CountPolynomial(std::move(out));
}

CountPolynomial CountPolynomial::operator*(const CountPolynomial& rhs) const {
  if (coeffs_.empty() || rhs.coeffs_.empty()) return CountPolynomial();
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return CountPolynomial(std::move(out));
}

CountPolynomial CountPolynomial::shifted(int k) const {
  if (coeffs_.empty()) return *this;
  std::vector<mpz_class> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return CountPolynomial(std::move(out));
}

CountPolynomial gaussian_binomial_polynomial(int n, int d) {
  if (n < 0 || d < 0 || d > n)
    fail(ErrorCode::InvalidArgument, "gaussian_binomial_polynomial needs 0 <= d <= n");
  // row[k] = [m choose k]_q for the current m
  std::vector<CountPolynomial> row{CountPolynomial::constant(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<CountPolynomial> next(static_cast<std::size_t>(m + 1));
    next[0] = CountPolynomial::constant(1);
    next[static_cast<std::size_t>(m)] = CountPolynomial::constant(1);
    for (int k = 1; k < m; ++k)
      next[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(k)].shifted(k);
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(d)];
}

namespace {

void semisimple_rec(std::span<const int> dims, std::size_t index, int remaining,
                    const CountPolynomial& acc, CountPolynomial& total) {
  if (index == dims.size()) {
    if (remaining == 0) total = total + acc;
    return;
  }
  for (int e = 0; e <= std::min(dims[index], remaining); ++e)
    semisimple_rec(dims, index + 1, remaining - e,
                   acc * gaussian_binomial_polynomial(dims[index], e), total);
}

}  // namespace

CountPolynomial semisimple_count_polynomial(std::span<const int> dims, int d) {
  const auto expected_degree = fixed_dim_formula(dims, d);  // validates d
  CountPolynomial total;
  semisimple_rec(dims, 0, d, CountPolynomial::constant(1), total);
  if (total.degree() != expected_degree)
    fail(ErrorCode::Internal, "semisimple count degree " + std::to_string(total.degree()) +
                                  " differs from fixed-dimension formula " +
                                  std::to_string(expected_degree));
  return total;
}

namespace {

// Enumerates reduced row echelon d x n matrices R for one pivot pattern and
// counts those whose row space W satisfies A W within W. The free entries
// run as an odometer; each step adds 1 (mod q) to one entry R[i][c], so the
// cached images v_i = A R_i^T only need the column A[:, c] added.
class PatternCounter {
 public:
  PatternCounter(const std::vector<std::uint32_t>& columns, int n, int d, std::uint32_t q)
      : columns_(columns), n_(n), d_(d), q_(q) {}

  std::uint64_t count(const std::vector<int>& pivots) const {
    const auto n = static_cast<std::size_t>(n_);
    const auto d = static_cast<std::size_t>(d_);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::size_t> non_pivot;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) non_pivot.push_back(c);

    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t c = static_cast<std::size_t>(pivots[i]) + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(i, c);

    std::vector<std::uint32_t> r(d * n, 0);
    std::vector<std::uint32_t> v(d * n, 0);
    for (std::size_t i = 0; i < d; ++i) {
      const auto p = static_cast<std::size_t>(pivots[i]);
      r[i * n + p] = 1;
      for (std::size_t k = 0; k < n; ++k) v[i * n + k] = columns_[p * n + k];
    }

    std::uint64_t hits = 0;
    while (true) {
      if (invariant(pivots, non_pivot, r, v)) ++hits;
      bool exhausted = true;
      for (std::size_t pos = free.size(); pos > 0; --pos) {
        const auto [i, c] = free[pos - 1];
        std::uint32_t& entry = r[i * n + c];
        for (std::size_t k = 0; k < n; ++k) {
          std::uint32_t& slot = v[i * n + k];
          slot += columns_[c * n + k];
          if (slot >= q_) slot -= q_;
        }
        if (++entry < q_) {
          exhausted = false;
          break;
        }
        entry = 0;
      }
      if (exhausted) return hits;
    }
  }

 private:
  bool invariant(const std::vector<int>& pivots, const std::vector<std::size_t>& non_pivot,
                 const std::vector<std::uint32_t>& r, const std::vector<std::uint32_t>& v) const {
    const auto n = static_cast<std::size_t>(n_);
    const auto d = static_cast<std::size_t>(d_);
    for (std::size_t i = 0; i < d; ++i) {
      const std::uint32_t* vi = &v[i * n];
      // A R_i lies in W iff it equals the combination of the rows selected
      // by its pivot coordinates.
      for (std::size_t k : non_pivot) {
        std::uint64_t sum = 0;
        for (std::size_t j = 0; j < d; ++j)
          sum += static_cast<std::uint64_t>(vi[pivots[j]]) * r[j * n + k];
        if (sum % q_ != vi[k]) return false;
      }
    }
    return true;
  }

  const std::vector<std::uint32_t>& columns_;
  int n_;
  int d_;
  std::uint32_t q_;
};

void pivot_patterns(int n, int d, int from, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == d) {
    out.push_back(current);
    return;
  }
  for (int c = from; c <= n - (d - static_cast<int>(current.size())); ++c) {
    current.push_back(c);
    pivot_patterns(n, d, c + 1, current, out);
    current.pop_back();
  }
}

void check_enumerable(int n, int d, std::uint64_t q, const CountOptions& options) {
  const mpz_class total = gaussian_binomial(n, d, q);
  if (total > mpz_class(static_cast<unsigned long>(options.max_enum)))
    fail(ErrorCode::GuardrailExceeded,
         "G(" + std::to_string(d) + ", F_" + std::to_string(q) + "^" + std::to_string(n) +
             ") has " + total.get_str() + " points, above the enumeration limit " +
             std::to_string(options.max_enum));
}

}  // namespace

std::uint64_t count_fixed_subspaces(const Matrix& a, int d, const CountOptions& options) {
  if (!a.is_square()) fail(ErrorCode::InvalidArgument, "count_fixed_subspaces needs a square matrix");
  if (!a.field().is_prime())
    fail(ErrorCode::InvalidArgument, "count_fixed_subspaces needs a prime field");
  const int n = static_cast<int>(a.rows());
  if (d < 0 || d > n)
    fail(ErrorCode::InfeasibleE, "subspace dimension " + std::to_string(d) + " outside [0, " +
                                     std::to_string(n) + "]");
  const std::uint64_t q = a.field().characteristic();
  if (q >= (1u << 16)) fail(ErrorCode::GuardrailExceeded, "field too large for enumeration");
  if (d == 0 || d == n) return 1;
  check_enumerable(n, d, q, options);

  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint32_t> columns(un * un);
  for (std::size_t r = 0; r < un; ++r)
    for (std::size_t c = 0; c < un; ++c)
      columns[c * un + r] = static_cast<std::uint32_t>(a(r, c).value().get_num().get_ui());

  std::vector<std::vector<int>> patterns;
  std::vector<int> current;
  pivot_patterns(n, d, 0, current, patterns);

  const PatternCounter counter(columns, n, d, static_cast<std::uint32_t>(q));
  std::vector<std::uint64_t> per_pattern(patterns.size(), 0);
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(patterns.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < patterns.size(); ++i) per_pattern[i] = counter.count(patterns[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < patterns.size(); i = next++)
          per_pattern[i] = counter.count(patterns[i]);
      });
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0;
  for (auto c : per_pattern) total += c;
  return total;
}

std::uint64_t count_fixed_subspaces_by_decomposition(const Matrix& a, int d,
                                                     const CountOptions& options) {
  if (!a.field().is_prime())
    fail(ErrorCode::InvalidArgument, "count_fixed_subspaces needs a prime field");
  const int n = static_cast<int>(a.rows());
  if (d < 0 || d > n)
    fail(ErrorCode::InfeasibleE, "subspace dimension " + std::to_string(d) + " outside [0, " +
                                     std::to_string(n) + "]");
  const JordanData type = jordan_type_of(a);
  const Scalar zero(a.field());
  // totals[k] = invariant k-subspaces of the sum of the pieces seen so far
  std::vector<std::uint64_t> totals{1};
  for (const auto& lambda : type.blocks()) {
    const Matrix nilpotent = jordan_matrix(zero, lambda);
    const int size = lambda.size();
    std::vector<std::uint64_t> piece(static_cast<std::size_t>(size + 1));
    for (int e = 0; e <= std::min(size, d); ++e)
      piece[static_cast<std::size_t>(e)] = count_fixed_subspaces(nilpotent, e, options);
    std::vector<std::uint64_t> next(totals.size() + static_cast<std::size_t>(size), 0);
    for (std::size_t i = 0; i < totals.size(); ++i)
      for (std::size_t e = 0; e < piece.size() && i + e <= static_cast<std::size_t>(d); ++e)
        next[i + e] += totals[i] * piece[e];
    totals = std::move(next);
  }
  return totals[static_cast<std::size_t>(d)];
}

const char* count_strategy_name(CountStrategy s) noexcept {
  switch (s) {
    case CountStrategy::Auto: return "auto";
    case CountStrategy::Direct: return "direct";
    case CountStrategy::Decomposition: return "decomposition";
  }
  return "?";
}

FixedCountSample count_for_descriptor(const VarietyDescriptor& v, int d, std::uint64_t q,
                                      const CountOptions& options, CountStrategy strategy) {
  const FieldSpec field = FieldSpec::prime(q);
  const Matrix rep = representative(v, field);
  if (strategy == CountStrategy::Auto) {
    const bool within = d <= 0 || d >= v.n() ||
                        gaussian_binomial(v.n(), d, q) <=
                            mpz_class(static_cast<unsigned long>(options.max_enum));
    strategy = within || v.eigenvalue_count() < 2 ? CountStrategy::Direct
                                                   : CountStrategy::Decomposition;
  }
  const std::uint64_t count = strategy == CountStrategy::Direct
                                  ? count_fixed_subspaces(rep, d, options)
                                  : count_fixed_subspaces_by_decomposition(rep, d, options);
  return {v.to_string(), d, q, count, strategy};
}

std::vector<std::uint64_t> admissible_prime_schedule(std::span<const std::uint64_t> preferred,
                                                     std::size_t eigenvalue_count, int n, int d) {
  const std::size_t needed = static_cast<std::size_t>(d) * static_cast<std::size_t>(n - d) + 2;
  std::vector<std::uint64_t> out;
  std::uint64_t largest = 1;
  for (auto p : preferred) {
    largest = std::max(largest, p);
    if (p > eigenvalue_count && is_prime(p) &&
        std::find(out.begin(), out.end(), p) == out.end())
      out.push_back(p);
  }
  std::uint64_t p = std::max<std::uint64_t>(largest, eigenvalue_count);
  while (out.size() < needed) {
    p = next_prime(p);
    out.push_back(p);
  }
  return out;
}

}  // namespace degen
