#include <gtest/gtest.h>

#include <random>
#include <set>

#include "degen/error.hpp"
#include "degen/grassmann.hpp"
#include "degen/jordan.hpp"

using degen::CountStrategy;
using degen::FieldSpec;
using degen::JordanData;
using degen::Matrix;
using degen::Partition;
using degen::Scalar;
using degen::VarietyDescriptor;

namespace {

using Vec = std::vector<int>;

// Every subspace of F_q^n spanned by some d-tuple of vectors, found by
// brute-force closure of the span as a set of vectors.
class SubspaceOracle {
 public:
  SubspaceOracle(int n, int q) : n_(n), q_(q) {
    total_ = 1;
    for (int i = 0; i < n; ++i) total_ *= q;
  }

  Vec decode(int code) const {
    Vec v(n_);
    for (int i = 0; i < n_; ++i) {
      v[i] = code % q_;
      code /= q_;
    }
    return v;
  }
  int encode(const Vec& v) const {
    int code = 0;
    for (int i = n_ - 1; i >= 0; --i) code = code * q_ + v[i];
    return code;
  }

  std::set<int> span(const std::vector<int>& gens) const {
    std::set<int> out{0};
    for (int g : gens) {
      const Vec gv = decode(g);
      std::set<int> next;
      for (int c : out) {
        const Vec cv = decode(c);
        for (int k = 0; k < q_; ++k) {
          Vec w(n_);
          for (int i = 0; i < n_; ++i) w[i] = (cv[i] + k * gv[i]) % q_;
          next.insert(encode(w));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  std::set<std::set<int>> subspaces(int d) const {
    std::size_t size = 1;
    for (int i = 0; i < d; ++i) size *= q_;
    std::set<std::set<int>> found;
    std::vector<int> gens(d, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == d) {
        auto s = span(gens);
        if (s.size() == size) found.insert(std::move(s));
        return;
      }
      for (int c = 1; c < total_; ++c) {
        gens[i] = c;
        rec(i + 1);
      }
    };
    rec(0);
    return found;
  }

  long invariant_count(const std::vector<std::vector<long>>& a, int d) const {
    long count = 0;
    for (const auto& s : subspaces(d)) {
      bool ok = true;
      for (int c : s) {
        const Vec v = decode(c);
        Vec w(n_, 0);
        for (int r = 0; r < n_; ++r) {
          long acc = 0;
          for (int k = 0; k < n_; ++k) acc += a[r][k] * v[k];
          w[r] = static_cast<int>(((acc % q_) + q_) % q_);
        }
        if (!s.contains(encode(w))) {
          ok = false;
          break;
        }
      }
      count += ok;
    }
    return count;
  }

 private:
  int n_;
  int q_;
  int total_;
};

degen::FixedCountSample sample(std::uint64_t q, std::uint64_t count) {
  return {"synthetic", 1, q, count, CountStrategy::Direct};
}

}  // namespace

TEST(GaussianBinomial, MatchesSubspaceEnumeration) {
  for (int q : {2, 3}) {
    for (int n = 1; n <= (q == 2 ? 5 : 3); ++n) {
      SubspaceOracle oracle(n, q);
      for (int d = 1; d <= n && d <= 3; ++d) {
        EXPECT_EQ(degen::gaussian_binomial(n, d, q), mpz_class(oracle.subspaces(d).size()))
            << "n=" << n << " d=" << d << " q=" << q;
      }
    }
  }
  EXPECT_EQ(degen::gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(degen::gaussian_binomial(4, 0, 7), 1);
}

TEST(GaussianBinomial, PolynomialAgreesWithProductFormula) {
  for (int n = 0; n <= 7; ++n) {
    for (int d = 0; d <= n; ++d) {
      auto poly = degen::gaussian_binomial_polynomial(n, d);
      EXPECT_EQ(poly.degree(), d * (n - d));
      for (std::uint64_t q : {2, 3, 5, 13})
        EXPECT_EQ(poly.evaluate(q), degen::gaussian_binomial(n, d, q));
    }
  }
  EXPECT_EQ(degen::gaussian_binomial_polynomial(4, 2).to_string(), "q^4 + q^3 + 2q^2 + q + 1");
}

TEST(SemisimpleCountPolynomial, ClosedForms) {
  const std::vector<int> two_two{2, 2};
  EXPECT_EQ(degen::semisimple_count_polynomial(two_two, 2),
            degen::CountPolynomial({mpz_class(3), mpz_class(2), mpz_class(1)}));
  const std::vector<int> regular{1, 1, 1, 1};
  EXPECT_EQ(degen::semisimple_count_polynomial(regular, 2), degen::CountPolynomial::constant(6));
  const std::vector<int> one{4};
  EXPECT_EQ(degen::semisimple_count_polynomial(one, 2), degen::gaussian_binomial_polynomial(4, 2));
}

TEST(CountFixed, SpecValues) {
  EXPECT_EQ(degen::count_fixed_subspaces(Matrix::identity(FieldSpec::prime(2), 4), 2), 35u);
  for (std::uint64_t q : {3, 5, 7}) {
    const auto f = FieldSpec::prime(q);
    Matrix a = Matrix::from_ints(f, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 1}, {0, 0, 0, 2}});
    EXPECT_EQ(degen::count_fixed_subspaces(a, 2), 3u) << q;
    EXPECT_EQ(degen::count_fixed_subspaces(a, 0), 1u);
    EXPECT_EQ(degen::count_fixed_subspaces(a, 4), 1u);
  }
  for (std::uint64_t q : {3, 5}) {
    const auto f = FieldSpec::prime(q);
    Matrix a = Matrix::from_ints(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
    EXPECT_EQ(degen::count_fixed_subspaces(a, 2), q * q + 2 * q + 3);
  }
}

TEST(CountFixed, MatchesBruteForceOnRandomMatrices) {
  std::mt19937_64 rng(17);
  for (int q : {2, 3}) {
    const int max_n = q == 2 ? 4 : 3;
    std::uniform_int_distribution<long> entry(0, q - 1);
    std::bernoulli_distribution sparse(0.6);
    for (int trial = 0; trial < 24; ++trial) {
      const int n = 2 + trial % (max_n - 1);
      std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
      for (auto& row : rows)
        for (auto& x : row) x = sparse(rng) ? 0 : entry(rng);
      SubspaceOracle oracle(n, q);
      Matrix a = Matrix::from_ints(FieldSpec::prime(q), rows);
      for (int d = 1; d < n; ++d) {
        EXPECT_EQ(static_cast<long>(degen::count_fixed_subspaces(a, d, {.max_enum = 1000000, .threads = 2})),
                  oracle.invariant_count(rows, d))
            << "trial " << trial << " d=" << d;
      }
    }
  }
}

TEST(CountFixed, DecompositionAgreesWithDirect) {
  for (std::uint64_t q : {5, 7}) {
    for (int n = 2; n <= 5; ++n) {
      for (const auto& d : degen::enumerate_jordan_data(n)) {
        if (d.m() >= q) continue;
        Matrix a = canonical_representative(d, FieldSpec::prime(q));
        for (int k = 1; k < n; ++k) {
          EXPECT_EQ(degen::count_fixed_subspaces(a, k),
                    degen::count_fixed_subspaces_by_decomposition(a, k))
              << d.to_string() << " d=" << k << " q=" << q;
        }
      }
    }
  }
}

TEST(CountFixed, ThreadCountDoesNotChangeResult) {
  Matrix a = canonical_representative(JordanData({Partition{2, 1}, Partition{1}}), FieldSpec::prime(11));
  const auto single = degen::count_fixed_subspaces(a, 2, {.max_enum = degen::kDefaultMaxEnumeration, .threads = 1});
  EXPECT_EQ(degen::count_fixed_subspaces(a, 2, {.max_enum = degen::kDefaultMaxEnumeration, .threads = 8}), single);
}

TEST(CountFixed, Guardrail) {
  Matrix a = Matrix::identity(FieldSpec::prime(7), 4);
  try {
    degen::count_fixed_subspaces(a, 2, {.max_enum = 100, .threads = 1});
    FAIL();
  } catch (const degen::Error& e) {
    EXPECT_EQ(e.code(), degen::ErrorCode::GuardrailExceeded);
  }
  // A single eigenvalue has no decomposition to fall back on.
  EXPECT_THROW(degen::count_for_descriptor(VarietyDescriptor::u(Partition{2, 2}), 2, 7,
                                           {.max_enum = 100, .threads = 1}),
               degen::Error);
  auto s = degen::count_for_descriptor(VarietyDescriptor::s(Partition{2, 2}), 2, 7,
                                       {.max_enum = 100, .threads = 1});
  EXPECT_EQ(s.strategy, CountStrategy::Decomposition);
  EXPECT_EQ(s.count, 49u + 14u + 3u);
}

TEST(Interpolation, KnownDimensions) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  auto u = degen::dimension_by_interpolation(VarietyDescriptor::u(Partition{3, 1}), 2, primes);
  EXPECT_TRUE(u.certified);
  EXPECT_EQ(u.dimension, 1);

  const std::vector<std::uint64_t> four{2, 3, 5, 7};
  auto scalar = degen::dimension_by_interpolation(VarietyDescriptor::u(Partition{1, 1, 1}), 1, four);
  EXPECT_EQ(scalar.dimension, 2);
  ASSERT_EQ(scalar.coefficients.size(), 3u);
  for (const auto& c : scalar.coefficients) EXPECT_EQ(c, 1);

  const auto regular = VarietyDescriptor::s(Partition{1, 1, 1, 1});
  auto schedule = degen::admissible_prime_schedule(primes, regular.eigenvalue_count(), 4, 2);
  EXPECT_EQ(schedule, (std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19}));
  auto r = degen::dimension_by_interpolation(regular, 2, schedule);
  EXPECT_EQ(r.dimension, 0);
  for (const auto& s : r.samples) EXPECT_EQ(s.count, 6u);
}

TEST(Interpolation, Errors) {
  const auto u = VarietyDescriptor::u(Partition{3, 1});
  const std::vector<std::uint64_t> few{2, 3, 5};
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const degen::Error& e) {
      return e.code();
    }
    return degen::ErrorCode::Internal;
  };
  EXPECT_EQ(code_of([&] { degen::dimension_by_interpolation(u, 2, few); }),
            degen::ErrorCode::InsufficientPrimes);
  EXPECT_EQ(code_of([&] { degen::dimension_by_interpolation(u, 4, few); }),
            degen::ErrorCode::InfeasibleE);
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  EXPECT_EQ(code_of([&] {
              degen::dimension_by_interpolation(VarietyDescriptor::s(Partition{2, 1, 1}), 1, primes);
            }),
            degen::ErrorCode::InadmissiblePrime);
}

TEST(Interpolation, RejectsNonPolynomialData) {
  std::vector<degen::FixedCountSample> samples;
  for (std::uint64_t q : {2, 3, 5, 7, 11}) samples.push_back(sample(q, std::uint64_t{1} << q));
  auto fit = degen::interpolate_counts(samples, 3);
  EXPECT_FALSE(fit.certified);

  std::vector<degen::FixedCountSample> poly;
  for (std::uint64_t q : {2, 3, 5, 7, 11}) poly.push_back(sample(q, q * q + 1));
  auto good = degen::interpolate_counts(poly, 3);
  EXPECT_TRUE(good.certified);
  EXPECT_EQ(good.dimension, 2);
}
