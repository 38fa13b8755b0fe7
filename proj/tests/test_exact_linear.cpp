#include <gtest/gtest.h>

#include <random>

#include "degen/error.hpp"
#include "degen/linear.hpp"

using degen::FieldSpec;
using degen::Matrix;
using degen::Scalar;

namespace {

Matrix random_matrix(FieldSpec f, std::size_t n, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(f, dist(rng));
  return m;
}

// Cofactor expansion along the first row. Slow and obviously correct.
Scalar det_oracle(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Scalar total(m.field());
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor(m.field(), n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Scalar term = m(0, j) * det_oracle(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

}  // namespace

TEST(Scalar, PrimeFieldArithmetic) {
  const auto f7 = FieldSpec::prime(7);
  EXPECT_EQ(Scalar(f7, 10), Scalar(f7, 3));
  EXPECT_EQ(Scalar(f7, -1), Scalar(f7, 6));
  EXPECT_EQ(Scalar(f7, 3).inverse(), Scalar(f7, 5));
  EXPECT_EQ(Scalar::parse(f7, "1/2"), Scalar(f7, 4));
  EXPECT_THROW(Scalar(f7, 0).inverse(), degen::Error);
  EXPECT_THROW(FieldSpec::prime(9), degen::Error);
}

TEST(Scalar, RationalParse) {
  const auto q = FieldSpec::rational();
  EXPECT_EQ(Scalar::parse(q, "-6/4").value(), mpq_class(-3, 2));
  EXPECT_THROW(Scalar::parse(q, "1/0"), degen::Error);
  EXPECT_THROW(Scalar::parse(q, "x"), degen::Error);
}

TEST(Rank, KnownValues) {
  const auto q = FieldSpec::rational();
  EXPECT_EQ(rank(Matrix::identity(q, 4)), 4u);
  EXPECT_EQ(rank(Matrix(q, 3, 3)), 0u);
  EXPECT_EQ(rank(Matrix::from_ints(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2u);
  // Singular mod 3 only.
  const auto m = std::vector<std::vector<long>>{{1, 2}, {2, 1}};
  EXPECT_EQ(rank(Matrix::from_ints(q, m)), 2u);
  EXPECT_EQ(rank(Matrix::from_ints(FieldSpec::prime(3), m)), 1u);
}

TEST(Rank, TransposeAndProductProperties) {
  std::mt19937_64 rng(11);
  for (auto f : {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + trial % 5;
      Matrix a = random_matrix(f, n, rng, -1, 1);
      Matrix b = random_matrix(f, n, rng, -1, 1);
      EXPECT_EQ(rank(a), rank(a.transposed()));
      EXPECT_LE(rank(a * b), std::min(rank(a), rank(b)));
    }
  }
}

TEST(CharPoly, MatchesDeterminantOracle) {
  std::mt19937_64 rng(5);
  for (auto f : {FieldSpec::rational(), FieldSpec::prime(7)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = 1 + trial % 5;
      Matrix a = random_matrix(f, n, rng);
      auto chi = char_poly(a);
      ASSERT_EQ(chi.degree(), static_cast<int>(n));
      EXPECT_TRUE(chi.is_monic());
      for (long t = -2; t <= 2; ++t) {
        Scalar x(f, t);
        const std::vector<Scalar> xs(n, x);
        EXPECT_EQ(chi.evaluate(x), det_oracle(Matrix::diagonal(xs) - a));
      }
    }
  }
}

TEST(CharPoly, ProductsCommuteUnderCharPoly) {
  std::mt19937_64 rng(8);
  const auto q = FieldSpec::rational();
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 4;
    Matrix a = random_matrix(q, n, rng);
    Matrix b = random_matrix(q, n, rng);
    EXPECT_EQ(char_poly(a * b), char_poly(b * a));
  }
}

TEST(CharPoly, JordanBlock) {
  const auto q = FieldSpec::rational();
  auto chi = char_poly(Matrix::from_ints(q, {{3, 1}, {0, 3}}));
  EXPECT_EQ(chi, degen::Polynomial(q, {Scalar(q, 9), Scalar(q, -6), Scalar(q, 1)}));
}

TEST(SplitRoots, PrimeField) {
  const auto f5 = FieldSpec::prime(5);
  degen::Polynomial x2p1(f5, {Scalar(f5, 1), Scalar(f5, 0), Scalar(f5, 1)});
  auto roots = split_roots(x2p1);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].root, Scalar(f5, 2));
  EXPECT_EQ(roots[0].multiplicity, 1);
  EXPECT_EQ(roots[1].root, Scalar(f5, 3));

  const auto f3 = FieldSpec::prime(3);
  degen::Polynomial irreducible(f3, {Scalar(f3, 1), Scalar(f3, 0), Scalar(f3, 1)});
  try {
    split_roots(irreducible);
    FAIL() << "expected NonSplit";
  } catch (const degen::Error& e) {
    EXPECT_EQ(e.code(), degen::ErrorCode::NonSplit);
  }
}

TEST(SplitRoots, Rationals) {
  const auto q = FieldSpec::rational();
  // (x - 1/2)^2 (x + 3)
  auto f = degen::Polynomial::linear_factor(Scalar::parse(q, "1/2")) *
           degen::Polynomial::linear_factor(Scalar::parse(q, "1/2")) *
           degen::Polynomial::linear_factor(Scalar(q, -3));
  auto roots = split_roots(f);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].root, Scalar(q, -3));
  EXPECT_EQ(roots[0].multiplicity, 1);
  EXPECT_EQ(roots[1].root, Scalar::parse(q, "1/2"));
  EXPECT_EQ(roots[1].multiplicity, 2);

  degen::Polynomial x2m2(q, {Scalar(q, -2), Scalar(q, 0), Scalar(q, 1)});
  EXPECT_THROW(split_roots(x2m2), degen::Error);
}

TEST(Commutant, KnownValues) {
  const auto q = FieldSpec::rational();
  EXPECT_EQ(commutant_dim(Matrix::identity(q, 3)), 9);
  EXPECT_EQ(commutant_dim(Matrix::from_ints(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})), 5);
  EXPECT_EQ(commutant_dim(Matrix::from_ints(q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})), 3);
  EXPECT_EQ(commutant_dim(Matrix::from_ints(FieldSpec::prime(2), {{1, 0}, {0, 3}})), 4);
}
