#include <gtest/gtest.h>

#include <random>

#include "degen/error.hpp"
#include "degen/jordan.hpp"
#include "degen/linear.hpp"

using degen::EigenBlocks;
using degen::FieldSpec;
using degen::JordanData;
using degen::Matrix;
using degen::Partition;
using degen::Scalar;

namespace {

long partition_count(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partition_count(n - k, k) + partition_count(n, k - 1);
}

// Multisets of partitions with total size n: the Euler transform of p(k).
long jordan_data_count(int n) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    const long kinds = partition_count(k, k);
    // Multiply by (1 - x^k)^(-kinds), one geometric factor at a time.
    for (long j = 0; j < kinds; ++j)
      for (int i = k; i <= n; ++i) c[i] += c[i - k];
  }
  return c[n];
}

Matrix shear(FieldSpec f, std::size_t n, std::size_t i, std::size_t j, long c) {
  Matrix m = Matrix::identity(f, n);
  m(i, j) = Scalar(f, c);
  return m;
}

// P A P^-1 for a random product of shears, built together with its inverse.
Matrix conjugate_randomly(const Matrix& a, std::mt19937_64& rng) {
  const std::size_t n = a.rows();
  Matrix p = Matrix::identity(a.field(), n);
  Matrix p_inv = Matrix::identity(a.field(), n);
  if (n < 2) return a;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> val(-2, 2);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    long c = val(rng);
    p = p * shear(a.field(), n, i, j, c);
    p_inv = shear(a.field(), n, i, j, -c) * p_inv;
  }
  return p * a * p_inv;
}

}  // namespace

TEST(JordanData, CanonicalOrder) {
  JordanData d({Partition{1, 1}, Partition{2}});
  EXPECT_EQ(d.blocks()[0], Partition{2});
  EXPECT_EQ(d.to_string(), "{(2),(1,1)}");
  EXPECT_EQ(d.n(), 4);
  EXPECT_EQ(d.m(), 2u);
  JordanData e({Partition{2, 1}, Partition{3}});
  EXPECT_EQ(e.blocks()[0], Partition{3});
  EXPECT_EQ(JordanData({Partition{1}, Partition{2, 1}}).blocks()[0], (Partition{2, 1}));
}

TEST(JordanData, DerivedInvariants) {
  JordanData d({Partition{2}, Partition{1, 1}});
  EXPECT_EQ(gamma(d), (Partition{3, 1}));
  EXPECT_EQ(transpose(gamma(d)), (Partition{2, 1, 1}));
  EXPECT_EQ(centralizer_dim(d), 6);
  EXPECT_EQ(d_of(d), 2);
  EXPECT_EQ(min_poly_degree(d), 3);

  JordanData scalar({Partition{1, 1, 1}});
  EXPECT_EQ(centralizer_dim(scalar), 9);
  EXPECT_EQ(d_of(scalar), 3);
  EXPECT_EQ(min_poly_degree(scalar), 1);

  JordanData regular({Partition{4}});
  EXPECT_EQ(centralizer_dim(regular), 4);
  EXPECT_EQ(d_of(regular), 1);

  EXPECT_TRUE(has_quadratic_minpoly(JordanData({Partition{1, 1}, Partition{1, 1}})));
  EXPECT_TRUE(has_quadratic_minpoly(JordanData({Partition{2, 1}})));
  EXPECT_FALSE(has_quadratic_minpoly(JordanData({Partition{2}, Partition{1, 1}})));
}

TEST(JordanData, CentralizerAgreesWithPartitionSum) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& d : degen::enumerate_jordan_data(n)) {
      std::int64_t per_eigenvalue = 0;
      for (const auto& lambda : d.blocks()) per_eigenvalue += centralizer_dimension(lambda);
      EXPECT_EQ(centralizer_dim(d), per_eigenvalue) << d.to_string();
    }
  }
}

TEST(JordanData, EnumerationCounts) {
  EXPECT_EQ(degen::enumerate_jordan_data(1).size(), 1u);
  EXPECT_EQ(degen::enumerate_jordan_data(2).size(), 3u);
  EXPECT_EQ(degen::enumerate_jordan_data(3).size(), 6u);
  for (int n = 1; n <= 7; ++n) {
    auto all = degen::enumerate_jordan_data(n);
    EXPECT_EQ(static_cast<long>(all.size()), jordan_data_count(n)) << n;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i] == all[j]);
  }
}

TEST(JordanTypeOf, KnownMatrices) {
  const auto q = FieldSpec::rational();
  auto t = jordan_type_of(Matrix::from_ints(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  EXPECT_EQ(t.to_string(), "{1:(1,1), 2:(1)}");
  EXPECT_EQ(t, JordanData({Partition{1, 1}, Partition{1}}));

  auto n2 = jordan_type_of(Matrix::from_ints(q, {{2, 1}, {0, 2}}));
  EXPECT_EQ(n2, JordanData({Partition{2}}));

  auto nil = jordan_type_of(Matrix::from_ints(q, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0},
                                                  {0, 0, 0, 0}}));
  EXPECT_EQ(nil, JordanData({Partition{3, 1}}));

  EXPECT_EQ(blocks_for_eigenvalue(Matrix::from_ints(q, {{2, 1}, {0, 2}}), Scalar(q, 5)),
            Partition{});
}

TEST(JordanTypeOf, RejectsNonSplit) {
  const auto f3 = FieldSpec::prime(3);
  try {
    jordan_type_of(Matrix::from_ints(f3, {{0, -1}, {1, 0}}));
    FAIL();
  } catch (const degen::Error& e) {
    EXPECT_EQ(e.code(), degen::ErrorCode::NonSplit);
  }
}

TEST(JordanTypeOf, RoundTripAndSimilarityInvariance) {
  std::mt19937_64 rng(3);
  for (auto f : {FieldSpec::rational(), FieldSpec::prime(7)}) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& d : degen::enumerate_jordan_data(n)) {
        Matrix rep = canonical_representative(d, f);
        EXPECT_EQ(jordan_type_of(rep), d) << d.to_string();
        EXPECT_EQ(jordan_type_of(conjugate_randomly(rep, rng)), d) << d.to_string();
        EXPECT_EQ(jordan_type_of(rep.transposed()), d) << d.to_string();
        EXPECT_EQ(commutant_dim(rep), centralizer_dim(d)) << d.to_string();
      }
    }
  }
}

TEST(CanonicalRepresentative, NeedsEnoughField) {
  JordanData three({Partition{1}, Partition{1}, Partition{1}});
  try {
    canonical_representative(three, FieldSpec::prime(3));
    FAIL();
  } catch (const degen::Error& e) {
    EXPECT_EQ(e.code(), degen::ErrorCode::FieldTooSmall);
  }
  EXPECT_NO_THROW(canonical_representative(three, FieldSpec::prime(5)));
}

TEST(JordanMatrix, ConcreteBlocks) {
  const auto q = FieldSpec::rational();
  std::vector<EigenBlocks> concrete{{Scalar(q, 1), Partition{2}}, {Scalar(q, 2), Partition{1}}};
  Matrix m = jordan_matrix(concrete);
  EXPECT_EQ(m, Matrix::from_ints(q, {{1, 1, 0}, {0, 1, 0}, {0, 0, 2}}));
  EXPECT_EQ(jordan_type_of(m).to_string(), "{1:(2), 2:(1)}");
}
