#include <gtest/gtest.h>

#include "degen/error.hpp"
#include "degen/linear.hpp"
#include "degen/witness.hpp"

using degen::FieldSpec;
using degen::JordanData;
using degen::Partition;
using degen::Scalar;
using degen::VarietyDescriptor;
using degen::WitnessMode;

TEST(RegularBlock, DiagonalRuns) {
  const auto q = FieldSpec::rational();
  auto m = degen::regular_block({{Scalar(q, 1), 2}, {Scalar(q, 2), 1}});
  EXPECT_EQ(m, degen::Matrix::from_ints(q, {{1, 1, 0}, {0, 1, 1}, {0, 0, 2}}));
  EXPECT_EQ(jordan_type_of(m).to_string(), "{1:(2), 2:(1)}");
  EXPECT_EQ(degen::regular_block({{Scalar(q, 5), 1}}), degen::Matrix::from_ints(q, {{5}}));
  auto nil = degen::regular_block({{Scalar(q, 0), 4}});
  EXPECT_EQ(jordan_type_of(nil), JordanData({Partition{4}}));
}

TEST(WitnessFamily, SemisimpleToXShape) {
  auto fam = degen::family_semisimple_to_x(JordanData({Partition{2}, Partition{1, 1}}));
  EXPECT_EQ(fam.n, 4);
  EXPECT_EQ(fam.slots.size(), 3u);
  EXPECT_EQ(fam.generic_type, VarietyDescriptor::s(Partition{2, 1, 1}));
  EXPECT_EQ(fam.special_type, VarietyDescriptor::x(JordanData({Partition{2}, Partition{1, 1}})));
  EXPECT_EQ(degen::first_admissible_prime(fam), 5u);

  auto single = degen::family_semisimple_to_x(JordanData({Partition{2, 1}}));
  EXPECT_EQ(single.slots.size(), 2u);
  EXPECT_EQ(single.generic_type, VarietyDescriptor::s(Partition{2, 1}));
}

TEST(WitnessFamily, XToUShape) {
  auto fam = degen::family_x_to_u(JordanData({Partition{2}, Partition{1, 1}}));
  EXPECT_EQ(fam.slots.size(), 2u);
  ASSERT_EQ(fam.blocks.size(), 2u);
  EXPECT_EQ(fam.blocks[0].size(), 3);
  EXPECT_EQ(fam.blocks[1].size(), 1);
  EXPECT_EQ(fam.special_type, VarietyDescriptor::u(Partition{3, 1}));

  auto two = degen::family_x_to_u(JordanData({Partition{1}, Partition{1}}));
  const auto q = FieldSpec::rational();
  auto special = two.evaluate(two.specialize({Scalar(q, 4), Scalar(q, 9)}));
  EXPECT_EQ(jordan_type_of(special), JordanData({Partition{2}}));
}

TEST(VerifyWitness, AllSmallTypesBothFields) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : degen::enumerate_jordan_data(n)) {
      for (auto mode : {WitnessMode::SemisimpleToX, WitnessMode::XToU}) {
        auto fam = degen::make_family(mode, d);
        for (auto f : {FieldSpec::rational(), FieldSpec::prime(degen::first_admissible_prime(fam))}) {
          auto report = degen::verify_witness(fam, f, 3, 42);
          EXPECT_TRUE(report.pass) << d.to_string();
          EXPECT_EQ(report.expected_centralizer, centralizer_dim(d));
          auto curve = degen::verify_witness_curve(fam, f, 2, 42);
          EXPECT_TRUE(curve.pass) << d.to_string();
        }
      }
    }
  }
}

TEST(VerifyWitness, SeedDeterminesSamples) {
  auto fam = degen::family_semisimple_to_x(JordanData({Partition{2}, Partition{1, 1}}));
  auto a = degen::verify_witness(fam, FieldSpec::rational(), 3, 7);
  auto b = degen::verify_witness(fam, FieldSpec::rational(), 3, 7);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].values, b.checks[i].values);
}

TEST(VerifyWitness, FieldTooSmall) {
  auto fam = degen::family_semisimple_to_x(JordanData({Partition{2, 2}}));
  try {
    degen::verify_witness(fam, FieldSpec::prime(2), 1, 1);
    FAIL();
  } catch (const degen::Error& e) {
    EXPECT_EQ(e.code(), degen::ErrorCode::FieldTooSmall);
  }
}

TEST(VerifyWitness, DetectsWrongDeclaredType) {
  auto fam = degen::family_x_to_u(JordanData({Partition{2}, Partition{1, 1}}));
  fam.special_type = VarietyDescriptor::u(Partition{2, 2});
  try {
    degen::verify_witness(fam, FieldSpec::rational(), 1, 1);
    FAIL();
  } catch (const degen::Error& e) {
    EXPECT_EQ(e.code(), degen::ErrorCode::TypeMismatch);
  }
}

TEST(WitnessFamily, EndpointsShareInvariants) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& d : degen::enumerate_jordan_data(n)) {
      for (auto mode : {WitnessMode::SemisimpleToX, WitnessMode::XToU}) {
        auto fam = degen::make_family(mode, d);
        const auto g = fam.generic_type.jordan_data();
        const auto s = fam.special_type.jordan_data();
        EXPECT_EQ(centralizer_dim(g), centralizer_dim(s)) << d.to_string();
        EXPECT_EQ(d_of(g), d_of(s)) << d.to_string();
        EXPECT_EQ(degen::sandwich(g).fixed_dims, degen::sandwich(s).fixed_dims) << d.to_string();
      }
    }
  }
}
