#include "ringlcd/fqcode.h"

#include <gtest/gtest.h>

#include <random>

#include "ringlcd/oracle.h"
#include "test_util.h"

namespace ringlcd {
namespace {

using testing::Elems;
using testing::Mat;
using testing::RandomCode;
using testing::Span;

TEST(FqCodeTest, CanonicalGenerator) {
  const Field f5 = Field::Make(5, 1);
  const FqCode a = Span(f5, {{2, 4, 1}, {1, 2, 4}});
  const FqCode b = Span(f5, {{1, 2, 3}, {0, 0, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.k(), 2u);
  EXPECT_EQ(a.gen(), Mat(f5, {{1, 2, 0}, {0, 0, 1}}));
  EXPECT_ERROR_KIND(FqCode::Make(Mat(f5, {{1, 2}}), 3), ErrorKind::kWidthMismatch);
}

TEST(FqCodeTest, RunningExampleGf5) {
  const Field f5 = Field::Make(5, 1);
  const FqCode c = Span(f5, {{1, 2}});
  EXPECT_EQ(c.GaloisDual(0), c);
  EXPECT_EQ(c.HullDim(0), 1u);
  EXPECT_FALSE(c.IsLcd(0).lcd);
  EXPECT_TRUE(c.IsSelfOrthogonal(0));
  EXPECT_TRUE(c.IsSelfDual());
  EXPECT_EQ(c.MinDistance(), 2u);
  EXPECT_TRUE(c.IsMds());
  const FqCode scaled = c.Scale(Elems({2, 1}));
  EXPECT_EQ(scaled, Span(f5, {{1, 1}}));
  EXPECT_TRUE(scaled.IsLcd(0).lcd);
  EXPECT_EQ(scaled.IsLcd(0).gram_det, FieldElem{2});
}

TEST(FqCodeTest, GaloisSelfDualGf9) {
  const Field f9 = Field::Make(3, 2);
  const FqCode c = Span(f9, {{1, 4}});
  EXPECT_EQ(c.GaloisDual(1), c);
  EXPECT_EQ(c.HullDim(1), 1u);
  EXPECT_FALSE(c.IsLcd(1).lcd);
  EXPECT_TRUE(c.IsSelfOrthogonal(1));
  // Euclidean: 1 + (w+1)^2 = 1 + 2w = 2w + 1 != 0.
  EXPECT_TRUE(c.IsLcd(0).lcd);
  EXPECT_ERROR_KIND(c.GaloisDual(2), ErrorKind::kBadL);
}

TEST(FqCodeTest, BinaryHamming) {
  const Field f2 = Field::Make(2, 1);
  const FqCode ham = Span(f2, {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}});
  EXPECT_EQ(ham.MinDistance(), 3u);
  const FqCode simplex = ham.GaloisDual(0);
  EXPECT_EQ(simplex.k(), 3u);
  EXPECT_EQ(simplex.MinDistance(), 4u);
  EXPECT_EQ(ham.HullDim(0), 3u);
  EXPECT_TRUE(simplex.IsSelfOrthogonal(0));

  const FqCode ext = Span(f2, {{1, 0, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 0, 1, 1, 1}, {0, 0, 0, 1, 1, 1, 1, 0}});
  EXPECT_TRUE(ext.IsSelfDual());
  EXPECT_EQ(ext.MinDistance(), 4u);
  EXPECT_FALSE(ext.IsMds());
}

TEST(FqCodeTest, ZeroAndFullCodes) {
  const Field f4 = Field::Make(2, 2);
  const FqCode zero = FqCode::Zero(f4, 3), full = FqCode::Full(f4, 3);
  EXPECT_EQ(zero.GaloisDual(1), full);
  EXPECT_EQ(full.GaloisDual(0), zero);
  EXPECT_TRUE(zero.IsLcd(0).lcd);
  EXPECT_EQ(zero.IsLcd(0).gram_det, FieldElem{1});
  EXPECT_TRUE(zero.IsSelfOrthogonal(1));
  EXPECT_TRUE(full.IsLcd(1).lcd);
  EXPECT_EQ(full.MinDistance(), 1u);
  EXPECT_TRUE(full.IsMds());
  EXPECT_ERROR_KIND(zero.MinDistance(), ErrorKind::kZeroCode);
  EXPECT_ERROR_KIND(zero.IsMds(), ErrorKind::kZeroCode);
}

TEST(FqCodeTest, Errors) {
  const Field f5 = Field::Make(5, 1);
  const FqCode c = Span(f5, {{1, 2, 3, 4}, {0, 1, 1, 1}});
  EXPECT_ERROR_KIND(c.Scale(Elems({1, 0, 1, 1})), ErrorKind::kZeroScale);
  EXPECT_ERROR_KIND(c.Scale(Elems({1, 1})), ErrorKind::kLengthMismatch);
  EXPECT_ERROR_KIND(c.MinDistance(24), ErrorKind::kCapExceeded);
  EXPECT_EQ(c.MinDistance(25), 3u);
  EXPECT_ERROR_KIND(c.Contains(Elems({1, 2})), ErrorKind::kLengthMismatch);
  EXPECT_ERROR_KIND(c.HullDim(1), ErrorKind::kBadL);
}

TEST(FqCodeTest, MdsFamilies) {
  const Field f5 = Field::Make(5, 1);
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<std::uint64_t> ones(n, 1);
    const FqCode rep = Span(f5, {ones});
    EXPECT_EQ(rep.MinDistance(), n);
    EXPECT_TRUE(rep.IsMds());
    const FqCode parity = rep.GaloisDual(0);
    EXPECT_EQ(parity.k(), n - 1);
    EXPECT_EQ(parity.MinDistance(), 2u);
    EXPECT_TRUE(parity.IsMds());
  }
}

TEST(FqCodeTest, CacheSharedAcrossCopies) {
  const Field f5 = Field::Make(5, 1);
  const FqCode c = Span(f5, {{1, 1, 1}});
  const FqCode copy = c;
  EXPECT_EQ(c.MinDistance(), 3u);
  EXPECT_EQ(copy.MinDistance(0), 3u);  // cached, so no cap check
}

class FqCodeProperty : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FqCodeProperty, DualsHullsDistancesAgainstOracle) {
  const auto [p, e] = GetParam();
  const Field f = Field::Make(p, e);
  std::mt19937_64 rng(1000 * p + e);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const FqCode c = RandomCode(f, n, rng() % (n + 1), rng);
    for (unsigned l = 0; l < e; ++l) {
      const FqCode d = c.GaloisDual(l);
      EXPECT_EQ(c.k() + d.k(), n);
      EXPECT_TRUE(oracle::DualCheck(c, d, l, {20000}));
      EXPECT_EQ(d.GaloisDual((e - l) % e), c);
      EXPECT_EQ(c.HullDim(l), oracle::Hull(c, l));
      EXPECT_EQ(c.IsLcd(l).lcd, c.HullDim(l) == 0);
      EXPECT_EQ(c.IsSelfOrthogonal(l), c.HullDim(l) == c.k());
      const Matrix g = Gram(c.gen(), l);
      EXPECT_EQ(c.IsSelfOrthogonal(l), g == Matrix(f, g.rows(), g.cols()));
      for (const auto& w : oracle::EnumCodewords(c)) EXPECT_TRUE(c.Contains(w));
    }
    if (c.k() == 0) continue;
    const std::size_t d = c.MinDistance();
    EXPECT_EQ(d, oracle::MinDistance(c));
    EXPECT_LE(d, n - c.k() + 1);
    std::vector<FieldElem> a(n);
    for (auto& x : a) x = {static_cast<std::uint32_t>(1 + rng() % (f.q() - 1))};
    const FqCode s = c.Scale(a);
    EXPECT_EQ(s.k(), c.k());
    EXPECT_EQ(s.MinDistance(), d);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FqCodeProperty,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{5u, 1u},
                                           std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{2u, 3u}),
                         [](const auto& info) {
                           return "GF" + std::to_string(info.param.first) + "_" + std::to_string(info.param.second);
                         });

}  // namespace
}  // namespace ringlcd
