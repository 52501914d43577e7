#include "ringlcd/oracle.h"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "test_util.h"

namespace ringlcd {
namespace {

using testing::Elems;
using testing::Span;

TEST(OracleTest, GaloisPairing) {
  const Field f9 = Field::Make(3, 2);
  // <(1, w+1), (1, w+1)>_1 = 1 + (w+1)^4 = 1 + 2 = 0.
  EXPECT_EQ(oracle::GaloisPairing(f9, Elems({1, 4}), Elems({1, 4}), 1), FieldElem{0});
  // <(w), (1)>_1 = w, <(1), (w)>_1 = w^3 = 2w.
  EXPECT_EQ(oracle::GaloisPairing(f9, Elems({3}), Elems({1}), 1), FieldElem{3});
  EXPECT_EQ(oracle::GaloisPairing(f9, Elems({1}), Elems({3}), 1), FieldElem{6});
  EXPECT_ERROR_KIND(oracle::GaloisPairing(f9, Elems({1}), Elems({1, 1}), 0), ErrorKind::kLengthMismatch);
}

TEST(OracleTest, LeeWeightFromUBasis) {
  const Field f5 = Field::Make(5, 1);
  RingVector x(f5, 2);
  x.Set(0, RingElement::FromUBasis(f5, {FieldElem{0}, FieldElem{1}, FieldElem{0}, FieldElem{4}}));
  // (a1, a1+a2, a1+a3, a1+a2+a3+a4) = (0, 1, 0, 0)
  EXPECT_EQ(oracle::LeeWeightFromUBasis(x), 1u);
  x.Set(1, RingElement::FromUBasis(f5, {FieldElem{2}, FieldElem{3}, FieldElem{0}, FieldElem{0}}));
  // (2, 0, 2, 0)
  EXPECT_EQ(oracle::LeeWeightFromUBasis(x), 3u);
}

TEST(OracleTest, EnumerationOrderAndCount) {
  const Field f3 = Field::Make(3, 1);
  const FqCode c = Span(f3, {{1, 0, 1}, {0, 1, 1}});
  const auto words = oracle::EnumCodewords(c);
  ASSERT_EQ(words.size(), 9u);
  EXPECT_EQ(words[0], Elems({0, 0, 0}));
  EXPECT_EQ(words[1], Elems({0, 1, 1}));
  EXPECT_EQ(words[2], Elems({0, 2, 2}));
  EXPECT_EQ(words[3], Elems({1, 0, 1}));
  EXPECT_EQ(words[8], Elems({2, 2, 1}));
  EXPECT_EQ(std::set(words.begin(), words.end()).size(), 9u);
  EXPECT_ERROR_KIND(oracle::EnumCodewords(c, {8}), ErrorKind::kCapExceeded);
  EXPECT_EQ(oracle::EnumCodewords(FqCode::Zero(f3, 2)).size(), 1u);
}

TEST(OracleTest, HammingWeightDistribution) {
  const Field f2 = Field::Make(2, 1);
  const FqCode ham = Span(f2, {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}});
  std::map<std::size_t, int> dist;
  oracle::ForEachCodeword(ham, {}, [&](const std::vector<FieldElem>& w) { ++dist[HammingWeight(w)]; });
  EXPECT_EQ(dist, (std::map<std::size_t, int>{{0, 1}, {3, 7}, {4, 7}, {7, 1}}));
  EXPECT_EQ(oracle::MinDistance(ham), 3u);
  EXPECT_EQ(oracle::Hull(ham, 0), 3u);
}

TEST(OracleTest, DualCheck) {
  const Field f5 = Field::Make(5, 1);
  const FqCode c = Span(f5, {{1, 2}});
  EXPECT_TRUE(oracle::DualCheck(c, c, 0));
  EXPECT_FALSE(oracle::DualCheck(c, Span(f5, {{1, 1}}), 0));
  EXPECT_FALSE(oracle::DualCheck(c, FqCode::Full(f5, 2), 0));
  EXPECT_TRUE(oracle::DualCheck(FqCode::Zero(f5, 2), FqCode::Full(f5, 2), 0));
  // Spanning-set path (5^9 pairs exceed the budget).
  const FqCode rep = Span(f5, {std::vector<std::uint64_t>(9, 1)});
  EXPECT_TRUE(oracle::DualCheck(rep, rep.GaloisDual(0), 0));
  EXPECT_FALSE(oracle::DualCheck(rep, Span(f5, {{1, 4, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 4, 0, 0, 0, 0, 0, 0},
                                              {0, 0, 1, 4, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 4, 0, 0, 0, 0},
                                              {0, 0, 0, 0, 1, 4, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 4, 0, 0},
                                              {0, 0, 0, 0, 0, 0, 1, 4, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 1}}),
                                   0));
}

TEST(OracleTest, RingCodeEnumeration) {
  const Field f5 = Field::Make(5, 1);
  const FqCode c1 = Span(f5, {{1, 2}});
  const RCode c = RCode::FromComponents({c1, FqCode::Zero(f5, 2), c1, FqCode::Zero(f5, 2)});
  const auto words = oracle::EnumCodewords(c);
  EXPECT_EQ(words.size(), 25u);
  EXPECT_EQ(oracle::MinDistance(c), 2u);
  EXPECT_EQ(oracle::Hull(c, 0), 2u);
  EXPECT_TRUE(oracle::DualCheck(c, c.GaloisDual(0), 0));
  EXPECT_FALSE(oracle::DualCheck(c, c, 0));
  EXPECT_TRUE(oracle::GrayConsistent(c));
}

// Frozen counts over all one-dimensional codes of small length, each code
// listed once via its normalized generator.
TEST(OracleTest, FrozenLcdCounts) {
  auto count_lcd = [](const Field& f, std::size_t n, unsigned l) {
    std::set<std::vector<FieldElem>> seen;
    int lcd = 0;
    std::vector<FieldElem> v(n, f.Zero());
    const std::uint64_t total = CodeSize(f.q(), n);
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t x = code;
      for (auto& c : v) {
        c = {static_cast<std::uint32_t>(x % f.q())};
        x /= f.q();
      }
      const FqCode c = FqCode::Make(Matrix(f, 1, n, v), n);
      const std::vector<FieldElem> key(c.gen().entries().begin(), c.gen().entries().end());
      if (!seen.insert(key).second) continue;
      lcd += oracle::Hull(c, l) == 0;
    }
    return std::pair{static_cast<int>(seen.size()), lcd};
  };
  // (q^n - 1)/(q - 1) lines; the self-orthogonal ones are the isotropic points.
  EXPECT_EQ(count_lcd(Field::Make(5, 1), 2, 0), (std::pair{6, 4}));
  EXPECT_EQ(count_lcd(Field::Make(3, 1), 3, 0), (std::pair{13, 9}));
  EXPECT_EQ(count_lcd(Field::Make(3, 2), 2, 1), (std::pair{10, 6}));
}

}  // namespace
}  // namespace ringlcd
