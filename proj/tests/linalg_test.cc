#include "ringlcd/linalg.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"

namespace ringlcd {
namespace {

using testing::Mat;
using testing::RandomMatrix;

const Field& F5() {
  static const Field f = Field::Make(5, 1);
  return f;
}
const Field& F9() {
  static const Field f = Field::Make(3, 2);
  return f;
}

// Cofactor expansion; independent of the elimination-based Det.
FieldElem LaplaceDet(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return f.One();
  FieldElem acc = f.Zero();
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) cols.push_back(j);
    const FieldElem term = f.Mul(m(0, c), LaplaceDet(m.SelectRows(rows).PermuteColumns(cols)));
    acc = c % 2 == 0 ? f.Add(acc, term) : f.Sub(acc, term);
  }
  return acc;
}

TEST(Rref, Examples) {
  const auto r = Rref(Mat(F5(), {{2, 4}}));
  EXPECT_EQ(r.reduced, Mat(F5(), {{1, 2}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));

  const Matrix id = Matrix::Identity(F5(), 4);
  EXPECT_EQ(Rref(id).reduced, id);
  EXPECT_EQ(Rref(id).rank, 4u);

  const Matrix zero(F5(), 2, 3);
  EXPECT_EQ(Rref(zero).reduced, zero);
  EXPECT_EQ(Rref(zero).rank, 0u);
  EXPECT_TRUE(Rref(zero).pivots.empty());
}

TEST(Det, Examples) {
  EXPECT_EQ(Det(Mat(F5(), {{2, 2}, {0, 1}})), FieldElem{2});
  EXPECT_EQ(Det(Mat(F5(), {{1, 2}, {2, 4}})), FieldElem{0});
  EXPECT_EQ(Det(Matrix(F5(), 0, 0)), FieldElem{1});
  EXPECT_ERROR_KIND(Det(Matrix(F5(), 1, 2)), ErrorKind::kNotSquare);
}

TEST(Nullspace, Examples) {
  EXPECT_EQ(NullspaceBasis(Mat(F5(), {{1, 2}})), Mat(F5(), {{1, 2}}));
  EXPECT_EQ(NullspaceBasis(Matrix::Identity(F5(), 3)).rows(), 0u);
  EXPECT_EQ(NullspaceBasis(Matrix(F5(), 1, 3)), Matrix::Identity(F5(), 3));
}

TEST(StandardFormTest, Examples) {
  const auto sf = ToStandardForm(Mat(F5(), {{0, 1, 1}}));
  EXPECT_EQ(sf.gen, Mat(F5(), {{1, 0, 1}}));
  EXPECT_EQ(sf.perm, (std::vector<std::size_t>{1, 0, 2}));

  const Matrix already = Mat(F5(), {{1, 0, 3}, {0, 1, 4}});
  const auto same = ToStandardForm(already);
  EXPECT_EQ(same.gen, already);
  EXPECT_EQ(same.perm, (std::vector<std::size_t>{0, 1, 2}));

  EXPECT_ERROR_KIND(ToStandardForm(Mat(F5(), {{1, 2, 3}, {0, 0, 0}})), ErrorKind::kRankDeficient);
}

TEST(GramTest, Examples) {
  EXPECT_EQ(Gram(Mat(F5(), {{1, 2}}), 0), Mat(F5(), {{0}}));
  EXPECT_EQ(Gram(Mat(F9(), {{1, 4}}), 1), Mat(F9(), {{0}}));
  for (unsigned m = 0; m <= 2; ++m) EXPECT_EQ(Gram(Matrix::Identity(F9(), 3), m), Matrix::Identity(F9(), 3));
}

TEST(MinorDetTest, Examples) {
  const Matrix zero1 = Mat(F5(), {{0}});
  const std::vector<std::size_t> first{0};
  EXPECT_EQ(MinorDet(zero1, first), FieldElem{1});
  EXPECT_EQ(MinorDet(zero1, {}), FieldElem{0});
  EXPECT_EQ(MinorDet(Mat(F5(), {{1, 0}, {0, 3}}), first), FieldElem{3});
  EXPECT_ERROR_KIND(MinorDet(Matrix(F5(), 1, 2), first), ErrorKind::kNotSquare);
  const std::vector<std::size_t> bad{2};
  EXPECT_ERROR_KIND(MinorDet(zero1, bad), ErrorKind::kOutOfRange);
}

TEST(LinalgProperties, RandomMatrices) {
  std::mt19937_64 rng(7);
  for (const Field* f : {&F5(), &F9()}) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = rng() % 5, cols = 1 + rng() % 6;
      const Matrix m = RandomMatrix(*f, rows, cols, rng);
      const RrefResult r = Rref(m);
      EXPECT_EQ(Rref(r.reduced).reduced, r.reduced);  // idempotent

      const Matrix ns = NullspaceBasis(m);
      EXPECT_EQ(r.rank + ns.rows(), cols);
      if (rows > 0 && ns.rows() > 0) {
        const Matrix product = m * ns.Transpose();
        EXPECT_EQ(product, Matrix(*f, rows, ns.rows()));
      }

      if (r.rank == rows && rows > 0) {
        const StandardForm sf = ToStandardForm(m);
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < rows; ++j) EXPECT_EQ(sf.gen(i, j), i == j ? f->One() : f->Zero());
        // Undo the permutation: original column perm[j] is gen column j.
        std::vector<std::size_t> inverse(cols);
        for (std::size_t j = 0; j < cols; ++j) inverse[sf.perm[j]] = j;
        EXPECT_EQ(Rref(sf.gen.PermuteColumns(inverse)).reduced, r.reduced);
      }

      for (unsigned e = 0; e <= f->e(); ++e) {
        const Matrix g = Gram(m, e);
        for (std::size_t a = 0; a < rows; ++a)
          for (std::size_t b = 0; b < rows; ++b) {
            FieldElem acc = f->Zero();
            for (std::size_t j = 0; j < cols; ++j) {
              acc = f->Add(acc, f->Mul(m(a, j), f->Pow(m(b, j), e == 0 ? 1 : (e == 1 ? f->p() : f->q()))));
            }
            EXPECT_EQ(g(a, b), acc);
          }
      }
    }
  }
}

TEST(LinalgProperties, DeterminantAgreesWithLaplaceAndIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (const Field* f : {&F5(), &F9()}) {
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const Matrix a = RandomMatrix(*f, n, n, rng);
      const Matrix b = RandomMatrix(*f, n, n, rng);
      EXPECT_EQ(Det(a), LaplaceDet(a));
      EXPECT_EQ(Det(a * b), f->Mul(Det(a), Det(b)));
    }
  }
}

TEST(LinalgProperties, Det2x2Exhaustive) {
  const Field& f = F5();
  for (std::uint32_t code = 0; code < 625; ++code) {
    const Matrix m = Mat(f, {{code % 5, code / 5 % 5}, {code / 25 % 5, code / 125}});
    const FieldElem expected = f.Sub(f.Mul(m(0, 0), m(1, 1)), f.Mul(m(0, 1), m(1, 0)));
    EXPECT_EQ(Det(m), expected);
  }
}

}  // namespace
}  // namespace ringlcd
