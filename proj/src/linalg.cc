#include "ringlcd/linalg.h"

#include <algorithm>
#include <string>
#include <utility>

#include "ringlcd/error.h"

namespace ringlcd {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorKind::kDimensionError, "entry count does not match shape");
  }
}

Matrix Matrix::FromEncodings(const Field& field,
                             const std::vector<std::vector<std::uint64_t>>& rows,
                             std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::kWidthMismatch, "row " + std::to_string(r) + " has " +
                                                 std::to_string(rows[r].size()) +
                                                 " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.Element(rows[r][c]);
  }
  return m;
}

Matrix Matrix::Identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.One();
  return m;
}

Matrix Matrix::Transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::Frobenius(unsigned m) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.Frobenius(x, m);
  return out;
}

Matrix Matrix::ScaleColumns(std::span<const FieldElem> scale) const {
  if (scale.size() != cols_) throw Error(ErrorKind::kLengthMismatch, "scale vector length");
  Matrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = field_.Mul(out(r, c), scale[c]);
  return out;
}

Matrix Matrix::PermuteColumns(std::span<const std::size_t> order) const {
  Matrix out(field_, rows_, order.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < order.size(); ++j) out(r, j) = (*this)(r, order[j]);
  return out;
}

Matrix Matrix::SelectRows(std::span<const std::size_t> rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy_n(Row(rows[i]).begin(), cols_, out.Row(i).begin());
  return out;
}

std::vector<std::vector<std::uint32_t>> Matrix::ToEncodings() const {
  std::vector<std::vector<std::uint32_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto x : Row(r)) out[r].push_back(x.value);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::kDimensionError, "product shape mismatch");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElem aik = a(i, k);
      if (aik.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.Add(out(i, j), f.Mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kDimensionError, "sum shape mismatch");
  }
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().Add(a(r, c), b(r, c));
  return out;
}

Matrix VStack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::kWidthMismatch, "stack widths differ");
  std::vector<FieldElem> entries = top.entries();
  entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

RrefResult Rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).value == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      auto r1 = a.Row(sel), r2 = a.Row(row);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
    }
    const FieldElem inv = f.Inv(a(row, col));
    for (auto& x : a.Row(row)) x = f.Mul(x, inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      const FieldElem factor = a(r, col);
      if (factor.value == 0) continue;
      for (std::size_t c = col; c < a.cols(); ++c) {
        a(r, c) = f.Sub(a(r, c), f.Mul(factor, a(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t Rank(const Matrix& m) { return Rref(m).rank; }

FieldElem Det(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::kNotSquare, "determinant of non-square matrix");
  const Field& f = m.field();
  Matrix a = m;
  const std::size_t n = a.rows();
  FieldElem det = f.One();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col).value == 0) ++sel;
    if (sel == n) return f.Zero();
    if (sel != col) {
      auto r1 = a.Row(sel), r2 = a.Row(col);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
      det = f.Neg(det);
    }
    const FieldElem pivot = a(col, col);
    det = f.Mul(det, pivot);
    const FieldElem inv = f.Inv(pivot);
    for (std::size_t r = col + 1; r < n; ++r) {
      const FieldElem factor = f.Mul(a(r, col), inv);
      if (factor.value == 0) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) = f.Sub(a(r, c), f.Mul(factor, a(col, c)));
    }
  }
  return det;
}

Matrix NullspaceBasis(const Matrix& m) {
  const Field& f = m.field();
  const RrefResult rr = Rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;

  // One basis vector per free column: x_free = 1, x_pivot(i) = -R[i][free].
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(f, free_cols.size(), m.cols());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    basis(b, free_cols[b]) = f.One();
    for (std::size_t i = 0; i < rr.rank; ++i) {
      basis(b, rr.pivots[i]) = f.Neg(rr.reduced(i, free_cols[b]));
    }
  }
  return Rref(basis).reduced;
}

StandardForm ToStandardForm(const Matrix& g) {
  const RrefResult rr = Rref(g);
  if (rr.rank != g.rows()) {
    throw Error(ErrorKind::kRankDeficient, "generator has rank " + std::to_string(rr.rank) +
                                               " but " + std::to_string(g.rows()) + " rows");
  }
  std::vector<std::size_t> perm = rr.pivots;
  std::vector<bool> is_pivot(g.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < g.cols(); ++c)
    if (!is_pivot[c]) perm.push_back(c);
  return {rr.reduced.PermuteColumns(perm), std::move(perm)};
}

Matrix Gram(const Matrix& g, unsigned m) { return g * g.Frobenius(m).Transpose(); }

FieldElem MinorDet(const Matrix& p, std::span<const std::size_t> deleted) {
  if (p.rows() != p.cols()) throw Error(ErrorKind::kNotSquare, "minor of non-square matrix");
  std::vector<bool> drop(p.rows(), false);
  for (auto i : deleted) {
    if (i >= p.rows()) throw Error(ErrorKind::kOutOfRange, "deleted index " + std::to_string(i));
    drop[i] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < p.rows(); ++i)
    if (!drop[i]) keep.push_back(i);
  return Det(p.SelectRows(keep).PermuteColumns(keep));
}

}  // namespace ringlcd
