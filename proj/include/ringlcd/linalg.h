#ifndef RINGLCD_LINALG_H_
#define RINGLCD_LINALG_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ringlcd/gf.h"

namespace ringlcd {

// Dense row-major matrix over a finite field. Indices are 0-based.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries);

  // Entries given as canonical encodings; every row must have the same length.
  static Matrix FromEncodings(const Field& field,
                              const std::vector<std::vector<std::uint64_t>>& rows,
                              std::size_t cols = 0);
  static Matrix Identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  FieldElem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const FieldElem> Row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<FieldElem> Row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<FieldElem>& entries() const { return data_; }

  Matrix Transpose() const;
  // Entrywise x -> x^(p^m).
  Matrix Frobenius(unsigned m) const;
  // Column j multiplied by scale[j].
  Matrix ScaleColumns(std::span<const FieldElem> scale) const;
  // New matrix with columns taken in the given order: result column j is column order[j].
  Matrix PermuteColumns(std::span<const std::size_t> order) const;
  Matrix SelectRows(std::span<const std::size_t> rows) const;

  std::vector<std::vector<std::uint32_t>> ToEncodings() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix VStack(const Matrix& top, const Matrix& bottom);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Unique reduced row echelon form; zero rows are kept at the bottom.
RrefResult Rref(const Matrix& m);
std::size_t Rank(const Matrix& m);

// Throws kNotSquare. The 0x0 determinant is 1.
FieldElem Det(const Matrix& m);

// Basis (in RREF) of { x : m * x^T = 0 }; has cols - rank rows.
Matrix NullspaceBasis(const Matrix& m);

struct StandardForm {
  Matrix gen;  // [I_k | M]
  // perm[j] is the original column placed at column j of gen.
  std::vector<std::size_t> perm;
};

// Throws kRankDeficient unless g has full row rank.
StandardForm ToStandardForm(const Matrix& g);

// g * Frobenius(g, m)^T.
Matrix Gram(const Matrix& g, unsigned m);

// Determinant of p with the rows and columns listed in `deleted` removed.
// Deleting everything yields 1; throws kNotSquare / kOutOfRange.
FieldElem MinorDet(const Matrix& p, std::span<const std::size_t> deleted);

}  // namespace ringlcd

#endif  // RINGLCD_LINALG_H_
