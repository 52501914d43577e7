#ifndef RINGLCD_FQCODE_H_
#define RINGLCD_FQCODE_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ringlcd/gf.h"
#include "ringlcd/linalg.h"

namespace ringlcd {

inline constexpr std::uint64_t kDefaultEnumCap = 1'000'000;

// q^k, saturating at UINT64_MAX.
std::uint64_t CodeSize(std::uint32_t q, std::size_t k);

struct LcdVerdict {
  bool lcd = false;
  // det(G F^{e-l}(G)^T) for the canonical generator G; 1 for the zero code.
  FieldElem gram_det;
};

// Linear code over F_q, held by its RREF generator matrix (k x n, full row
// rank). Two codes are equal iff field, length and generator agree.
class FqCode {
 public:
  // Span of `rows`; throws kWidthMismatch when rows.cols() != n.
  static FqCode Make(const Matrix& rows, std::size_t n);
  static FqCode Make(const Matrix& rows) { return Make(rows, rows.cols()); }
  static FqCode Zero(const Field& field, std::size_t n);
  static FqCode Full(const Field& field, std::size_t n);

  const Field& field() const { return gen_.field(); }
  std::size_t n() const { return gen_.cols(); }
  std::size_t k() const { return gen_.rows(); }
  const Matrix& gen() const { return gen_; }

  // Generated by the nullspace of F^{e-l}(G). Throws kBadL for l >= e.
  FqCode GaloisDual(unsigned l) const;
  // dim(C ∩ C^{⊥l}).
  std::size_t HullDim(unsigned l) const;
  LcdVerdict IsLcd(unsigned l) const;
  bool IsSelfOrthogonal(unsigned l) const;
  // C = C^⊥ (Euclidean).
  bool IsSelfDual() const;
  bool Contains(std::span<const FieldElem> word) const;

  // Minimum Hamming weight by message enumeration. Memoized; the cache is
  // shared between copies. Throws kZeroCode or kCapExceeded (q^k > cap).
  std::size_t MinDistance(std::uint64_t cap = kDefaultEnumCap) const;
  bool IsMds(std::uint64_t cap = kDefaultEnumCap) const;

  // {(a_1 c_1, ..., a_n c_n)}; throws kZeroScale / kLengthMismatch.
  FqCode Scale(std::span<const FieldElem> a) const;

  friend bool operator==(const FqCode& a, const FqCode& b) { return a.gen_ == b.gen_; }

 private:
  explicit FqCode(Matrix gen);
  void CheckL(unsigned l) const;

  Matrix gen_;
  std::shared_ptr<std::atomic<std::int64_t>> min_dist_;
};

}  // namespace ringlcd

#endif  // RINGLCD_FQCODE_H_
