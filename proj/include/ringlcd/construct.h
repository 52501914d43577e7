#ifndef RINGLCD_CONSTRUCT_H_
#define RINGLCD_CONSTRUCT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ringlcd/fqcode.h"
#include "ringlcd/linalg.h"
#include "ringlcd/rcode.h"

namespace ringlcd {

// Result of scanning the principal minors of a k x k matrix P by deletion size.
// t = -1 means P itself is nonsingular. Otherwise every minor with at most t
// rows/columns deleted vanishes and deleting `deleted` (|deleted| = t + 1)
// leaves a nonzero determinant `det_value`.
struct MinorCertificate {
  int t = -1;
  std::vector<std::size_t> deleted;
  FieldElem det_value;
};

inline constexpr std::size_t kDefaultMaxMinorSize = 20;

// Sizes w = 0, 1, ..., k in order, subsets of equal size in lexicographic
// order; the first nonvanishing minor wins. Throws kSizeCap when k > max_size
// or kNotSquare.
MinorCertificate MinorSearch(const Matrix& p, std::size_t max_size = kDefaultMaxMinorSize);

// det(P + diag(b)) == (prod_{j in S} b_j) * det(P_S) with S = cert.deleted.
// Throws kSupportMismatch unless the support of b is exactly S.
bool PerturbedDetCheck(const Matrix& p, std::span<const FieldElem> b, const MinorCertificate& cert);

struct LcdMode {
  enum class Kind { kEuclidean, kGalois };
  Kind kind = Kind::kEuclidean;
  unsigned l = 0;

  static LcdMode Euclidean() { return {Kind::kEuclidean, 0}; }
  static LcdMode Galois(unsigned l) { return {Kind::kGalois, l}; }
  // The l used for duals and LCD tests (0 for Euclidean).
  unsigned DualL() const { return kind == Kind::kEuclidean ? 0 : l; }
};

struct ConstructOptions {
  // Without a seed the smallest admissible encoding is used everywhere.
  std::optional<std::uint64_t> seed;
  std::size_t max_minor_size = kDefaultMaxMinorSize;
};

struct FieldConstruction {
  std::vector<FieldElem> scale;      // a, in original coordinates; all nonzero
  FqCode code;                       // C^a
  MinorCertificate minor;            // for P = G_s F^m(G_s)^T
  std::vector<std::size_t> perm;     // standard-form column order
  std::vector<FieldElem> b;          // diagonal perturbation, indexed by rows of P
  FieldElem scaled_gram_det;         // det(G_s^a F^m(G_s^a)^T)
};

// Checks the mode's field preconditions: q > 3 for Euclidean; for Galois
// 0 < l < e, (p^{e-l} + 1) | (p^e - 1) and beta > 1. Returns beta (0 for
// Euclidean). Throws kFieldTooSmall, kBadL, kDivisibilityFails, kBetaOne.
std::uint32_t CheckConstructionMode(const Field& field, const LcdMode& mode);

// Euclidean LCD code monomially equivalent to c (same [n, k, d]).
FieldConstruction EuclidLcdScale(const FqCode& c, const ConstructOptions& options = {});
// l-Galois LCD code monomially equivalent to c.
FieldConstruction GaloisLcdScale(const FqCode& c, unsigned l, const ConstructOptions& options = {});

struct RingConstruction {
  LcdMode mode;
  std::uint32_t beta = 0;
  RingVector alpha;  // every entry a unit of R
  RCode code;        // C^alpha
  std::array<std::optional<FieldConstruction>, 4> components;  // empty for LCD components
};

// Scales each non-LCD component independently and assembles
// alpha_j = sum_i gamma_i a_{j,i}; LCD components keep the all-ones scale.
RingConstruction RingLcdEquivalent(const RCode& c, const LcdMode& mode,
                                   const ConstructOptions& options = {});

}  // namespace ringlcd

#endif  // RINGLCD_CONSTRUCT_H_
