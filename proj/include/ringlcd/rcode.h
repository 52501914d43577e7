#ifndef RINGLCD_RCODE_H_
#define RINGLCD_RCODE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "ringlcd/fqcode.h"
#include "ringlcd/ring.h"

namespace ringlcd {

struct ComponentParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;  // absent for the zero code or over the cap
};

struct RCodeParams {
  std::size_t n = 0;
  std::size_t k = 0;  // |C| = q^k
  std::optional<std::size_t> lee_distance;
  std::array<ComponentParams, 4> components;
};

struct RingLcdVerdict {
  bool lcd = false;
  std::array<LcdVerdict, 4> components;
};

// Linear code over R as the direct sum gamma1 C1 + gamma2 C2 + gamma3 C3 + gamma4 C4.
// The component codes are the single source of truth; R-generators are a view.
class RCode {
 public:
  // Throws kMismatch when fields or lengths differ.
  static RCode FromComponents(std::array<FqCode, 4> components);
  // C_i is the F_q-span of the i-th gamma-coordinates of the rows.
  static RCode FromGenerators(const Field& field, std::size_t n, const std::vector<RingVector>& rows);

  const Field& field() const { return comps_[0].field(); }
  std::size_t n() const { return comps_[0].n(); }
  // log_q |C| = k1 + k2 + k3 + k4.
  std::size_t k() const;
  const FqCode& component(std::size_t i) const { return comps_.at(i); }
  const std::array<FqCode, 4>& components() const { return comps_; }

  // Rows gamma_i * g for every generator row g of C_i; an F_q-basis of C.
  std::vector<RingVector> Generators() const;

  RCode GaloisDual(unsigned l) const;
  // The F_q-code of length 4n spanned by the Gray images of Generators().
  FqCode GrayImage() const;

  // Component distances under the enumeration cap. The Lee distance is the
  // minimum over nonzero components, absent if any of those is unknown.
  RCodeParams Params(std::uint64_t cap = kDefaultEnumCap) const;

  RingLcdVerdict IsLcd(unsigned l) const;
  bool IsSelfOrthogonal(unsigned l) const;
  bool IsSelfDual() const;
  // d_L = n - k/4 + 1. Throws kZeroCode for the zero code, kCapExceeded.
  bool IsMds(std::uint64_t cap = kDefaultEnumCap) const;

  // C^alpha = {(alpha_1 c_1, ..., alpha_n c_n)}; throws kNotAUnit.
  RCode Scale(const RingVector& alpha) const;

  friend bool operator==(const RCode& a, const RCode& b) { return a.comps_ == b.comps_; }

 private:
  explicit RCode(std::array<FqCode, 4> comps) : comps_(std::move(comps)) {}

  std::array<FqCode, 4> comps_;
};

}  // namespace ringlcd

#endif  // RINGLCD_RCODE_H_
