#ifndef RINGLCD_RING_H_
#define RINGLCD_RING_H_

#include <array>
#include <cstddef>
#include <vector>

#include "ringlcd/gf.h"

namespace ringlcd {

// Four field elements; either gamma-coordinates (r1, r2, r3, r4) or u-basis
// coefficients (a1, a2, a3, a4) of a1 + a2 u + a3 v + a4 uv.
using Quad = std::array<FieldElem, 4>;

enum class BasisDirection { kUToGamma, kGammaToU };

// Change of basis between a1 + a2 u + a3 v + a4 uv and sum_i gamma_i r_i with
//   gamma1 = 1-u-v+uv, gamma2 = uv, gamma3 = u-uv, gamma4 = v-uv.
// The gamma-coordinates are the evaluations at (u,v) = (0,0), (1,1), (1,0), (0,1).
Quad BasisConvert(const Field& field, BasisDirection direction, const Quad& quad);

// Element of R = F_q + uF_q + vF_q + uvF_q (u^2 = u, v^2 = v, uv = vu), stored
// in gamma-coordinates, where the ring operations act coordinatewise.
class RingElement {
 public:
  RingElement(Field field, Quad gamma) : field_(std::move(field)), g_(gamma) {}

  static RingElement Zero(const Field& field);
  static RingElement One(const Field& field);
  // c embedded as c * (gamma1 + gamma2 + gamma3 + gamma4).
  static RingElement Scalar(const Field& field, FieldElem c);
  // The idempotent gamma_{index+1}.
  static RingElement Gamma(const Field& field, std::size_t index);
  static RingElement FromUBasis(const Field& field, const Quad& a);

  const Field& field() const { return field_; }
  const Quad& gamma() const { return g_; }
  FieldElem operator[](std::size_t i) const { return g_[i]; }
  Quad UBasis() const;

  bool IsUnit() const;
  bool IsZero() const;

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.field_ == b.field_ && a.g_ == b.g_;
  }

 private:
  Field field_;
  Quad g_;
};

// Throw kSpecMismatch for operands over different fields.
RingElement operator+(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x, const RingElement& y);
RingElement operator*(const RingElement& x, const RingElement& y);
// Throws kNotAUnit.
RingElement Inverse(const RingElement& x);
// Coordinatewise Frobenius iterated l times.
RingElement Frobenius(const RingElement& x, unsigned l);

class RingVector {
 public:
  RingVector(Field field, std::size_t n);
  RingVector(Field field, std::vector<Quad> gamma);

  const Field& field() const { return field_; }
  std::size_t size() const { return entries_.size(); }
  RingElement operator[](std::size_t j) const { return {field_, entries_[j]}; }
  void Set(std::size_t j, const RingElement& x);
  const std::vector<Quad>& gamma() const { return entries_; }

  // The field vector formed by gamma-coordinate `slot` of each entry.
  std::vector<FieldElem> Component(std::size_t slot) const;

  friend bool operator==(const RingVector& a, const RingVector& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  Field field_;
  std::vector<Quad> entries_;
};

RingVector operator-(const RingVector& x, const RingVector& y);

// Gray image in F_q^{4n}: positions 4j..4j+3 hold the gamma-coordinates of entry j.
std::vector<FieldElem> Gray(const RingVector& x);
// Inverse of Gray; throws kLengthMismatch when the length is not a multiple of 4.
RingVector InverseGray(const Field& field, const std::vector<FieldElem>& image);

std::size_t HammingWeight(const std::vector<FieldElem>& x);
std::size_t LeeWeight(const RingVector& x);

// [s, t]_l = sum_i s_i F^l(t_i). Throws kLengthMismatch, kBadL (l >= e).
RingElement GaloisInnerProduct(const RingVector& s, const RingVector& t, unsigned l);

}  // namespace ringlcd

#endif  // RINGLCD_RING_H_
