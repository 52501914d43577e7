#include "ringlcd/ring.h"

#include <string>

#include "ringlcd/error.h"

namespace ringlcd {

Quad BasisConvert(const Field& f, BasisDirection direction, const Quad& x) {
  if (direction == BasisDirection::kUToGamma) {
    const auto [a1, a2, a3, a4] = x;
    const FieldElem r3 = f.Add(a1, a2);
    const FieldElem r4 = f.Add(a1, a3);
    const FieldElem r2 = f.Add(f.Add(r3, a3), a4);
    return {a1, r2, r3, r4};
  }
  const auto [r1, r2, r3, r4] = x;
  return {r1, f.Sub(r3, r1), f.Sub(r4, r1), f.Sub(f.Add(r1, r2), f.Add(r3, r4))};
}

RingElement RingElement::Zero(const Field& field) { return {field, Quad{}}; }

RingElement RingElement::One(const Field& field) { return Scalar(field, field.One()); }

RingElement RingElement::Scalar(const Field& field, FieldElem c) { return {field, {c, c, c, c}}; }

RingElement RingElement::Gamma(const Field& field, std::size_t index) {
  if (index >= 4) throw Error(ErrorKind::kOutOfRange, "gamma index " + std::to_string(index));
  Quad g{};
  g[index] = field.One();
  return {field, g};
}

RingElement RingElement::FromUBasis(const Field& field, const Quad& a) {
  return {field, BasisConvert(field, BasisDirection::kUToGamma, a)};
}

Quad RingElement::UBasis() const { return BasisConvert(field_, BasisDirection::kGammaToU, g_); }

bool RingElement::IsUnit() const {
  for (auto c : g_)
    if (c.value == 0) return false;
  return true;
}

bool RingElement::IsZero() const { return g_ == Quad{}; }

namespace {

const Field& SameField(const RingElement& x, const RingElement& y) {
  if (!(x.field() == y.field())) throw Error(ErrorKind::kSpecMismatch, "ring elements over different fields");
  return x.field();
}

template <typename Op>
RingElement Coordinatewise(const RingElement& x, const RingElement& y, Op op) {
  const Field& f = SameField(x, y);
  Quad out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = op(f, x[i], y[i]);
  return {f, out};
}

}  // namespace

RingElement operator+(const RingElement& x, const RingElement& y) {
  return Coordinatewise(x, y, [](const Field& f, FieldElem a, FieldElem b) { return f.Add(a, b); });
}

RingElement operator-(const RingElement& x, const RingElement& y) {
  return Coordinatewise(x, y, [](const Field& f, FieldElem a, FieldElem b) { return f.Sub(a, b); });
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  return Coordinatewise(x, y, [](const Field& f, FieldElem a, FieldElem b) { return f.Mul(a, b); });
}

RingElement Inverse(const RingElement& x) {
  if (!x.IsUnit()) throw Error(ErrorKind::kNotAUnit, "a gamma-coordinate is zero");
  Quad out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = x.field().Inv(x[i]);
  return {x.field(), out};
}

RingElement Frobenius(const RingElement& x, unsigned l) {
  Quad out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = x.field().Frobenius(x[i], l);
  return {x.field(), out};
}

RingVector::RingVector(Field field, std::size_t n) : field_(std::move(field)), entries_(n) {}

RingVector::RingVector(Field field, std::vector<Quad> gamma)
    : field_(std::move(field)), entries_(std::move(gamma)) {}

void RingVector::Set(std::size_t j, const RingElement& x) {
  if (!(x.field() == field_)) throw Error(ErrorKind::kSpecMismatch, "element over a different field");
  entries_.at(j) = x.gamma();
}

std::vector<FieldElem> RingVector::Component(std::size_t slot) const {
  std::vector<FieldElem> out;
  out.reserve(entries_.size());
  for (const auto& q : entries_) out.push_back(q.at(slot));
  return out;
}

RingVector operator-(const RingVector& x, const RingVector& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::kLengthMismatch, "vector lengths differ");
  RingVector out(x.field(), x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out.Set(j, x[j] - y[j]);
  return out;
}

std::vector<FieldElem> Gray(const RingVector& x) {
  std::vector<FieldElem> out;
  out.reserve(4 * x.size());
  for (const auto& q : x.gamma()) out.insert(out.end(), q.begin(), q.end());
  return out;
}

RingVector InverseGray(const Field& field, const std::vector<FieldElem>& image) {
  if (image.size() % 4 != 0) throw Error(ErrorKind::kLengthMismatch, "Gray image length not divisible by 4");
  std::vector<Quad> entries(image.size() / 4);
  for (std::size_t j = 0; j < entries.size(); ++j)
    for (std::size_t i = 0; i < 4; ++i) entries[j][i] = image[4 * j + i];
  return {field, std::move(entries)};
}

std::size_t HammingWeight(const std::vector<FieldElem>& x) {
  std::size_t w = 0;
  for (auto c : x) w += c.value != 0;
  return w;
}

std::size_t LeeWeight(const RingVector& x) { return HammingWeight(Gray(x)); }

RingElement GaloisInnerProduct(const RingVector& s, const RingVector& t, unsigned l) {
  if (s.size() != t.size()) throw Error(ErrorKind::kLengthMismatch, "inner product of unequal lengths");
  if (!(s.field() == t.field())) throw Error(ErrorKind::kSpecMismatch, "vectors over different fields");
  if (l >= s.field().e()) throw Error(ErrorKind::kBadL, "l must lie in [0, e-1]");
  RingElement acc = RingElement::Zero(s.field());
  for (std::size_t j = 0; j < s.size(); ++j) acc = acc + s[j] * Frobenius(t[j], l);
  return acc;
}

}  // namespace ringlcd
