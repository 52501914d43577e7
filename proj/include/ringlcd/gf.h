#ifndef RINGLCD_GF_H_
#define RINGLCD_GF_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ringlcd {

// An element of GF(p^e) in its canonical integer encoding
// enc = sum_i coeff[i] * p^i, where coeff is the residue polynomial modulo the
// field's modulus. The encoding is a bijection onto [0, q).
struct FieldElem {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

// GF(p^e) given by a monic irreducible modulus over F_p. Fields are cheap to
// copy (shared immutable state) and all arithmetic is const.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  // Builds and validates GF(p^e). With no modulus the lexicographically
  // smallest monic irreducible polynomial (by ascending-coefficient encoding)
  // is used. Throws kNotPrime, kBadModulus or kUnsupportedField.
  static Field Make(std::uint32_t p, unsigned e,
                    std::optional<std::vector<std::uint32_t>> modulus = {});

  std::uint32_t p() const;
  unsigned e() const;
  std::uint32_t q() const;
  // Ascending coefficients, length e + 1, leading coefficient 1.
  const std::vector<std::uint32_t>& modulus() const;

  FieldElem Zero() const { return {0}; }
  FieldElem One() const { return {1}; }
  // Validated element from its encoding; throws kBadElement when >= q.
  FieldElem Element(std::uint64_t encoding) const;
  // Image of an integer in the prime subfield.
  FieldElem FromInt(std::int64_t v) const;
  FieldElem FromCoeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> Coeffs(FieldElem x) const;

  FieldElem Add(FieldElem x, FieldElem y) const;
  FieldElem Sub(FieldElem x, FieldElem y) const;
  FieldElem Neg(FieldElem x) const;
  FieldElem Mul(FieldElem x, FieldElem y) const;
  // Throws kDivisionByZero for x = 0.
  FieldElem Inv(FieldElem x) const;
  FieldElem Pow(FieldElem x, std::uint64_t exponent) const;

  // x^(p^l). The Frobenius automorphism has order e, so l is taken mod e.
  FieldElem Frobenius(FieldElem x, unsigned l) const;

  // True iff x lies in (F_q^*)^beta, decided by x^((q-1)/beta) = 1.
  // Throws kDivisionByZero for x = 0, kBadBeta when beta does not divide q-1.
  bool IsPowerResidue(FieldElem x, std::uint32_t beta) const;

  // The rank-th smallest element (by encoding) of F_q^* \ (F_q^*)^beta.
  // Throws kBadBeta, kEmptySet (beta = 1) or kBadRank.
  FieldElem NonResidue(std::uint32_t beta, std::uint64_t rank) const;

  // Human-readable polynomial form, e.g. "2w+1" for the encoding 7 in GF(9).
  std::string Format(FieldElem x) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

bool IsPrime(std::uint64_t n);

// Irreducibility of a monic polynomial over F_p: root search for degree <= 3,
// plus gcd(f, x^(p^i) - x) = 1 for i <= deg/2 from degree 4 on.
bool IsIrreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

}  // namespace ringlcd

#endif  // RINGLCD_GF_H_
