#include "ringlcd/gf.h"

#include <algorithm>
#include <sstream>

#include "ringlcd/error.h"

namespace ringlcd {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kBadModulus: return "BadModulus";
    case ErrorKind::kUnsupportedField: return "UnsupportedField";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kBadBeta: return "BadBeta";
    case ErrorKind::kEmptySet: return "EmptySet";
    case ErrorKind::kBadRank: return "BadRank";
    case ErrorKind::kBadElement: return "BadElement";
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kRankDeficient: return "RankDeficient";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kSpecMismatch: return "SpecMismatch";
    case ErrorKind::kNotAUnit: return "NotAUnit";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kBadL: return "BadL";
    case ErrorKind::kWidthMismatch: return "WidthMismatch";
    case ErrorKind::kZeroCode: return "ZeroCode";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kZeroScale: return "ZeroScale";
    case ErrorKind::kMismatch: return "Mismatch";
    case ErrorKind::kSizeCap: return "SizeCap";
    case ErrorKind::kSupportMismatch: return "SupportMismatch";
    case ErrorKind::kFieldTooSmall: return "FieldTooSmall";
    case ErrorKind::kDivisibilityFails: return "DivisibilityFails";
    case ErrorKind::kBetaOne: return "BetaOne";
    case ErrorKind::kNonIntegralLog: return "NonIntegralLog";
    case ErrorKind::kConsistency: return "ConsistencyFailure";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kFieldError: return "FieldError";
    case ErrorKind::kDimensionError: return "DimensionError";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<std::uint32_t>;

void Trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t InvModP(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Poly PolyMul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  Trim(r);
  return r;
}

// Remainder of a modulo a nonzero polynomial m.
Poly PolyMod(Poly a, const Poly& m, std::uint32_t p) {
  Trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = InvModP(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    Trim(a);
  }
  return a;
}

Poly PolyGcd(Poly a, Poly b, std::uint32_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Poly r = PolyMod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// base^exponent mod m.
Poly PolyPowMod(const Poly& base, std::uint64_t exponent, const Poly& m, std::uint32_t p) {
  Poly result{1};
  Poly b = PolyMod(base, m, p);
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result = PolyMod(PolyMul(result, b, p), m, p);
    b = PolyMod(PolyMul(b, b, p), m, p);
  }
  return result;
}

bool HasRoot(std::uint32_t p, std::span<const std::uint32_t> f) {
  for (std::uint32_t a = 0; a < p; ++a) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * a + f[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

constexpr std::uint32_t kTableLimit = 256;

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool IsIrreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  const std::size_t degree = monic.size() - 1;
  if (degree == 1) return true;
  if (HasRoot(p, monic)) return false;
  if (degree <= 3) return true;
  const Poly f(monic.begin(), monic.end());
  const Poly x{0, 1};
  Poly power = x;  // x^(p^i) mod f
  for (std::size_t i = 1; i <= degree / 2; ++i) {
    power = PolyPowMod(power, p, f, p);
    Poly diff = power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    Trim(diff);
    if (diff.empty()) return false;
    if (PolyGcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

struct Field::Impl {
  std::uint32_t p = 0;
  unsigned e = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  // Full operation tables for small fields; empty otherwise.
  std::vector<std::uint32_t> add_table;
  std::vector<std::uint32_t> mul_table;

  std::uint32_t AddRaw(std::uint32_t x, std::uint32_t y) const {
    if (e == 1) return (x + y) % p;
    std::uint32_t result = 0, scale = 1;
    for (unsigned i = 0; i < e; ++i) {
      result += ((x % p + y % p) % p) * scale;
      x /= p;
      y /= p;
      scale *= p;
    }
    return result;
  }

  std::uint32_t NegRaw(std::uint32_t x) const {
    if (e == 1) return (p - x) % p;
    std::uint32_t result = 0, scale = 1;
    for (unsigned i = 0; i < e; ++i) {
      result += ((p - x % p) % p) * scale;
      x /= p;
      scale *= p;
    }
    return result;
  }

  Poly Decode(std::uint32_t x) const {
    Poly c(e, 0);
    for (unsigned i = 0; i < e; ++i) {
      c[i] = x % p;
      x /= p;
    }
    return c;
  }

  std::uint32_t Encode(const Poly& c) const {
    std::uint32_t result = 0;
    for (std::size_t i = c.size(); i-- > 0;) result = result * p + c[i];
    return result;
  }

  std::uint32_t MulRaw(std::uint32_t x, std::uint32_t y) const {
    if (e == 1) return static_cast<std::uint32_t>(std::uint64_t{x} * y % p);
    Poly r = PolyMod(PolyMul(Decode(x), Decode(y), p), modulus, p);
    r.resize(e, 0);
    return Encode(r);
  }

  std::uint32_t Add(std::uint32_t x, std::uint32_t y) const {
    return add_table.empty() ? AddRaw(x, y) : add_table[x * q + y];
  }
  std::uint32_t Mul(std::uint32_t x, std::uint32_t y) const {
    return mul_table.empty() ? MulRaw(x, y) : mul_table[x * q + y];
  }
};

Field Field::Make(std::uint32_t p, unsigned e,
                  std::optional<std::vector<std::uint32_t>> modulus) {
  if (!IsPrime(p)) throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::kBadModulus, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw Error(ErrorKind::kUnsupportedField, "field order exceeds 2^20");
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = static_cast<std::uint32_t>(q);

  if (modulus) {
    Poly m = *modulus;
    if (m.size() != e + 1) {
      throw Error(ErrorKind::kBadModulus, "modulus must have exactly e+1 coefficients");
    }
    for (auto c : m) {
      if (c >= p) throw Error(ErrorKind::kBadModulus, "modulus coefficient out of range");
    }
    if (m.back() != 1) throw Error(ErrorKind::kBadModulus, "modulus must be monic");
    if (!IsIrreducible(p, m)) throw Error(ErrorKind::kBadModulus, "modulus is reducible");
    impl->modulus = std::move(m);
  } else {
    // Lower coefficients enumerated in ascending-coefficient encoding order.
    const std::uint64_t count = q;  // p^e choices for the e lower coefficients
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly m(e + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < e; ++i) {
        m[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      m[e] = 1;
      if (IsIrreducible(p, m)) {
        impl->modulus = std::move(m);
        break;
      }
    }
  }

  if (impl->q <= kTableLimit && e > 1) {
    const std::uint32_t n = impl->q;
    impl->add_table.resize(std::size_t{n} * n);
    impl->mul_table.resize(std::size_t{n} * n);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        impl->add_table[x * n + y] = impl->AddRaw(x, y);
        impl->mul_table[x * n + y] = impl->MulRaw(x, y);
      }
    }
  }
  return Field(std::move(impl));
}

std::uint32_t Field::p() const { return impl_->p; }
unsigned Field::e() const { return impl_->e; }
std::uint32_t Field::q() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }

FieldElem Field::Element(std::uint64_t encoding) const {
  if (encoding >= impl_->q) {
    throw Error(ErrorKind::kBadElement, "encoding " + std::to_string(encoding) +
                                            " is outside [0, " + std::to_string(impl_->q) + ")");
  }
  return {static_cast<std::uint32_t>(encoding)};
}

FieldElem Field::FromInt(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(impl_->p);
  return {static_cast<std::uint32_t>(((v % p) + p) % p)};
}

FieldElem Field::FromCoeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != impl_->e) {
    throw Error(ErrorKind::kBadElement, "expected " + std::to_string(impl_->e) + " coefficients");
  }
  for (auto c : coeffs) {
    if (c >= impl_->p) throw Error(ErrorKind::kBadElement, "coefficient not reduced mod p");
  }
  return {impl_->Encode(Poly(coeffs.begin(), coeffs.end()))};
}

std::vector<std::uint32_t> Field::Coeffs(FieldElem x) const { return impl_->Decode(x.value); }

FieldElem Field::Add(FieldElem x, FieldElem y) const { return {impl_->Add(x.value, y.value)}; }

FieldElem Field::Sub(FieldElem x, FieldElem y) const {
  return {impl_->Add(x.value, impl_->NegRaw(y.value))};
}

FieldElem Field::Neg(FieldElem x) const { return {impl_->NegRaw(x.value)}; }

FieldElem Field::Mul(FieldElem x, FieldElem y) const { return {impl_->Mul(x.value, y.value)}; }

FieldElem Field::Pow(FieldElem x, std::uint64_t exponent) const {
  std::uint32_t result = 1, base = x.value;
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result = impl_->Mul(result, base);
    base = impl_->Mul(base, base);
  }
  return {result};
}

FieldElem Field::Inv(FieldElem x) const {
  if (x.value == 0) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
  return Pow(x, impl_->q - 2);
}

FieldElem Field::Frobenius(FieldElem x, unsigned l) const {
  std::uint64_t exponent = 1;
  for (unsigned i = 0; i < l % impl_->e; ++i) exponent *= impl_->p;
  return Pow(x, exponent);
}

bool Field::IsPowerResidue(FieldElem x, std::uint32_t beta) const {
  if (x.value == 0) throw Error(ErrorKind::kDivisionByZero, "residue class of zero");
  if (beta == 0 || (impl_->q - 1) % beta != 0) {
    throw Error(ErrorKind::kBadBeta, std::to_string(beta) + " does not divide q-1");
  }
  return Pow(x, (impl_->q - 1) / beta) == One();
}

FieldElem Field::NonResidue(std::uint32_t beta, std::uint64_t rank) const {
  if (beta == 0 || (impl_->q - 1) % beta != 0) {
    throw Error(ErrorKind::kBadBeta, std::to_string(beta) + " does not divide q-1");
  }
  if (beta == 1) throw Error(ErrorKind::kEmptySet, "every unit is a 1st power");
  std::uint64_t seen = 0;
  for (std::uint32_t v = 1; v < impl_->q; ++v) {
    if (!IsPowerResidue({v}, beta)) {
      if (seen == rank) return {v};
      ++seen;
    }
  }
  throw Error(ErrorKind::kBadRank, "rank " + std::to_string(rank) + " exceeds the " +
                                       std::to_string(seen) + " non-residues");
}

std::string Field::Format(FieldElem x) const {
  if (impl_->e == 1) return std::to_string(x.value);
  if (x.value == 0) return "0";
  const Poly c = impl_->Decode(x.value);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c[i];
      continue;
    }
    if (c[i] != 1) out << c[i];
    out << 'w';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e &&
         a.impl_->modulus == b.impl_->modulus;
}

}  // namespace ringlcd
