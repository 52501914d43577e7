#include "ringlcd/construct.h"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "ringlcd/error.h"

namespace ringlcd {

namespace {

// Advances `subset` to the next w-subset of {0..k-1} in lexicographic order.
bool NextCombination(std::vector<std::size_t>& subset, std::size_t k) {
  const std::size_t w = subset.size();
  for (std::size_t i = w; i-- > 0;) {
    if (subset[i] < k - w + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < w; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t PowInt(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

using Picker = std::function<FieldElem()>;

// Scales the pivot positions listed by the minor certificate of
// P = G_s F^m(G_s)^T, where G_s = [I_k | M] is the standard form of c.gen().
FieldConstruction ScaleToLcd(const FqCode& c, unsigned m, unsigned dual_l, const Picker& pick,
                             const ConstructOptions& options) {
  const Field& f = c.field();
  StandardForm sf = ToStandardForm(c.gen());
  const Matrix p = Gram(sf.gen, m);
  MinorCertificate cert = MinorSearch(p, options.max_minor_size);

  std::vector<FieldElem> scale(c.n(), f.One());
  std::vector<FieldElem> b(c.k(), f.Zero());
  for (std::size_t r : cert.deleted) {
    const FieldElem v = pick();
    scale[sf.perm[r]] = v;
    b[r] = f.Sub(f.Mul(v, f.Frobenius(v, m)), f.One());
  }
  if (!PerturbedDetCheck(p, b, cert)) {
    throw Error(ErrorKind::kConsistency, "minor-determinant identity failed");
  }

  std::vector<FieldElem> permuted(c.n());
  for (std::size_t j = 0; j < c.n(); ++j) permuted[j] = scale[sf.perm[j]];
  const Matrix scaled_gram = Gram(sf.gen.ScaleColumns(permuted), m);
  Matrix diag(f, c.k(), c.k());
  for (std::size_t r = 0; r < c.k(); ++r) diag(r, r) = b[r];
  if (!(scaled_gram == p + diag)) {
    throw Error(ErrorKind::kConsistency, "scaled Gram matrix is not P + diag(b)");
  }
  const FieldElem scaled_det = Det(scaled_gram);
  if (scaled_det.value == 0) throw Error(ErrorKind::kConsistency, "scaled Gram matrix is singular");

  FqCode code = c.Scale(scale);
  if (!code.IsLcd(dual_l).lcd) throw Error(ErrorKind::kConsistency, "scaled code is not LCD");
  return {std::move(scale), std::move(code), std::move(cert), std::move(sf.perm), std::move(b), scaled_det};
}

std::vector<FieldElem> EuclidCandidates(const Field& f) {
  std::vector<FieldElem> out;
  const FieldElem minus_one = f.Neg(f.One());
  for (std::uint32_t v = 1; v < f.q(); ++v) {
    if (FieldElem{v} != f.One() && FieldElem{v} != minus_one) out.push_back({v});
  }
  return out;
}

Picker MakePicker(std::vector<FieldElem> candidates, std::mt19937_64* rng) {
  if (rng == nullptr) return [first = candidates.front()] { return first; };
  return [c = std::move(candidates), rng] { return c[(*rng)() % c.size()]; };
}

FieldConstruction EuclidWithRng(const FqCode& c, std::mt19937_64* rng, const ConstructOptions& options) {
  CheckConstructionMode(c.field(), LcdMode::Euclidean());
  return ScaleToLcd(c, 0, 0, MakePicker(EuclidCandidates(c.field()), rng), options);
}

FieldConstruction GaloisWithRng(const FqCode& c, unsigned l, std::mt19937_64* rng,
                                const ConstructOptions& options) {
  const Field& f = c.field();
  const std::uint32_t beta = CheckConstructionMode(f, LcdMode::Galois(l));
  std::vector<FieldElem> candidates;
  if (rng == nullptr) {
    candidates.push_back(f.NonResidue(beta, 0));
  } else {
    for (std::uint32_t v = 1; v < f.q(); ++v)
      if (!f.IsPowerResidue({v}, beta)) candidates.push_back({v});
  }
  return ScaleToLcd(c, f.e() - l, l, MakePicker(std::move(candidates), rng), options);
}

}  // namespace

MinorCertificate MinorSearch(const Matrix& p, std::size_t max_size) {
  if (p.rows() != p.cols()) throw Error(ErrorKind::kNotSquare, "minor search on non-square matrix");
  const std::size_t k = p.rows();
  if (k > max_size) {
    throw Error(ErrorKind::kSizeCap, "minor search on a " + std::to_string(k) + "x" + std::to_string(k) +
                                         " matrix exceeds the size budget " + std::to_string(max_size));
  }
  for (std::size_t w = 0; w <= k; ++w) {
    std::vector<std::size_t> subset(w);
    for (std::size_t i = 0; i < w; ++i) subset[i] = i;
    do {
      const FieldElem d = MinorDet(p, subset);
      if (d.value != 0) return {static_cast<int>(w) - 1, subset, d};
    } while (NextCombination(subset, k));
  }
  // Unreachable: deleting every index leaves the identity.
  throw Error(ErrorKind::kConsistency, "minor search exhausted");
}

bool PerturbedDetCheck(const Matrix& p, std::span<const FieldElem> b, const MinorCertificate& cert) {
  if (b.size() != p.rows()) throw Error(ErrorKind::kLengthMismatch, "perturbation length");
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i].value != 0) support.push_back(i);
  std::vector<std::size_t> expected = cert.deleted;
  std::sort(expected.begin(), expected.end());
  if (support != expected) throw Error(ErrorKind::kSupportMismatch, "support of b differs from the deleted set");

  const Field& f = p.field();
  Matrix perturbed = p;
  for (std::size_t i = 0; i < b.size(); ++i) perturbed(i, i) = f.Add(perturbed(i, i), b[i]);
  FieldElem rhs = MinorDet(p, support);
  for (auto i : support) rhs = f.Mul(rhs, b[i]);
  return Det(perturbed) == rhs;
}

std::uint32_t CheckConstructionMode(const Field& field, const LcdMode& mode) {
  if (mode.kind == LcdMode::Kind::kEuclidean) {
    if (field.q() <= 3) {
      throw Error(ErrorKind::kFieldTooSmall, "Euclidean construction needs q > 3, got q = " + std::to_string(field.q()));
    }
    return 0;
  }
  const unsigned e = field.e();
  if (mode.l == 0 || mode.l >= e) {
    throw Error(ErrorKind::kBadL, "Galois construction needs 0 < l < e, got l = " + std::to_string(mode.l) +
                                      ", e = " + std::to_string(e));
  }
  const std::uint64_t divisor = PowInt(field.p(), e - mode.l) + 1;
  const std::uint64_t order = field.q() - 1;
  if (order % divisor != 0) {
    throw Error(ErrorKind::kDivisibilityFails,
                std::to_string(divisor) + " does not divide " + std::to_string(order));
  }
  const auto beta = static_cast<std::uint32_t>(order / divisor);
  if (beta == 1) throw Error(ErrorKind::kBetaOne, "beta = 1 leaves no admissible scaling values");
  return beta;
}

FieldConstruction EuclidLcdScale(const FqCode& c, const ConstructOptions& options) {
  if (!options.seed) return EuclidWithRng(c, nullptr, options);
  std::mt19937_64 rng(*options.seed);
  return EuclidWithRng(c, &rng, options);
}

FieldConstruction GaloisLcdScale(const FqCode& c, unsigned l, const ConstructOptions& options) {
  if (!options.seed) return GaloisWithRng(c, l, nullptr, options);
  std::mt19937_64 rng(*options.seed);
  return GaloisWithRng(c, l, &rng, options);
}

RingConstruction RingLcdEquivalent(const RCode& c, const LcdMode& mode, const ConstructOptions& options) {
  const Field& f = c.field();
  const std::uint32_t beta = CheckConstructionMode(f, mode);
  const unsigned l = mode.DualL();

  std::optional<std::mt19937_64> rng;
  if (options.seed) rng.emplace(*options.seed);
  std::mt19937_64* rng_ptr = rng ? &*rng : nullptr;

  std::array<std::optional<FieldConstruction>, 4> parts;
  std::vector<Quad> alpha(c.n(), Quad{f.One(), f.One(), f.One(), f.One()});
  for (std::size_t i = 0; i < 4; ++i) {
    const FqCode& comp = c.component(i);
    if (comp.IsLcd(l).lcd) continue;
    parts[i] = mode.kind == LcdMode::Kind::kEuclidean ? EuclidWithRng(comp, rng_ptr, options)
                                                      : GaloisWithRng(comp, l, rng_ptr, options);
    for (std::size_t j = 0; j < c.n(); ++j) alpha[j][i] = parts[i]->scale[j];
  }

  RingVector alpha_vec(f, std::move(alpha));
  RCode scaled = c.Scale(alpha_vec);
  for (std::size_t i = 0; i < 4; ++i) {
    if (parts[i] && !(parts[i]->code == scaled.component(i))) {
      throw Error(ErrorKind::kConsistency, "ring scaling disagrees with component scaling");
    }
  }
  if (!scaled.IsLcd(l).lcd) throw Error(ErrorKind::kConsistency, "constructed ring code is not LCD");
  return {mode, beta, std::move(alpha_vec), std::move(scaled), std::move(parts)};
}

}  // namespace ringlcd
