#include "ringlcd/fqcode.h"

#include <algorithm>
#include <limits>
#include <string>

#include "ringlcd/error.h"

namespace ringlcd {

std::uint64_t CodeSize(std::uint32_t q, std::size_t k) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (size > std::numeric_limits<std::uint64_t>::max() / q) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    size *= q;
  }
  return size;
}

FqCode::FqCode(Matrix gen)
    : gen_(std::move(gen)), min_dist_(std::make_shared<std::atomic<std::int64_t>>(-1)) {}

FqCode FqCode::Make(const Matrix& rows, std::size_t n) {
  if (rows.cols() != n) {
    throw Error(ErrorKind::kWidthMismatch, "rows have " + std::to_string(rows.cols()) +
                                               " columns, code length is " + std::to_string(n));
  }
  RrefResult rr = Rref(rows);
  std::vector<std::size_t> keep(rr.rank);
  for (std::size_t i = 0; i < rr.rank; ++i) keep[i] = i;
  return FqCode(rr.reduced.SelectRows(keep));
}

FqCode FqCode::Zero(const Field& field, std::size_t n) { return FqCode(Matrix(field, 0, n)); }

FqCode FqCode::Full(const Field& field, std::size_t n) { return FqCode(Matrix::Identity(field, n)); }

void FqCode::CheckL(unsigned l) const {
  if (l >= field().e()) {
    throw Error(ErrorKind::kBadL, "l = " + std::to_string(l) + " outside [0, " +
                                      std::to_string(field().e() - 1) + "]");
  }
}

FqCode FqCode::GaloisDual(unsigned l) const {
  CheckL(l);
  // C^{⊥l} is the Euclidean dual of C^{p^(e-l)}.
  const Matrix twisted = gen_.Frobenius(field().e() - l);
  if (k() == 0) return Full(field(), n());
  return FqCode(NullspaceBasis(twisted));
}

std::size_t FqCode::HullDim(unsigned l) const {
  const FqCode dual = GaloisDual(l);
  return k() + dual.k() - Rank(VStack(gen_, dual.gen_));
}

LcdVerdict FqCode::IsLcd(unsigned l) const {
  CheckL(l);
  const FieldElem d = Det(Gram(gen_, field().e() - l));
  return {d.value != 0, d};
}

bool FqCode::IsSelfOrthogonal(unsigned l) const {
  const FqCode dual = GaloisDual(l);
  return Rank(VStack(dual.gen_, gen_)) == dual.k();
}

bool FqCode::IsSelfDual() const { return 2 * k() == n() && GaloisDual(0) == *this; }

bool FqCode::Contains(std::span<const FieldElem> word) const {
  if (word.size() != n()) throw Error(ErrorKind::kLengthMismatch, "word length");
  // gen_ is in RREF with leading ones, so clearing each pivot leaves zero iff word is in C.
  const Field& f = field();
  std::vector<FieldElem> rest(word.begin(), word.end());
  for (std::size_t r = 0; r < k(); ++r) {
    std::size_t pivot = 0;
    while (gen_(r, pivot).value == 0) ++pivot;
    const FieldElem c = rest[pivot];
    if (c.value == 0) continue;
    for (std::size_t j = pivot; j < n(); ++j) rest[j] = f.Sub(rest[j], f.Mul(c, gen_(r, j)));
  }
  return std::all_of(rest.begin(), rest.end(), [](FieldElem x) { return x.value == 0; });
}

std::size_t FqCode::MinDistance(std::uint64_t cap) const {
  if (k() == 0) throw Error(ErrorKind::kZeroCode, "minimum distance of the zero code");
  const std::int64_t cached = min_dist_->load(std::memory_order_acquire);
  if (cached >= 0) return static_cast<std::size_t>(cached);

  const Field& f = field();
  const std::uint32_t q = f.q();
  if (CodeSize(q, k()) > cap) {
    throw Error(ErrorKind::kCapExceeded, "q^k = " + std::to_string(q) + "^" + std::to_string(k()) +
                                             " exceeds enumeration cap " + std::to_string(cap));
  }

  // Every nonzero codeword is a scalar multiple of one whose first nonzero
  // message coefficient is 1; weights are scale invariant. Depth-first over
  // messages with running partial sums.
  const std::size_t kk = k(), nn = n();
  std::vector<std::vector<FieldElem>> partial(kk + 1, std::vector<FieldElem>(nn));
  std::size_t best = nn;
  auto weight = [](const std::vector<FieldElem>& v) {
    std::size_t w = 0;
    for (auto x : v) w += x.value != 0;
    return w;
  };
  // Recursion over rows [level, k) below a fixed leading row.
  auto descend = [&](auto&& self, std::size_t level) -> void {
    if (level == kk) {
      best = std::min(best, weight(partial[kk]));
      return;
    }
    const auto row = gen_.Row(level);
    for (std::uint32_t c = 0; c < q; ++c) {
      const FieldElem coef{c};
      for (std::size_t j = 0; j < nn; ++j) {
        partial[level + 1][j] = f.Add(partial[level][j], f.Mul(coef, row[j]));
      }
      self(self, level + 1);
    }
  };
  for (std::size_t lead = 0; lead < kk; ++lead) {
    const auto row = gen_.Row(lead);
    for (std::size_t j = 0; j < nn; ++j) partial[lead + 1][j] = row[j];
    descend(descend, lead + 1);
  }
  min_dist_->store(static_cast<std::int64_t>(best), std::memory_order_release);
  return best;
}

bool FqCode::IsMds(std::uint64_t cap) const { return MinDistance(cap) == n() - k() + 1; }

FqCode FqCode::Scale(std::span<const FieldElem> a) const {
  if (a.size() != n()) throw Error(ErrorKind::kLengthMismatch, "scale vector length");
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].value == 0) throw Error(ErrorKind::kZeroScale, "scale entry " + std::to_string(j) + " is zero");
  }
  return Make(gen_.ScaleColumns(a), n());
}

}  // namespace ringlcd
