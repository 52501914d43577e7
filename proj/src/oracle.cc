#include "ringlcd/oracle.h"

#include <algorithm>
#include <string>

#include "ringlcd/error.h"

namespace ringlcd::oracle {

namespace {

void CheckBudget(std::uint32_t q, std::size_t k, EnumBudget budget) {
  if (CodeSize(q, k) > budget.max_codewords) {
    throw Error(ErrorKind::kCapExceeded, std::to_string(q) + "^" + std::to_string(k) +
                                             " codewords exceed the budget of " +
                                             std::to_string(budget.max_codewords));
  }
}

// Odometer over F_q^k, last digit fastest.
bool NextMessage(std::vector<FieldElem>& msg, std::uint32_t q) {
  for (std::size_t i = msg.size(); i-- > 0;) {
    if (msg[i].value + 1 < q) {
      ++msg[i].value;
      return true;
    }
    msg[i].value = 0;
  }
  return false;
}

std::vector<FieldElem> Encode(const Matrix& gen, const std::vector<FieldElem>& msg) {
  const Field& f = gen.field();
  std::vector<FieldElem> word(gen.cols(), f.Zero());
  for (std::size_t r = 0; r < gen.rows(); ++r) {
    if (msg[r].value == 0) continue;
    for (std::size_t j = 0; j < gen.cols(); ++j) word[j] = f.Add(word[j], f.Mul(msg[r], gen(r, j)));
  }
  return word;
}

bool IsZero(std::span<const FieldElem> v) {
  return std::all_of(v.begin(), v.end(), [](FieldElem x) { return x.value == 0; });
}

std::size_t ExactLog(std::uint64_t count, std::uint32_t q) {
  std::size_t h = 0;
  while (count > 1) {
    if (count % q != 0) {
      throw Error(ErrorKind::kNonIntegralLog, "hull count " + std::to_string(count) +
                                                  " is not a power of " + std::to_string(q));
    }
    count /= q;
    ++h;
  }
  return h;
}

std::vector<std::vector<FieldElem>> GeneratorRows(const FqCode& c) {
  std::vector<std::vector<FieldElem>> rows;
  for (std::size_t r = 0; r < c.k(); ++r) rows.emplace_back(c.gen().Row(r).begin(), c.gen().Row(r).end());
  return rows;
}

}  // namespace

FieldElem GaloisPairing(const Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b, unsigned l) {
  if (a.size() != b.size()) throw Error(ErrorKind::kLengthMismatch, "pairing of unequal lengths");
  FieldElem acc = f.Zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.Add(acc, f.Mul(a[i], f.Frobenius(b[i], l)));
  return acc;
}

std::size_t LeeWeightFromUBasis(const RingVector& x) {
  const Field& f = x.field();
  std::size_t w = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto [a1, a2, a3, a4] = x[j].UBasis();
    const FieldElem parts[4] = {a1, f.Add(a1, a2), f.Add(a1, a3), f.Add(f.Add(a1, a2), f.Add(a3, a4))};
    for (auto v : parts) w += v.value != 0;
  }
  return w;
}

void ForEachCodeword(const FqCode& c, EnumBudget budget,
                     const std::function<void(const std::vector<FieldElem>&)>& visit) {
  const std::uint32_t q = c.field().q();
  CheckBudget(q, c.k(), budget);
  std::vector<FieldElem> msg(c.k(), c.field().Zero());
  do {
    visit(Encode(c.gen(), msg));
  } while (NextMessage(msg, q));
}

void ForEachCodeword(const RCode& c, EnumBudget budget, const std::function<void(const RingVector&)>& visit) {
  const Field& f = c.field();
  CheckBudget(f.q(), c.k(), budget);
  std::array<std::vector<std::vector<FieldElem>>, 4> words;
  for (std::size_t i = 0; i < 4; ++i) words[i] = EnumCodewords(c.component(i), budget);
  std::vector<Quad> entries(c.n());
  for (const auto& w1 : words[0])
    for (const auto& w2 : words[1])
      for (const auto& w3 : words[2])
        for (const auto& w4 : words[3]) {
          for (std::size_t j = 0; j < c.n(); ++j) entries[j] = {w1[j], w2[j], w3[j], w4[j]};
          visit(RingVector(f, entries));
        }
}

std::vector<std::vector<FieldElem>> EnumCodewords(const FqCode& c, EnumBudget budget) {
  std::vector<std::vector<FieldElem>> out;
  ForEachCodeword(c, budget, [&](const std::vector<FieldElem>& w) { out.push_back(w); });
  return out;
}

std::vector<RingVector> EnumCodewords(const RCode& c, EnumBudget budget) {
  std::vector<RingVector> out;
  ForEachCodeword(c, budget, [&](const RingVector& w) { out.push_back(w); });
  return out;
}

std::size_t MinDistance(const FqCode& c, EnumBudget budget) {
  if (c.k() == 0) throw Error(ErrorKind::kZeroCode, "minimum distance of the zero code");
  std::size_t best = c.n() + 1;
  ForEachCodeword(c, budget, [&](const std::vector<FieldElem>& w) {
    if (!IsZero(w)) best = std::min(best, HammingWeight(w));
  });
  return best;
}

std::size_t MinDistance(const RCode& c, EnumBudget budget) {
  if (c.k() == 0) throw Error(ErrorKind::kZeroCode, "minimum distance of the zero code");
  std::size_t best = 4 * c.n() + 1;
  ForEachCodeword(c, budget, [&](const RingVector& w) {
    const std::size_t wt = LeeWeightFromUBasis(w);
    if (wt > 0) best = std::min(best, wt);
  });
  return best;
}

bool DualCheck(const FqCode& c, const FqCode& d, unsigned l, EnumBudget budget) {
  const Field& f = c.field();
  if (l >= f.e()) throw Error(ErrorKind::kBadL, "l must lie in [0, e-1]");
  if (c.n() != d.n() || c.k() + d.k() != c.n()) return false;
  std::vector<std::vector<FieldElem>> lhs, rhs;
  if (CodeSize(f.q(), c.n()) <= budget.max_codewords) {
    lhs = EnumCodewords(c, budget);
    rhs = EnumCodewords(d, budget);
  } else {
    lhs = GeneratorRows(c);
    rhs = GeneratorRows(d);
  }
  for (const auto& t : lhs)
    for (const auto& s : rhs)
      if (GaloisPairing(f, t, s, l).value != 0) return false;
  return true;
}

bool DualCheck(const RCode& c, const RCode& d, unsigned l, EnumBudget budget) {
  const Field& f = c.field();
  if (c.n() != d.n() || c.k() + d.k() != 4 * c.n()) return false;
  std::vector<RingVector> lhs, rhs;
  if (CodeSize(f.q(), 4 * c.n()) <= budget.max_codewords) {
    lhs = EnumCodewords(c, budget);
    rhs = EnumCodewords(d, budget);
  } else {
    lhs = c.Generators();
    rhs = d.Generators();
  }
  for (const auto& t : lhs)
    for (const auto& s : rhs)
      if (!GaloisInnerProduct(t, s, l).IsZero()) return false;
  return true;
}

std::size_t Hull(const FqCode& c, unsigned l, EnumBudget budget) {
  const Field& f = c.field();
  if (l >= f.e()) throw Error(ErrorKind::kBadL, "l must lie in [0, e-1]");
  const auto gens = GeneratorRows(c);
  std::uint64_t count = 0;
  ForEachCodeword(c, budget, [&](const std::vector<FieldElem>& x) {
    for (const auto& g : gens)
      if (GaloisPairing(f, g, x, l).value != 0) return;
    ++count;
  });
  return ExactLog(count, f.q());
}

std::size_t Hull(const RCode& c, unsigned l, EnumBudget budget) {
  const auto gens = c.Generators();
  std::uint64_t count = 0;
  ForEachCodeword(c, budget, [&](const RingVector& x) {
    for (const auto& g : gens)
      if (!GaloisInnerProduct(g, x, l).IsZero()) return;
    ++count;
  });
  return ExactLog(count, c.field().q());
}

bool GrayConsistent(const RCode& c, EnumBudget budget) {
  const FqCode image = c.GrayImage();
  if (image.k() != c.k()) return false;
  bool ok = true;
  std::uint64_t count = 0;
  ForEachCodeword(c, budget, [&](const RingVector& w) {
    ++count;
    if (ok && !image.Contains(Gray(w))) ok = false;
  });
  return ok && count == CodeSize(c.field().q(), image.k());
}

}  // namespace ringlcd::oracle
