#include "ringlcd/rcode.h"

#include <algorithm>
#include <string>

#include "ringlcd/error.h"

namespace ringlcd {

RCode RCode::FromComponents(std::array<FqCode, 4> components) {
  for (std::size_t i = 1; i < 4; ++i) {
    if (!(components[i].field() == components[0].field())) {
      throw Error(ErrorKind::kMismatch, "component " + std::to_string(i + 1) + " is over a different field");
    }
    if (components[i].n() != components[0].n()) {
      throw Error(ErrorKind::kMismatch, "component " + std::to_string(i + 1) + " has length " +
                                            std::to_string(components[i].n()));
    }
  }
  return RCode(std::move(components));
}

RCode RCode::FromGenerators(const Field& field, std::size_t n, const std::vector<RingVector>& rows) {
  std::array<std::vector<FieldElem>, 4> slots;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) {
      throw Error(ErrorKind::kWidthMismatch, "generator row " + std::to_string(r) + " has length " +
                                                 std::to_string(rows[r].size()));
    }
    if (!(rows[r].field() == field)) throw Error(ErrorKind::kSpecMismatch, "generator over a different field");
    for (std::size_t i = 0; i < 4; ++i) {
      const auto comp = rows[r].Component(i);
      slots[i].insert(slots[i].end(), comp.begin(), comp.end());
    }
  }
  auto make = [&](std::size_t i) { return FqCode::Make(Matrix(field, rows.size(), n, slots[i]), n); };
  return RCode({make(0), make(1), make(2), make(3)});
}

std::size_t RCode::k() const {
  std::size_t total = 0;
  for (const auto& c : comps_) total += c.k();
  return total;
}

std::vector<RingVector> RCode::Generators() const {
  std::vector<RingVector> rows;
  for (std::size_t i = 0; i < 4; ++i) {
    const Matrix& g = comps_[i].gen();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      std::vector<Quad> entries(n());
      for (std::size_t j = 0; j < n(); ++j) entries[j][i] = g(r, j);
      rows.emplace_back(field(), std::move(entries));
    }
  }
  return rows;
}

RCode RCode::GaloisDual(unsigned l) const {
  return RCode({comps_[0].GaloisDual(l), comps_[1].GaloisDual(l), comps_[2].GaloisDual(l),
                comps_[3].GaloisDual(l)});
}

FqCode RCode::GrayImage() const {
  const auto rows = Generators();
  Matrix m(field(), rows.size(), 4 * n());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto image = Gray(rows[r]);
    std::copy(image.begin(), image.end(), m.Row(r).begin());
  }
  return FqCode::Make(m, 4 * n());
}

RCodeParams RCode::Params(std::uint64_t cap) const {
  RCodeParams params;
  params.n = n();
  params.k = k();
  bool known = true;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < 4; ++i) {
    ComponentParams& cp = params.components[i];
    cp.n = n();
    cp.k = comps_[i].k();
    if (cp.k == 0) continue;
    try {
      cp.d = comps_[i].MinDistance(cap);
      best = best ? std::min(*best, *cp.d) : *cp.d;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kCapExceeded) throw;
      known = false;
    }
  }
  if (known) params.lee_distance = best;
  return params;
}

RingLcdVerdict RCode::IsLcd(unsigned l) const {
  RingLcdVerdict verdict;
  verdict.lcd = true;
  for (std::size_t i = 0; i < 4; ++i) {
    verdict.components[i] = comps_[i].IsLcd(l);
    verdict.lcd = verdict.lcd && verdict.components[i].lcd;
  }
  return verdict;
}

bool RCode::IsSelfOrthogonal(unsigned l) const {
  return std::all_of(comps_.begin(), comps_.end(), [l](const FqCode& c) { return c.IsSelfOrthogonal(l); });
}

bool RCode::IsSelfDual() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const FqCode& c) { return c.IsSelfDual(); });
}

bool RCode::IsMds(std::uint64_t cap) const {
  if (k() == 0) throw Error(ErrorKind::kZeroCode, "MDS test of the zero code");
  std::size_t d = n() + 1;
  for (const auto& c : comps_) {
    if (c.k() > 0) d = std::min(d, c.MinDistance(cap));
  }
  // d = n - k/4 + 1, scaled by 4 to stay integral.
  return 4 * d + k() == 4 * n() + 4;
}

RCode RCode::Scale(const RingVector& alpha) const {
  if (alpha.size() != n()) throw Error(ErrorKind::kLengthMismatch, "alpha length");
  for (std::size_t j = 0; j < n(); ++j) {
    if (!alpha[j].IsUnit()) throw Error(ErrorKind::kNotAUnit, "alpha entry " + std::to_string(j) + " is not a unit");
  }
  return RCode({comps_[0].Scale(alpha.Component(0)), comps_[1].Scale(alpha.Component(1)),
                comps_[2].Scale(alpha.Component(2)), comps_[3].Scale(alpha.Component(3))});
}

}  // namespace ringlcd
