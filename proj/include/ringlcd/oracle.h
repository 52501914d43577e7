#ifndef RINGLCD_ORACLE_H_
#define RINGLCD_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ringlcd/fqcode.h"
#include "ringlcd/rcode.h"
#include "ringlcd/ring.h"

// Brute-force ground truth. Nothing here touches the nullspace, Gram or dual
// code paths; everything is decided from codeword enumeration and direct
// evaluation of the inner products.
namespace ringlcd::oracle {

struct EnumBudget {
  std::uint64_t max_codewords = kDefaultEnumCap;
};

// <a, b>_l = sum_i a_i b_i^(p^l) over F_q.
FieldElem GaloisPairing(const Field& field, std::span<const FieldElem> a, std::span<const FieldElem> b,
                        unsigned l);

// Lee weight straight from the u-basis definition
// wt_H(a1, a1+a2, a1+a3, a1+a2+a3+a4), summed over coordinates.
std::size_t LeeWeightFromUBasis(const RingVector& x);

// Visits all q^k codewords once, messages in encoding order (first message
// digit most significant). Throws kCapExceeded when q^k exceeds the budget.
void ForEachCodeword(const FqCode& c, EnumBudget budget,
                     const std::function<void(const std::vector<FieldElem>&)>& visit);
void ForEachCodeword(const RCode& c, EnumBudget budget, const std::function<void(const RingVector&)>& visit);

std::vector<std::vector<FieldElem>> EnumCodewords(const FqCode& c, EnumBudget budget = {});
std::vector<RingVector> EnumCodewords(const RCode& c, EnumBudget budget = {});

// Minimum Hamming (field code) or Lee (ring code) weight over nonzero
// codewords. Throws kZeroCode, kCapExceeded.
std::size_t MinDistance(const FqCode& c, EnumBudget budget = {});
std::size_t MinDistance(const RCode& c, EnumBudget budget = {});

// True iff every t in c and s in d satisfy [t, s]_l = 0 and |c||d| fills the
// ambient space. All |c||d| pairs are tested when that fits in the budget;
// otherwise the pairs of F_q-spanning vectors, which is equivalent because
// the pairing is additive in both arguments and F_q-semilinear.
bool DualCheck(const FqCode& c, const FqCode& d, unsigned l, EnumBudget budget = {});
bool DualCheck(const RCode& c, const RCode& d, unsigned l, EnumBudget budget = {});

// log_q |{x in C : [c, x]_l = 0 for all c in C}|. Throws kCapExceeded, or
// kNonIntegralLog if the count is not a power of q.
std::size_t Hull(const FqCode& c, unsigned l, EnumBudget budget = {});
std::size_t Hull(const RCode& c, unsigned l, EnumBudget budget = {});

// The Gray images of all codewords of c are exactly the codewords of
// c.GrayImage().
bool GrayConsistent(const RCode& c, EnumBudget budget = {});

}  // namespace ringlcd::oracle

#endif  // RINGLCD_ORACLE_H_
