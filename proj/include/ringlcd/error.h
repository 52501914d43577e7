#ifndef RINGLCD_ERROR_H_
#define RINGLCD_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ringlcd {

enum class ErrorKind {
  kNotPrime,
  kBadModulus,
  kUnsupportedField,
  kDivisionByZero,
  kBadBeta,
  kEmptySet,
  kBadRank,
  kBadElement,
  kNotSquare,
  kRankDeficient,
  kOutOfRange,
  kSpecMismatch,
  kNotAUnit,
  kLengthMismatch,
  kBadL,
  kWidthMismatch,
  kZeroCode,
  kCapExceeded,
  kZeroScale,
  kMismatch,
  kSizeCap,
  kSupportMismatch,
  kFieldTooSmall,
  kDivisibilityFails,
  kBetaOne,
  kNonIntegralLog,
  kConsistency,
  kParseError,
  kFieldError,
  kDimensionError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ringlcd

#endif  // RINGLCD_ERROR_H_
