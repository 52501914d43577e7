#ifndef RINGLCD_CLI_H_
#define RINGLCD_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ringlcd/codefile.h"
#include "ringlcd/construct.h"
#include "ringlcd/error.h"
#include "ringlcd/rcode.h"

namespace ringlcd::cli {

inline constexpr int kReportVersion = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitBudget = 2,
  kExitInconsistent = 3,
};

int ExitCodeFor(ErrorKind kind);

// Parameters, LCD/hull data per l, self-orthogonality, self-duality and the
// MDS verdict against the ring Singleton bound n - k/4 + 1.
Json AnalyzeReport(const RCode& code, const std::vector<unsigned>& ls, std::uint64_t cap);
Json ConstructReport(const RCode& input, const RingConstruction& result, std::uint64_t cap);
Json MinDistReport(const RCode& code, std::uint64_t cap);
// Runs every brute-force cross-check; "all_agree" is false on any disagreement.
Json VerifyReport(const RCode& code, std::uint64_t budget);

std::string RenderText(const Json& report);

// Entry point of the command-line tool; args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringlcd::cli

#endif  // RINGLCD_CLI_H_
