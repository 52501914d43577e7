#ifndef RINGLCD_CODEFILE_H_
#define RINGLCD_CODEFILE_H_

#include <string>
#include <string_view>

#include "json.hpp"

#include "ringlcd/fqcode.h"
#include "ringlcd/rcode.h"

namespace ringlcd {

// Code files are JSON documents. A ring code:
//
//   {
//     "kind": "ring-code",                       (optional on input)
//     "field": {"p": 3, "e": 2, "modulus": [1, 0, 1]},  (modulus optional)
//     "n": 2,
//     "basis": "gamma",                          ("gamma" or "u"; default gamma)
//     "components": [G1, G2, G3, G4]             (matrices over F_q)
//   }
//
// or, instead of "components", "generators": a list of rows, each row a list
// of n quadruples in the declared basis. Exactly one of the two must appear.
// Field elements are their canonical integer encodings in [0, q).
//
// A field code (the Gray image, for instance) uses "kind": "field-code" and a
// single "generator" matrix.

using Json = nlohmann::ordered_json;

enum class Representation { kComponents, kGenerators };
enum class Basis { kGamma, kU };

Json FieldToJson(const Field& field);
Field FieldFromJson(const Json& j);

// Throws kParseError (with line or JSON path), kFieldError, kDimensionError.
RCode ParseCodeFile(std::string_view text);
FqCode ParseFieldCodeFile(std::string_view text);

Json CodeFileJson(const RCode& code, Representation rep = Representation::kComponents,
                  Basis basis = Basis::kGamma);
Json FieldCodeFileJson(const FqCode& code);

std::string EmitCodeFile(const RCode& code, Representation rep = Representation::kComponents,
                         Basis basis = Basis::kGamma);
std::string EmitFieldCodeFile(const FqCode& code);

}  // namespace ringlcd

#endif  // RINGLCD_CODEFILE_H_
