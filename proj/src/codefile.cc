#include "ringlcd/codefile.h"

#include <algorithm>
#include <string>
#include <vector>

#include "ringlcd/error.h"

namespace ringlcd {

namespace {

[[noreturn]] void Fail(ErrorKind kind, const std::string& path, const std::string& msg) {
  throw Error(kind, path.empty() ? msg : path + ": " + msg);
}

const Json& Require(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) Fail(ErrorKind::kParseError, path, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::uint64_t ReadUnsigned(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) Fail(ErrorKind::kParseError, path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n');
    throw Error(ErrorKind::kParseError, "line " + std::to_string(line) + ": " + e.what());
  }
}

FieldElem ReadElement(const Field& f, const Json& j, const std::string& path) {
  const std::uint64_t v = ReadUnsigned(j, path);
  if (v >= f.q()) Fail(ErrorKind::kFieldError, path, "encoding " + std::to_string(v) + " outside [0, " + std::to_string(f.q()) + ")");
  return {static_cast<std::uint32_t>(v)};
}

Matrix ReadMatrix(const Field& f, const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) Fail(ErrorKind::kParseError, path, "expected a list of rows");
  Matrix m(f, j.size(), n);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    const Json& row = j[r];
    if (!row.is_array()) Fail(ErrorKind::kParseError, row_path, "expected a row");
    if (row.size() != n) {
      Fail(ErrorKind::kDimensionError, row_path, "has " + std::to_string(row.size()) + " entries, n = " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) m(r, c) = ReadElement(f, row[c], row_path + "[" + std::to_string(c) + "]");
  }
  return m;
}

Json MatrixJson(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (auto x : m.Row(r)) row.push_back(x.value);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json FieldToJson(const Field& field) {
  return Json{{"p", field.p()}, {"e", field.e()}, {"modulus", field.modulus()}};
}

Field FieldFromJson(const Json& j) {
  const std::string path = "field";
  if (!j.is_object()) Fail(ErrorKind::kParseError, path, "expected an object");
  const auto p = ReadUnsigned(Require(j, "p", path), path + ".p");
  const auto e = j.contains("e") ? ReadUnsigned(j.at("e"), path + ".e") : 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus") && !j.at("modulus").is_null()) {
    const Json& m = j.at("modulus");
    if (!m.is_array()) Fail(ErrorKind::kParseError, path + ".modulus", "expected a coefficient list");
    modulus.emplace();
    for (std::size_t i = 0; i < m.size(); ++i) {
      modulus->push_back(static_cast<std::uint32_t>(ReadUnsigned(m[i], path + ".modulus[" + std::to_string(i) + "]")));
    }
  }
  try {
    return Field::Make(static_cast<std::uint32_t>(p), static_cast<unsigned>(e), modulus);
  } catch (const Error& err) {
    throw Error(ErrorKind::kFieldError, err.what());
  }
}

RCode ParseCodeFile(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) throw Error(ErrorKind::kParseError, "top level must be an object");
  if (doc.contains("kind") && doc.at("kind") != "ring-code") {
    throw Error(ErrorKind::kParseError, "kind: expected \"ring-code\"");
  }
  const Field f = FieldFromJson(Require(doc, "field", ""));
  const std::size_t n = ReadUnsigned(Require(doc, "n", ""), "n");

  Basis basis = Basis::kGamma;
  if (doc.contains("basis")) {
    const Json& b = doc.at("basis");
    if (b == "gamma") {
      basis = Basis::kGamma;
    } else if (b == "u") {
      basis = Basis::kU;
    } else {
      throw Error(ErrorKind::kParseError, "basis: expected \"gamma\" or \"u\"");
    }
  }

  const bool has_components = doc.contains("components");
  const bool has_generators = doc.contains("generators");
  if (has_components == has_generators) {
    throw Error(ErrorKind::kParseError, "exactly one of \"components\" and \"generators\" is required");
  }

  if (has_components) {
    const Json& comps = doc.at("components");
    if (!comps.is_array() || comps.size() != 4) {
      throw Error(ErrorKind::kDimensionError, "components: expected 4 generator matrices");
    }
    std::vector<FqCode> codes;
    for (std::size_t i = 0; i < 4; ++i) {
      codes.push_back(FqCode::Make(ReadMatrix(f, comps[i], n, "components[" + std::to_string(i) + "]"), n));
    }
    return RCode::FromComponents({codes[0], codes[1], codes[2], codes[3]});
  }

  const Json& gens = doc.at("generators");
  if (!gens.is_array()) throw Error(ErrorKind::kParseError, "generators: expected a list of rows");
  std::vector<RingVector> rows;
  for (std::size_t r = 0; r < gens.size(); ++r) {
    const std::string row_path = "generators[" + std::to_string(r) + "]";
    const Json& row = gens[r];
    if (!row.is_array()) throw Error(ErrorKind::kParseError, row_path + ": expected a row");
    if (row.size() != n) {
      throw Error(ErrorKind::kDimensionError, row_path + ": has " + std::to_string(row.size()) + " entries, n = " + std::to_string(n));
    }
    std::vector<Quad> entries(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::string path = row_path + "[" + std::to_string(j) + "]";
      if (!row[j].is_array() || row[j].size() != 4) {
        throw Error(ErrorKind::kDimensionError, path + ": expected 4 coordinates");
      }
      Quad quad;
      for (std::size_t i = 0; i < 4; ++i) quad[i] = ReadElement(f, row[j][i], path + "[" + std::to_string(i) + "]");
      entries[j] = basis == Basis::kU ? BasisConvert(f, BasisDirection::kUToGamma, quad) : quad;
    }
    rows.emplace_back(f, std::move(entries));
  }
  return RCode::FromGenerators(f, n, rows);
}

FqCode ParseFieldCodeFile(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) throw Error(ErrorKind::kParseError, "top level must be an object");
  if (doc.contains("kind") && doc.at("kind") != "field-code") {
    throw Error(ErrorKind::kParseError, "kind: expected \"field-code\"");
  }
  const Field f = FieldFromJson(Require(doc, "field", ""));
  const std::size_t n = ReadUnsigned(Require(doc, "n", ""), "n");
  return FqCode::Make(ReadMatrix(f, Require(doc, "generator", ""), n, "generator"), n);
}

Json CodeFileJson(const RCode& code, Representation rep, Basis basis) {
  Json doc{{"kind", "ring-code"}, {"field", FieldToJson(code.field())}, {"n", code.n()}};
  if (rep == Representation::kComponents) {
    doc["basis"] = "gamma";
    Json comps = Json::array();
    for (const auto& c : code.components()) comps.push_back(MatrixJson(c.gen()));
    doc["components"] = std::move(comps);
    return doc;
  }
  doc["basis"] = basis == Basis::kU ? "u" : "gamma";
  Json rows = Json::array();
  for (const auto& g : code.Generators()) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.size(); ++j) {
      const Quad quad = basis == Basis::kU ? g[j].UBasis() : g[j].gamma();
      row.push_back(Json{quad[0].value, quad[1].value, quad[2].value, quad[3].value});
    }
    rows.push_back(std::move(row));
  }
  doc["generators"] = std::move(rows);
  return doc;
}

Json FieldCodeFileJson(const FqCode& code) {
  return Json{{"kind", "field-code"},
              {"field", FieldToJson(code.field())},
              {"n", code.n()},
              {"generator", MatrixJson(code.gen())}};
}

std::string EmitCodeFile(const RCode& code, Representation rep, Basis basis) {
  return CodeFileJson(code, rep, basis).dump(2) + "\n";
}

std::string EmitFieldCodeFile(const FqCode& code) { return FieldCodeFileJson(code).dump(2) + "\n"; }

}  // namespace ringlcd
