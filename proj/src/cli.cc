#include "ringlcd/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "ringlcd/oracle.h"

namespace ringlcd::cli {

namespace {

Json OptionalNumber(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string OptionalText(const Json& j) { return j.is_null() ? "unknown" : j.dump(); }

Json QuadsJson(const std::vector<Quad>& quads) {
  Json out = Json::array();
  for (const auto& q : quads) out.push_back(Json{q[0].value, q[1].value, q[2].value, q[3].value});
  return out;
}

Json ElemsJson(const std::vector<FieldElem>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x.value);
  return out;
}

Json ParamsJson(const RCodeParams& p) {
  Json comps = Json::array();
  for (const auto& c : p.components) comps.push_back(Json{{"n", c.n}, {"k", c.k}, {"d", OptionalNumber(c.d)}});
  return Json{{"n", p.n}, {"k", p.k}, {"lee_distance", OptionalNumber(p.lee_distance)}, {"components", comps}};
}

Json Header(const char* command, const RCode& code) {
  Json field = FieldToJson(code.field());
  field["q"] = code.field().q();
  return Json{{"version", kReportVersion}, {"command", command}, {"field", field}};
}

std::string ReadInput(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void WriteOutput(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::kParseError, "cannot write " + path);
  file << text;
}

std::string FormatBound(std::int64_t quarters) {
  // quarters / 4 with at most two decimals
  std::ostringstream s;
  const bool neg = quarters < 0;
  const std::int64_t a = neg ? -quarters : quarters;
  s << (neg ? "-" : "") << a / 4;
  static const char* kFrac[] = {"", ".25", ".5", ".75"};
  s << kFrac[a % 4];
  return s.str();
}

std::string ParamsLine(const Json& p) {
  std::ostringstream s;
  s << "[" << p["n"] << ", " << p["k"] << ", " << OptionalText(p["lee_distance"]) << "]";
  return s.str();
}

void RenderComponents(std::ostream& s, const Json& params) {
  for (std::size_t i = 0; i < 4; ++i) {
    const Json& c = params["components"][i];
    const std::string d = c["k"] == 0 ? "-" : OptionalText(c["d"]);
    s << "  C" << i + 1 << ": [" << c["n"] << ", " << c["k"] << ", " << d << "]\n";
  }
}

std::string JoinList(const Json& arr) {
  std::string out = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? "," : "") + arr[i].dump();
  return out + ")";
}

}  // namespace

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCapExceeded:
    case ErrorKind::kSizeCap:
      return kExitBudget;
    case ErrorKind::kConsistency:
    case ErrorKind::kNonIntegralLog:
      return kExitInconsistent;
    default:
      return kExitInputError;
  }
}

Json AnalyzeReport(const RCode& code, const std::vector<unsigned>& ls, std::uint64_t cap) {
  Json report = Header("analyze", code);
  const RCodeParams params = code.Params(cap);
  report["parameters"] = ParamsJson(params);
  const std::int64_t quarters = 4 * static_cast<std::int64_t>(code.n()) - static_cast<std::int64_t>(code.k()) + 4;
  report["singleton_bound"] = static_cast<double>(quarters) / 4.0;
  if (code.k() == 0 || !params.lee_distance) {
    report["mds"] = nullptr;
  } else {
    report["mds"] = 4 * static_cast<std::int64_t>(*params.lee_distance) == quarters;
  }
  report["self_dual"] = code.IsSelfDual();

  Json per_l = Json::array();
  for (unsigned l : ls) {
    const RingLcdVerdict verdict = code.IsLcd(l);
    Json dets = Json::array(), hulls = Json::array();
    std::size_t hull_total = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      dets.push_back(verdict.components[i].gram_det.value);
      const std::size_t h = code.component(i).HullDim(l);
      hulls.push_back(h);
      hull_total += h;
    }
    per_l.push_back(Json{{"l", l},
                         {"lcd", verdict.lcd},
                         {"hull_dims", hulls},
                         {"hull_dim", hull_total},
                         {"gram_dets", dets},
                         {"self_orthogonal", code.IsSelfOrthogonal(l)},
                         {"dual_k", code.GaloisDual(l).k()}});
  }
  report["inner_products"] = per_l;
  return report;
}

Json ConstructReport(const RCode& input, const RingConstruction& result, std::uint64_t cap) {
  Json report = Header("construct-lcd", input);
  const bool euclid = result.mode.kind == LcdMode::Kind::kEuclidean;
  report["mode"] = euclid ? "euclid" : "galois";
  report["l"] = result.mode.DualL();
  report["beta"] = euclid ? Json(nullptr) : Json(result.beta);

  std::vector<Quad> u_form;
  for (std::size_t j = 0; j < result.alpha.size(); ++j) u_form.push_back(result.alpha[j].UBasis());
  report["alpha"] = Json{{"gamma", QuadsJson(result.alpha.gamma())}, {"u", QuadsJson(u_form)}};

  Json comps = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& part = result.components[i];
    if (!part) {
      comps.push_back(Json{{"component", i + 1}, {"already_lcd", true}});
      continue;
    }
    Json deleted = Json::array();
    for (auto r : part->minor.deleted) deleted.push_back(r);
    comps.push_back(Json{{"component", i + 1},
                         {"already_lcd", false},
                         {"t", part->minor.t},
                         {"deleted", deleted},
                         {"minor_det", part->minor.det_value.value},
                         {"perm", part->perm},
                         {"scale", ElemsJson(part->scale)},
                         {"b", ElemsJson(part->b)},
                         {"scaled_gram_det", part->scaled_gram_det.value}});
  }
  report["certificates"] = comps;

  const RCodeParams before = input.Params(cap);
  const RCodeParams after = result.code.Params(cap);
  report["input"] = ParamsJson(before);
  report["output"] = ParamsJson(after);
  report["output_lcd"] = result.code.IsLcd(result.mode.DualL()).lcd;
  report["parameters_preserved"] = before.k == after.k && before.lee_distance == after.lee_distance;
  return report;
}

Json MinDistReport(const RCode& code, std::uint64_t cap) {
  Json report = Header("mindist", code);
  RCodeParams params;
  params.n = code.n();
  params.k = code.k();
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < 4; ++i) {
    params.components[i] = {code.n(), code.component(i).k(), std::nullopt};
    if (code.component(i).k() == 0) continue;
    const std::size_t d = code.component(i).MinDistance(cap);  // throws on the cap
    params.components[i].d = d;
    best = best ? std::min(*best, d) : d;
  }
  params.lee_distance = best;
  report["parameters"] = ParamsJson(params);
  report["max_enum"] = cap;
  return report;
}

Json VerifyReport(const RCode& code, std::uint64_t budget) {
  Json report = Header("verify", code);
  const oracle::EnumBudget b{budget};
  Json checks = Json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back(Json{{"check", name}, {"agree", ok}});
    all = all && ok;
  };

  const FqCode gray = code.GrayImage();
  record("gray image dimension equals k", gray.k() == code.k());
  record("gray image of codewords matches gray code", oracle::GrayConsistent(code, b));
  if (code.k() > 0) {
    const std::size_t bf = oracle::MinDistance(code, b);
    const auto params = code.Params(budget);
    record("lee distance: brute force vs component minimum", params.lee_distance == bf);
    record("lee distance equals hamming distance of gray image", gray.MinDistance(budget) == bf);
  }

  for (unsigned l = 0; l < code.field().e(); ++l) {
    const std::string tag = " (l=" + std::to_string(l) + ")";
    const RCode dual = code.GaloisDual(l);
    record("dual pairs vanish and cardinalities multiply to q^4n" + tag, oracle::DualCheck(code, dual, l, b));
    record("k + k(dual) = 4n" + tag, code.k() + dual.k() == 4 * code.n());
    record("gray(dual) = dual(gray)" + tag, dual.GrayImage() == gray.GaloisDual(l));

    std::size_t hull = 0;
    bool each_lcd = true;
    for (std::size_t i = 0; i < 4; ++i) {
      const FqCode& c = code.component(i);
      const std::size_t h = c.HullDim(l);
      hull += h;
      const bool lcd = c.IsLcd(l).lcd;
      each_lcd = each_lcd && lcd;
      record("C" + std::to_string(i + 1) + " hull: rank formula vs enumeration" + tag, h == oracle::Hull(c, l, b));
      record("C" + std::to_string(i + 1) + " LCD: Gram determinant vs hull" + tag, lcd == (h == 0));
    }
    const std::size_t bf_hull = oracle::Hull(code, l, b);
    record("ring hull: enumeration vs component sum" + tag, bf_hull == hull);
    const bool lcd = code.IsLcd(l).lcd;
    record("ring LCD iff every component LCD" + tag, lcd == each_lcd && lcd == (bf_hull == 0));
    record("ring LCD iff gray image LCD" + tag, lcd == gray.IsLcd(l).lcd);
    if (code.k() > 0 && dual.k() > 0) {
      record("MDS iff dual MDS" + tag, code.IsMds(budget) == dual.IsMds(budget));
    }
  }
  report["checks"] = checks;
  report["all_agree"] = all;
  return report;
}

std::string RenderText(const Json& r) {
  std::ostringstream s;
  const std::string command = r["command"];
  const Json& f = r["field"];
  s << command << ": code over GF(" << f["q"] << "), p = " << f["p"] << ", e = " << f["e"]
    << ", modulus " << JoinList(f["modulus"]) << "\n";

  if (command == "analyze") {
    const Json& p = r["parameters"];
    s << "parameters [n, k, d_L]: " << ParamsLine(p) << "\n";
    RenderComponents(s, p);
    const auto quarters = static_cast<std::int64_t>(r["singleton_bound"].get<double>() * 4);
    s << "singleton bound: d_L <= " << FormatBound(quarters) << "\n";
    s << "MDS: " << OptionalText(r["mds"]) << "\n";
    s << "self-dual: " << r["self_dual"] << "\n";
    for (const auto& e : r["inner_products"]) {
      s << "l = " << e["l"] << ": LCD " << e["lcd"] << ", hull dims " << JoinList(e["hull_dims"])
        << " total " << e["hull_dim"] << ", Gram dets " << JoinList(e["gram_dets"]) << ", self-orthogonal "
        << e["self_orthogonal"] << ", dual k " << e["dual_k"] << "\n";
    }
  } else if (command == "construct-lcd") {
    s << "mode: " << r["mode"].get<std::string>() << ", l = " << r["l"];
    if (!r["beta"].is_null()) s << ", beta = " << r["beta"];
    s << "\n";
    s << "alpha (gamma): " << r["alpha"]["gamma"].dump() << "\n";
    s << "alpha (u):     " << r["alpha"]["u"].dump() << "\n";
    for (const auto& c : r["certificates"]) {
      s << "  C" << c["component"] << ": ";
      if (c["already_lcd"].get<bool>()) {
        s << "already LCD, scale all ones\n";
        continue;
      }
      s << "t = " << c["t"] << ", deleted " << c["deleted"].dump() << ", minor det " << c["minor_det"]
        << ", scale " << c["scale"].dump() << ", scaled Gram det " << c["scaled_gram_det"] << "\n";
    }
    s << "input  [n, k, d_L]: " << ParamsLine(r["input"]) << "\n";
    s << "output [n, k, d_L]: " << ParamsLine(r["output"]) << "\n";
    s << "output LCD: " << r["output_lcd"] << ", parameters preserved: " << r["parameters_preserved"] << "\n";
  } else if (command == "mindist") {
    s << "parameters [n, k, d_L]: " << ParamsLine(r["parameters"]) << "\n";
    RenderComponents(s, r["parameters"]);
  } else if (command == "verify") {
    for (const auto& c : r["checks"]) {
      s << (c["agree"].get<bool>() ? "  agree     " : "  DISAGREE  ") << c["check"].get<std::string>() << "\n";
    }
    s << (r["all_agree"].get<bool>() ? "all checks agree" : "DISAGREEMENT FOUND") << "\n";
  }
  return s.str();
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear codes over F_q + uF_q + vF_q + uvF_q: duals, hulls, LCD and MDS analysis"};
  app.name("ringlcd");
  app.require_subcommand(1);

  std::string file, output, mode = "euclid";
  std::vector<unsigned> ls;
  unsigned l = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t max_enum = kDefaultEnumCap;
  bool json = false;
  std::string gen_basis;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", file, "code file (JSON), '-' for stdin")->required();
    sub->add_flag("--json", json, "machine-readable report");
  };

  auto* analyze = app.add_subcommand("analyze", "parameters, LCD/hull per l, self-duality, MDS");
  common(analyze);
  analyze->add_option("--l", ls, "l values (default: all of 0..e-1)");
  analyze->add_option("--max-enum", max_enum, "codeword enumeration cap");

  auto* construct = app.add_subcommand("construct-lcd", "scale into an equivalent LCD code");
  common(construct);
  construct->add_option("--mode", mode, "euclid or galois")->check(CLI::IsMember({"euclid", "galois"}));
  construct->add_option("--l", l, "l for Galois mode");
  construct->add_option("--seed", seed, "randomize admissible scaling values");
  construct->add_option("-o,--output", output, "write the constructed code file here");
  construct->add_option("--max-enum", max_enum, "codeword enumeration cap");

  auto* dual = app.add_subcommand("dual", "write the l-Galois dual as a code file");
  dual->add_option("file", file, "code file (JSON), '-' for stdin")->required();
  dual->add_option("--l", l, "l in [0, e-1]");
  dual->add_option("-o,--output", output, "output path (default stdout)");
  dual->add_option("--generators", gen_basis, "emit R-generators in this basis (gamma or u)")
      ->check(CLI::IsMember({"gamma", "u"}));

  auto* gray = app.add_subcommand("gray", "write the Gray image as a field code file");
  gray->add_option("file", file, "code file (JSON), '-' for stdin")->required();
  gray->add_option("-o,--output", output, "output path (default stdout)");

  auto* mindist = app.add_subcommand("mindist", "component and Lee distances by enumeration");
  common(mindist);
  mindist->add_option("--max-enum", max_enum, "codeword enumeration cap");

  auto* verify = app.add_subcommand("verify", "cross-check every predicate against brute force");
  common(verify);
  verify->add_option("--max-enum", max_enum, "codeword enumeration cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto emit = [&](const Json& report) {
    if (json) {
      out << report.dump(2) << "\n";
    } else {
      out << RenderText(report);
    }
  };

  try {
    const RCode code = ParseCodeFile(ReadInput(file));
    if (analyze->parsed()) {
      if (ls.empty()) {
        for (unsigned i = 0; i < code.field().e(); ++i) ls.push_back(i);
      }
      emit(AnalyzeReport(code, ls, max_enum));
      return kExitOk;
    }
    if (construct->parsed()) {
      const LcdMode lcd_mode = mode == "galois" ? LcdMode::Galois(l) : LcdMode::Euclidean();
      ConstructOptions options;
      options.seed = seed;
      const RingConstruction result = RingLcdEquivalent(code, lcd_mode, options);
      Json report = ConstructReport(code, result, max_enum);
      report["seed"] = seed ? Json(*seed) : Json(nullptr);
      if (!output.empty()) {
        WriteOutput(output, EmitCodeFile(result.code), out);
        report["output_file"] = output;
      } else {
        report["code"] = CodeFileJson(result.code);
      }
      emit(report);
      return kExitOk;
    }
    if (dual->parsed()) {
      const RCode d = code.GaloisDual(l);
      const std::string text = gen_basis.empty()
                                   ? EmitCodeFile(d)
                                   : EmitCodeFile(d, Representation::kGenerators,
                                                  gen_basis == "u" ? Basis::kU : Basis::kGamma);
      WriteOutput(output, text, out);
      return kExitOk;
    }
    if (gray->parsed()) {
      WriteOutput(output, EmitFieldCodeFile(code.GrayImage()), out);
      return kExitOk;
    }
    if (mindist->parsed()) {
      emit(MinDistReport(code, max_enum));
      return kExitOk;
    }
    const Json report = VerifyReport(code, max_enum);
    emit(report);
    return report["all_agree"].get<bool>() ? kExitOk : kExitInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  }
}

}  // namespace ringlcd::cli
