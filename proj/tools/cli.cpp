#include "cli.hpp"

#include "ainf/bar.hpp"
#include "ainf/dga_io.hpp"
#include "ainf/errors.hpp"
#include "ainf/massey.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace ainf::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kFormatVersion = 1;

struct Output {
  std::ostream& out;
  bool json_mode = false;
  json record;

  void line(const std::string& text) {
    if (!json_mode) out << text << "\n";
  }
  int finish(int code) {
    if (json_mode) out << record.dump(2) << "\n";
    return code;
  }
};

json vec_json(const Vec& v) {
  json a = json::array();
  for (const Rational& x : v) a.push_back(to_string(x));
  return a;
}

std::string describe_class(const GradedVectorSpace& space, int degree, const Vec& v) {
  std::string out;
  const auto& names = space.names(degree);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    Rational c = v[k];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1) out += to_string(c) + "*";
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

std::string describe_word(const Word& w, const GradedVectorSpace& space) { return to_string(w, space); }

// ---------------------------------------------------------------------------
// Inputs

struct Loaded {
  SourceFile source;
  Dga dga;
};

Loaded load(const std::string& path, int degree_cap) {
  Loaded l{load_source(path), {}};
  if (degree_cap > 0) l.source.spec.degree_cap = degree_cap;
  l.dga = build_dga(l.source.spec);
  return l;
}

struct ContractionChoice {
  bool table = false;
  std::string table_file;
  std::optional<std::uint64_t> random_seed;
  std::string homotopy = "standard";

  void add_to(CLI::App* app) {
    app->add_flag("--table", table, "Use the decomposition block of the input file");
    app->add_option("--table-file", table_file, "Use the decomposition block of another file");
    app->add_option("--random", random_seed, "Use a random decomposition with this seed");
    app->add_option("--homotopy", homotopy, "Homotopy sign: standard (id - iq = dK + Kd) or opposite")
        ->check(CLI::IsMember({"standard", "opposite"}));
  }

  std::string label() const {
    if (!table_file.empty()) return "table:" + table_file;
    if (table) return "table";
    if (random_seed) return "random:" + std::to_string(*random_seed);
    return "canonical";
  }

  std::shared_ptr<Contraction> build(const Loaded& l) const {
    Decomposition dec;
    if (!table_file.empty()) {
      std::ifstream in(table_file, std::ios::binary);
      if (!in) throw Error("cannot open '" + table_file + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      dec = parse_decomposition(buf.str(), l.dga);
    } else if (table) {
      if (!l.source.decomposition) throw ValidationError("the input file has no decomposition block");
      dec = decomposition_from_table(*l.source.decomposition, l.dga);
    } else if (random_seed) {
      dec = random_decomposition(l.dga, *random_seed);
    } else {
      dec = canonical_decomposition(l.dga);
    }
    const HomotopySign sign = homotopy == "opposite" ? HomotopySign::Opposite : HomotopySign::Standard;
    return std::make_shared<Contraction>(contraction_from_decomposition(l.dga, dec, sign));
  }
};

// "a01, a12, a23" or "a01*a14 - z1*z2; ..." : classes separated by ',' or ';'.
std::vector<HVec> parse_classes(const Loaded& l, const Cohomology& h, const std::string& text) {
  std::vector<HVec> out;
  std::string item;
  auto flush = [&]() {
    if (item.find_first_not_of(" \t") == std::string::npos) throw ValidationError("empty class in '" + text + "'");
    HVec v = l.dga.evaluate(parse_polynomial(item));
    if (v.degree > h.top_degree()) throw CapError("class '" + item + "' lies above the cohomology range", v.degree + 1);
    auto cls = h.class_of(v.degree, v.coeffs);
    if (!cls) throw ValidationError("'" + item + "' is not a cocycle");
    out.push_back(HVec{v.degree, *cls});
    item.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ';') {
      flush();
    } else {
      item += c;
    }
  }
  flush();
  return out;
}

json report_json(const IdentityReport& r, const GradedVectorSpace& space, std::size_t limit = 20) {
  json j;
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  j["violations"] = r.violations.size();
  json list = json::array();
  for (std::size_t k = 0; k < std::min(limit, r.violations.size()); ++k) {
    const auto& v = r.violations[k];
    list.push_back({{"arity", v.arity}, {"word", describe_word(v.word, space)}, {"residual", v.residual}});
  }
  j["first_violations"] = list;
  return j;
}

void print_report(Output& o, const std::string& what, const IdentityReport& r, const GradedVectorSpace& space) {
  o.line(what + ": " + std::to_string(r.checked) + " identities checked, " + std::to_string(r.skipped) +
         " skipped, " + std::to_string(r.violations.size()) + " violations");
  for (std::size_t k = 0; k < std::min<std::size_t>(10, r.violations.size()); ++k) {
    const auto& v = r.violations[k];
    o.line("  i=" + std::to_string(v.arity) + " " + describe_word(v.word, space) + ": " + v.residual);
  }
}

HVec class_from_text(const Dga& dga, const Cohomology& h, const std::string& text, int degree) {
  HVec v = dga.evaluate(parse_polynomial(text), degree);
  if (v.degree != degree) throw ValidationError("'" + text + "' has degree " + std::to_string(v.degree));
  auto cls = h.class_of(degree, v.coeffs);
  if (!cls) throw ValidationError("'" + text + "' is not a cocycle");
  return HVec{degree, *cls};
}

std::vector<int> degrees_of(const std::vector<HVec>& classes) {
  std::vector<int> out;
  for (const auto& x : classes) out.push_back(x.degree);
  return out;
}

json subspace_json(const Subspace& s) {
  json a = json::array();
  for (const auto& row : s.basis()) a.push_back(vec_json(row));
  return a;
}

json polyvec_json(const PolyVec& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(to_string(p));
  return a;
}

// ---------------------------------------------------------------------------
// Subcommands

struct Common {
  std::string file;
  int degree_cap = 0;
};

int cmd_validate(Output& o, const Common& c) {
  SourceFile source = load_source(c.file);
  if (c.degree_cap > 0) source.spec.degree_cap = c.degree_cap;
  std::vector<AxiomViolation> violations;
  try {
    Dga dga = build_dga(source.spec, false);
    violations = validate_dga(dga).violations;
  } catch (const ValidationError& e) {
    violations.push_back({"construction", e.what()});
  }
  o.record["valid"] = violations.empty();
  json list = json::array();
  for (const auto& v : violations) list.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  o.record["violations"] = list;
  if (violations.empty()) o.line("valid DGA up to degree " + std::to_string(source.spec.degree_cap));
  for (const auto& v : violations) o.line("violation (" + v.axiom + "): " + v.witness);
  return o.finish(violations.empty() ? kExitOk : kExitViolation);
}

int cmd_cohomology(Output& o, const Common& c) {
  Loaded l = load(c.file, c.degree_cap);
  Cohomology h(l.dga);
  json degrees = json::array();
  for (int n = 0; n <= h.top_degree(); ++n) {
    json names = h.space().names(n);
    degrees.push_back({{"degree", n}, {"dim_A", l.dga.dim(n)}, {"dim_H", h.dim(n)}, {"basis", names}});
    if (h.dim(n) == 0) continue;
    std::string text = "H^" + std::to_string(n) + " (dim " + std::to_string(h.dim(n)) + "):";
    for (const auto& name : h.space().names(n)) text += " " + name;
    o.line(text);
  }
  o.record["degree_cap"] = l.dga.degree_cap();
  o.record["degrees"] = degrees;
  return o.finish(kExitOk);
}

int cmd_contract(Output& o, const Common& c, const ContractionChoice& choice) {
  Loaded l = load(c.file, c.degree_cap);
  auto con = choice.build(l);
  auto checks = validate_contraction(*con);
  DecompositionTable table = table_from_decomposition(contraction_to_decomposition(*con), l.dga);
  o.record["contraction"] = choice.label();
  o.record["valid"] = checks.empty();
  json list = json::array();
  for (const auto& ch : checks) list.push_back({{"identity", ch.identity}, {"witness", ch.witness}});
  o.record["violations"] = list;
  o.record["decomposition"] = serialize(table);
  o.line("contraction: " + choice.label());
  o.line(serialize(table));
  for (const auto& ch : checks) o.line("violation (" + ch.identity + "): " + ch.witness);
  if (checks.empty()) o.line("all contraction identities hold");
  return o.finish(checks.empty() ? kExitOk : kExitViolation);
}

TransferResult run_transfer(const Loaded& l, const ContractionChoice& choice, int arity) {
  if (arity < 2) throw ValidationError("--arity must be at least 2");
  return transfer_ainfinity(choice.build(l), arity);
}

int cmd_transfer(Output& o, const Common& c, const ContractionChoice& choice, int arity) {
  Loaded l = load(c.file, c.degree_cap);
  TransferResult tr = run_transfer(l, choice, arity);
  const auto& a = *tr.structure;
  o.record["contraction"] = choice.label();
  o.record["arity"] = arity;
  json ops = json::array();
  for (int k = 2; k <= arity; ++k) {
    std::size_t nonzero = 0;
    for (const auto& [w, v] : a.entries(k)) {
      if (is_zero(v)) continue;
      ++nonzero;
      const int deg = a.output_degree(w);
      ops.push_back({{"k", k}, {"word", describe_word(w, a.space())}, {"degree", deg}, {"value", vec_json(v)}});
      if (k >= 3) o.line("m" + std::to_string(k) + describe_word(w, a.space()) + " = " + describe_class(a.space(), deg, v));
    }
    o.line("m" + std::to_string(k) + ": " + std::to_string(nonzero) + " nonzero values on basis words");
  }
  o.record["nonzero"] = ops;
  return o.finish(kExitOk);
}

int cmd_stasheff(Output& o, const Common& c, const ContractionChoice& choice, int arity) {
  Loaded l = load(c.file, c.degree_cap);
  TransferResult tr = run_transfer(l, choice, arity);
  IdentityReport r = check_stasheff(*tr.structure, arity);
  o.record["contraction"] = choice.label();
  o.record["arity"] = arity;
  o.record["report"] = report_json(r, tr.structure->space());
  print_report(o, "Stasheff identities", r, tr.structure->space());
  return o.finish(r.ok() ? kExitOk : kExitViolation);
}

int cmd_morphism(Output& o, const Common& c, const ContractionChoice& choice, int arity) {
  Loaded l = load(c.file, c.degree_cap);
  TransferResult tr = run_transfer(l, choice, arity);
  IdentityReport r = check_morphism(*tr.morphism, arity);
  o.record["contraction"] = choice.label();
  o.record["arity"] = arity;
  o.record["report"] = report_json(r, tr.morphism->source_space());
  print_report(o, "morphism identities", r, tr.morphism->source_space());
  return o.finish(r.ok() ? kExitOk : kExitViolation);
}

int cmd_bar(Output& o, const Common& c, const ContractionChoice& choice, int words) {
  Loaded l = load(c.file, c.degree_cap);
  TransferResult tr = run_transfer(l, choice, words);
  BarSlice bar = build_bar(tr.structure, words);
  IdentityReport r = check_square_zero(bar);
  AInfinityStructure back = structure_from_bar(bar);
  bool round_trip = true;
  for (int k = 1; k <= words && round_trip; ++k) round_trip = back.entries(k) == tr.structure->entries(k);
  o.record["contraction"] = choice.label();
  o.record["words"] = words;
  o.record["report"] = report_json(r, tr.structure->space());
  o.record["round_trip"] = round_trip;
  print_report(o, "delta^2 on the bar construction", r, tr.structure->space());
  o.line(std::string("m_k <-> g_k round trip: ") + (round_trip ? "identity" : "MISMATCH"));
  return o.finish(r.ok() && round_trip ? kExitOk : kExitViolation);
}

MasseyMode parse_mode(const std::string& s) {
  if (s == "canonical") return MasseyMode::Canonical;
  if (s == "sampled") return MasseyMode::Sampled;
  return MasseyMode::Symbolic;
}

json massey_json(const MasseySetDescriptor& m, const Cohomology& h) {
  json j;
  j["kind"] = to_string(m.kind);
  j["degree"] = m.degree;
  if (m.kind == MasseyKind::Coset) {
    j["base"] = vec_json(m.base);
    j["base_class"] = describe_class(h.space(), m.degree, m.base);
    j["directions"] = subspace_json(m.directions);
  }
  if (!m.value.empty()) j["value"] = polyvec_json(m.value);
  j["parameters"] = m.parameters;
  if (!m.reason.empty()) j["reason"] = m.reason;
  json samples = json::array();
  for (const auto& s : m.samples) samples.push_back(vec_json(s));
  j["samples"] = samples;
  return j;
}

void print_massey(Output& o, const MasseySetDescriptor& m, const Cohomology& h) {
  o.line("Massey set in degree " + std::to_string(m.degree) + ": " + to_string(m.kind));
  if (m.kind == MasseyKind::Coset) {
    o.line("  base: " + describe_class(h.space(), m.degree, m.base));
    o.line("  directions: " + std::to_string(m.directions.dim()));
    for (const auto& row : m.directions.basis()) o.line("    " + describe_class(h.space(), m.degree, row));
  }
  if (m.kind == MasseyKind::PolynomialImage) {
    std::string text;
    for (const auto& p : m.value) text += (text.empty() ? "" : ", ") + to_string(p);
    o.line("  value: (" + text + ")");
  }
  if (!m.reason.empty()) o.line("  " + m.reason);
  for (const auto& s : m.samples) o.line("  sample: " + describe_class(h.space(), m.degree, s));
}

int cmd_massey(Output& o, const Common& c, const std::string& classes, const std::string& mode, std::uint64_t seed,
               int samples) {
  Loaded l = load(c.file, c.degree_cap);
  Cohomology h(l.dga);
  auto xs = parse_classes(l, h, classes);
  if (xs.size() < 3) throw ValidationError("a Massey product needs at least three classes");
  MasseySetDescriptor m = higher_massey(l.dga, h, xs, {parse_mode(mode), seed, samples});
  o.record["classes"] = classes;
  o.record["mode"] = mode;
  o.record["massey"] = massey_json(m, h);
  print_massey(o, m, h);
  return o.finish(kExitOk);
}

DefiningSystem concrete_system(const MasseySetDescriptor& m) {
  if (!m.system) throw ValidationError("no defining system: the Massey set is " + to_string(m.kind));
  std::map<std::string, Rational> zeros;
  for (const auto& p : m.system->parameters) zeros[p] = 0;
  return specialize(*m.system, zeros);
}

int cmd_adapted(Output& o, const Common& c, const ContractionChoice& choice, const std::string& classes) {
  Loaded l = load(c.file, c.degree_cap);
  Cohomology h(l.dga);
  auto xs = parse_classes(l, h, classes);
  MasseySetDescriptor m = higher_massey(l.dga, h, xs);
  DefiningSystem ds = concrete_system(m);
  auto con = choice.build(l);
  AdaptedCheck check = is_adapted(*con, ds);
  o.record["contraction"] = choice.label();
  o.record["classes"] = classes;
  o.record["adapted"] = check.adapted;
  if (!check.adapted) o.record["witness"] = check.witness;
  o.line(choice.label() + " contraction " + (check.adapted ? "is" : "is not") + " adapted" +
         (check.adapted ? "" : ": " + check.witness));

  const int n = static_cast<int>(xs.size());
  try {
    auto ac = std::make_shared<Contraction>(build_adapted_contraction(l.dga, ds));
    TransferResult tr = transfer_ainfinity(ac, n);
    HVec mn = evaluate(*tr.structure, xs);
    const int eps = massey_signs(degrees_of(xs)).adapted;
    o.record["adapted_contraction"] = {{"built", true},
                                       {"m", vec_json(mn.coeffs)},
                                       {"epsilon", eps},
                                       {"decomposition", serialize(contraction_to_decomposition(*ac), l.dga)}};
    o.line("adapted contraction built; m" + std::to_string(n) + " = " + describe_class(h.space(), mn.degree, mn.coeffs) +
           ", epsilon = " + std::to_string(eps));
  } catch (const ValidationError& e) {
    o.record["adapted_contraction"] = {{"built", false}, {"reason", e.what()}};
    o.line(std::string("no adapted contraction: ") + e.what());
  }
  return o.finish(check.adapted ? kExitOk : kExitViolation);
}

// ---------------------------------------------------------------------------
// reproduce: runs a pipeline against an expected record shipped in the data
// directory. Every field present in the record is checked.

struct Checks {
  Output& o;
  json list = json::array();
  bool all = true;

  void add(const std::string& name, bool pass, const std::string& detail) {
    all = all && pass;
    list.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
    o.line(std::string(pass ? "ok   " : "FAIL ") + name + ": " + detail);
  }
};

fs::path data_dir(const std::string& option) {
  if (!option.empty()) return option;
  if (const char* env = std::getenv("AINF_DATA_DIR"); env && *env) return env;
  return AINF_DEFAULT_DATA_DIR;
}

json load_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void check_contraction_record(Checks& checks, const json& rec, const Loaded& l, const Cohomology& h,
                              const std::vector<HVec>& xs, const MasseySetDescriptor& set,
                              std::shared_ptr<Contraction> con, const std::string& label) {
  const int n = static_cast<int>(xs.size());
  const int deg = set.degree;
  TransferResult tr = transfer_ainfinity(con, n);
  HVec mn = evaluate(*tr.structure, xs);
  const std::string mname = "m" + std::to_string(n) + " (" + label + ")";
  const std::string shown = describe_class(h.space(), deg, mn.coeffs);
  if (rec.contains("m")) {
    HVec want = class_from_text(l.dga, h, rec["m"], deg);
    checks.add(mname, want == mn, shown + (want == mn ? "" : ", expected " + describe_class(h.space(), deg, want.coeffs)));
  }
  if (rec.contains("epsilon")) {
    const int eps = massey_signs(degrees_of(xs)).adapted;
    const bool pass = eps == rec["epsilon"].get<int>() && set.single_point() && mn.coeffs == Rational(eps) * set.base;
    checks.add(mname + " = epsilon * Massey value", pass, "epsilon = " + std::to_string(eps));
  }
  RecoveryVerdict v = verify_recovery(*tr.structure, xs, set);
  if (rec.contains("detects")) checks.add("detects (" + label + ")", v.detects == rec["detects"].get<bool>(), bool_text(v.detects));
  if (rec.contains("recovers"))
    checks.add("recovers (" + label + ")", v.recovers == rec["recovers"].get<bool>(), bool_text(v.recovers));
  if (rec.contains("gamma_check")) {
    const bool got = v.gamma_check.value_or(false);
    checks.add("gamma check (" + label + ")", v.gamma_check && got == rec["gamma_check"].get<bool>(),
               v.gamma_check ? bool_text(got) : "undecided");
  }
  if (rec.contains("gamma")) {
    HVec want = class_from_text(l.dga, h, rec["gamma"], deg);
    bool found = false;
    std::string detail;
    for (std::size_t k = 0; k < v.gammas.size(); ++k) {
      found = found || v.gammas[k] == want.coeffs;
      detail += (detail.empty() ? "" : "; ") + std::string("sigma = ") + std::to_string(v.gamma_signs[k]) +
                ": Gamma = " + describe_class(h.space(), deg, v.gammas[k]);
    }
    checks.add("Gamma (" + label + ")", found, detail.empty() ? "none" : detail);
  }
  if (rec.contains("canonical_system_ok")) {
    CanonicalSystemResult cs = defining_system_canonical(*tr.cache, xs);
    std::string detail = bool_text(cs.ok());
    if (!cs.ok())
      detail += " at (" + std::to_string(cs.failure->i) + ", " + std::to_string(cs.failure->j) + "): " + cs.failure->residual;
    checks.add("canonical defining system (" + label + ")", cs.ok() == rec["canonical_system_ok"].get<bool>(), detail);
  }
  if (rec.contains("adapted") && set.system) {
    AdaptedCheck a = is_adapted(*con, concrete_system(set));
    checks.add("is_adapted (" + label + ")", a.adapted == rec["adapted"].get<bool>(),
               bool_text(a.adapted) + (a.adapted ? "" : " (" + a.witness + ")"));
  }
}

int cmd_reproduce(Output& o, const std::string& name, const std::string& dir_option, int degree_cap, int seeds) {
  const fs::path dir = data_dir(dir_option);
  const json expected = load_json(dir / "expected" / (name + ".json"));
  if (expected.value("format_version", 0) != kFormatVersion)
    throw Error("unsupported expected-record format in " + name + ".json");
  Loaded l = load((dir / expected.at("input").get<std::string>()).string(), degree_cap);
  Cohomology h(l.dga);
  Checks checks{o};
  o.record["example"] = name;

  if (expected.contains("cohomology")) {
    const json& rec = expected["cohomology"];
    const int deg = rec.at("degree");
    std::vector<Vec> basis;
    for (const auto& text : rec.at("basis")) basis.push_back(class_from_text(l.dga, h, text, deg).coeffs);
    const bool pass = h.dim(deg) == basis.size() && Subspace::span(h.dim(deg), basis).dim() == basis.size();
    checks.add("H^" + std::to_string(deg) + " basis", pass, "dim " + std::to_string(h.dim(deg)));
  }

  std::vector<HVec> xs;
  for (const auto& text : expected.at("classes")) {
    const std::string s = text;
    HVec v = l.dga.evaluate(parse_polynomial(s));
    xs.push_back(class_from_text(l.dga, h, s, v.degree));
  }
  MasseySetDescriptor set = higher_massey(l.dga, h, xs);
  o.record["massey"] = massey_json(set, h);
  print_massey(o, set, h);

  if (expected.contains("massey")) {
    const json& rec = expected["massey"];
    checks.add("Massey set kind", to_string(set.kind) == rec.at("kind").get<std::string>(), to_string(set.kind));
    if (rec.contains("value")) {
      HVec want = class_from_text(l.dga, h, rec["value"], set.degree);
      const bool pass = set.single_point() && set.base == want.coeffs && !is_zero(to_poly(want.coeffs)) && is_constant(set.value);
      checks.add("Massey set is the single nonzero class", pass, describe_class(h.space(), set.degree, set.base));
    }
    if (rec.contains("family")) {
      std::vector<Vec> family;
      for (const auto& text : rec["family"]) family.push_back(class_from_text(l.dga, h, text, set.degree).coeffs);
      const Subspace want = Subspace::span(h.dim(set.degree), family);
      const bool pass = set.kind == MasseyKind::Coset && set.directions == want && want.contains(set.base);
      checks.add("Massey set is the linear family", pass,
                 std::to_string(set.directions.dim()) + " directions, expected " + std::to_string(want.dim()));
    }
    if (rec.contains("contains_zero")) {
      const bool got = set.contains(Vec(h.dim(set.degree))) == Membership::Yes;
      checks.add("set contains 0", got == rec["contains_zero"].get<bool>(), bool_text(got));
    }
    if (rec.contains("equals_indeterminacy") && xs.size() == 3) {
      Subspace ind = indeterminacy(l.dga, h, xs[0], xs[1], xs[2]);
      MasseySetDescriptor triple = triple_massey(l.dga, h, xs[0], xs[1], xs[2]);
      const bool got = set.kind == MasseyKind::Coset && set.directions == ind && triple.directions == ind &&
                       set.contains(triple.base) == Membership::Yes;
      checks.add("set is a coset of the indeterminacy", got == rec["equals_indeterminacy"].get<bool>(), bool_text(got));
    }
  }

  for (const auto& rec : expected.value("contractions", json::array())) {
    const std::string kind = rec.at("contraction");
    if (kind == "random") {
      const int count = seeds > 0 ? seeds : rec.value("seeds", 20);
      ContractionChoice choice;
      for (int s = 1; s <= count; ++s) {
        choice.random_seed = static_cast<std::uint64_t>(s);
        check_contraction_record(checks, rec, l, h, xs, set, choice.build(l), choice.label());
      }
      continue;
    }
    std::shared_ptr<Contraction> con;
    if (kind == "adapted") {
      con = std::make_shared<Contraction>(build_adapted_contraction(l.dga, concrete_system(set)));
    } else {
      ContractionChoice choice;
      choice.table = kind == "table";
      con = choice.build(l);
    }
    check_contraction_record(checks, rec, l, h, xs, set, con, kind);
  }

  o.record["checks"] = checks.list;
  o.record["reproduced"] = checks.all;
  o.line(checks.all ? name + " reproduced" : name + " NOT reproduced");
  return o.finish(checks.all ? kExitOk : kExitViolation);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"A-infinity structures, homotopy transfer and Massey products on DGAs", "ainf"};
  app.require_subcommand(1);
  bool json_mode = false;
  Common common;
  std::string dir_option;
  app.add_flag("--json", json_mode, "Machine-readable output");
  app.add_option("--degree-cap", common.degree_cap, "Override the degree cap of the input")->check(CLI::PositiveNumber);
  app.add_option("--data-dir", dir_option, "Directory with example files and expected records");

  ContractionChoice choice;
  int arity = 4;
  int words = 4;
  std::string classes;
  std::string mode = "symbolic";
  std::uint64_t seed = 1;
  int samples = 8;
  std::string example;
  int seeds = 0;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", common.file, "Input .dga file")->required(); };
  auto* validate = app.add_subcommand("validate", "Check the DGA axioms");
  with_file(validate);
  auto* cohomology = app.add_subcommand("cohomology", "Cohomology dimensions and bases");
  with_file(cohomology);
  auto* contract = app.add_subcommand("contract", "Build and check a contraction");
  with_file(contract);
  choice.add_to(contract);
  auto* transfer = app.add_subcommand("transfer", "Transferred A-infinity structure");
  with_file(transfer);
  choice.add_to(transfer);
  transfer->add_option("--arity", arity, "Highest operation")->check(CLI::Range(2, 12));
  auto* stasheff = app.add_subcommand("stasheff-check", "Check the Stasheff identities of the transfer");
  with_file(stasheff);
  choice.add_to(stasheff);
  stasheff->add_option("--arity", arity, "Highest arity")->check(CLI::Range(2, 12));
  auto* morphism = app.add_subcommand("morphism-check", "Check the morphism identities of the transfer");
  with_file(morphism);
  choice.add_to(morphism);
  morphism->add_option("--arity", arity, "Highest arity")->check(CLI::Range(2, 12));
  auto* bar = app.add_subcommand("bar-check", "Check delta^2 = 0 on the bar construction");
  with_file(bar);
  choice.add_to(bar);
  bar->add_option("--words", words, "Longest word")->check(CLI::Range(1, 12));
  auto* massey = app.add_subcommand("massey", "Massey product set");
  with_file(massey);
  massey->add_option("classes", classes, "Classes as polynomials separated by ',' or ';'")->required();
  massey->add_option("--mode", mode, "symbolic, canonical or sampled")
      ->check(CLI::IsMember({"symbolic", "canonical", "sampled"}));
  massey->add_option("--seed", seed, "Seed for sampled mode");
  massey->add_option("--samples", samples, "Samples for sampled mode")->check(CLI::PositiveNumber);
  auto* adapted = app.add_subcommand("adapted-check", "Whether a contraction is adapted to a Massey product");
  with_file(adapted);
  choice.add_to(adapted);
  adapted->add_option("classes", classes, "Classes as polynomials separated by ',' or ';'")->required();
  auto* reproduce = app.add_subcommand("reproduce", "Run a bundled example and compare with its expected record");
  reproduce->add_option("example", example, "example-2.6 or example-3.3")->required();
  reproduce->add_option("--seeds", seeds, "Number of random contractions (default: from the record)")
      ->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  Output o{out, json_mode, json::object()};
  o.record["format_version"] = kFormatVersion;
  o.record["command"] = app.get_subcommands().front()->get_name();
  try {
    if (validate->parsed()) return cmd_validate(o, common);
    if (cohomology->parsed()) return cmd_cohomology(o, common);
    if (contract->parsed()) return cmd_contract(o, common, choice);
    if (transfer->parsed()) return cmd_transfer(o, common, choice, arity);
    if (stasheff->parsed()) return cmd_stasheff(o, common, choice, arity);
    if (morphism->parsed()) return cmd_morphism(o, common, choice, arity);
    if (bar->parsed()) return cmd_bar(o, common, choice, words);
    if (massey->parsed()) return cmd_massey(o, common, classes, mode, seed, samples);
    if (adapted->parsed()) return cmd_adapted(o, common, choice, classes);
    if (reproduce->parsed()) return cmd_reproduce(o, example, dir_option, common.degree_cap, seeds);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ainf::cli
