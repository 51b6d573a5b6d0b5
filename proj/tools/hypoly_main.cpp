// Command-line frontend: every subcommand reads exact rational weights,
// computes with the header-only library, and emits a deterministic JSON
// response envelope on standard output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypoly/hypoly.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using namespace hypoly;

int max_n() {
  const char* env = std::getenv("HYPOLY_MAX_N");
  if (!env) return 10;
  int v = std::atoi(env);
  return v > 0 ? v : 10;
}

// ---- common option plumbing -------------------------------------------------

struct Ctx {
  bool pretty = false;
  std::string json_in;  // optional file with a params object
  ordered_json params;  // parsed --json-in payload

  void load() {
    if (json_in.empty()) return;
    std::ifstream f(json_in);
    if (!f) throw ParseError("cannot open " + json_in);
    try {
      params = ordered_json::parse(f);
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
  }
  bool has(const std::string& key) const { return params.contains(key); }
};

std::vector<std::string> as_string_list(const ordered_json& j, const std::string& what) {
  std::vector<std::string> out;
  if (!j.is_array()) throw ParseError(what + " must be a JSON array");
  for (const auto& x : j) {
    if (x.is_string())
      out.push_back(x.get<std::string>());
    else if (x.is_number_integer())
      out.push_back(std::to_string(x.get<long long>()));
    else
      throw ParseError(what + " entries must be rational strings");
  }
  return out;
}

WeightVector get_alpha(const Ctx& ctx, const std::string& flag_value) {
  WeightVector a = ctx.has("alpha")
                       ? WeightVector::parse(as_string_list(ctx.params["alpha"], "alpha"))
                       : WeightVector::parse(flag_value);
  a.validate();
  if (a.n() > max_n())
    throw ParseError("n exceeds HYPOLY_MAX_N = " + std::to_string(max_n()));
  return a;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(what + ": bad integer '" + tok + "'");
    }
  }
  return out;
}

IndexSet get_S(const Ctx& ctx, const std::string& flag_value, int n) {
  std::vector<int> idx;
  if (ctx.has("S"))
    idx = ctx.params["S"].get<std::vector<int>>();
  else
    idx = parse_int_list(flag_value, "S");
  for (int i : idx)
    if (i < 1 || i > n) throw ParseError("index out of range in S");
  return IndexSet::from_indices(idx, n);
}

ordered_json set_json(const IndexSet& S) {
  ordered_json a = ordered_json::array();
  for (int i : S.indices()) a.push_back(i);
  return a;
}

ordered_json dims_json(const std::vector<int>& dims) {
  ordered_json a = ordered_json::array();
  for (int d : dims) a.push_back(d);
  return a;
}

std::string poly_str(const Poly& p, const std::string& gen) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms) {
    std::string term = to_string(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      term += "*" + gen + std::to_string(i + 1);
      if (m[i] > 1) term += "^" + std::to_string(m[i]);
    }
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s;
}

Poly poly_from_json(const ordered_json& j, int n) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  Poly p;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exponents"))
      throw ParseError("each term needs 'coeff' and 'exponents'");
    Rat c = parse_rational(t["coeff"].is_string() ? t["coeff"].get<std::string>()
                                                  : t["coeff"].dump());
    auto e = t["exponents"].get<std::vector<int>>();
    if (static_cast<int>(e.size()) != n)
      throw ParseError("exponent vector length differs from n");
    p.add_term(e, c);
  }
  return p;
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  try {
    return ordered_json::parse(f);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad JSON in ") + path + ": " + e.what());
  }
}

WeightVector weights_from_file(const std::string& path) {
  ordered_json j = load_json_file(path);
  if (j.is_object() && j.contains("alpha")) j = j["alpha"];
  return WeightVector::parse(as_string_list(j, "alpha"));
}

// ---- subcommand bodies ------------------------------------------------------

ordered_json run_generic(const WeightVector& a) {
  return {{"n", a.n()}, {"generic", is_generic(a)}};
}

ordered_json run_shortsets(const WeightVector& a, int min_card) {
  ordered_json sets = ordered_json::array();
  for (const auto& S : short_sets(a, min_card)) sets.push_back(set_json(S));
  return {{"n", a.n()}, {"min_card", min_card}, {"sets", sets}};
}

ordered_json run_chamber(const WeightVector& a) {
  ChamberSignature sig = chamber_signature(a);
  ordered_json entries = ordered_json::array();
  for (const auto& [mask, sgn] : sig.signs)
    entries.push_back({{"S", set_json(IndexSet(mask, sig.n))}, {"sign", sgn}});
  return {{"n", sig.n}, {"signature", entries}};
}

ordered_json run_polygon_nonempty(const WeightVector& a) {
  return {{"nonempty", polygon_nonempty(a)}};
}

ordered_json run_fixed(const WeightVector& a) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : fixed_components(a)) {
    ordered_json e;
    e["type"] = c.diffeo_type();
    e["S"] = c.kind == FixedComponent::Kind::XS ? set_json(c.S) : ordered_json(nullptr);
    e["morse_index"] = c.morse_index;
    comps.push_back(e);
  }
  return {{"components", comps}};
}

ordered_json run_core(const WeightVector& a) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : core_components(a))
    comps.push_back({{"S", set_json(c.S)},
                     {"complex_dim", c.complex_dim},
                     {"projective_space", c.is_projective_space}});
  return {{"components", comps}};
}

ordered_json run_betti(const WeightVector& a) {
  auto px = poincare_X(a.n());
  auto pm = derived_polygon_poincare(a);
  return {{"poincare_X", dims_json(px.coefficients)},
          {"poincare_M", dims_json(pm.coefficients)}};
}

ordered_json run_triangular(const WeightVector& a) {
  require_generic(a);
  ordered_json sets = ordered_json::array();
  for (const auto& J : triangular_sets(a)) sets.push_back(set_json(J));
  return {{"m", a.n()}, {"sets", sets}};
}

ordered_json run_intersect(const WeightVector& a, const IndexSet& S,
                           const std::vector<int>& exps) {
  if (static_cast<int>(exps.size()) != a.n())
    throw ParseError("monomial exponent count differs from n");
  Int v = integrate(a, S, Monomial{exps});
  return {{"value", ordered_json::parse(v.get_str())}};
}

ordered_json run_pairing(const WeightVector& a, const IndexSet& S,
                         const ordered_json& basis_json) {
  if (!basis_json.is_array()) throw ParseError("basis must be an array of polynomials");
  std::vector<Poly> basis;
  for (const auto& pj : basis_json) basis.push_back(poly_from_json(pj, a.n()));
  auto M = pairing_matrix(a, S, basis);
  ordered_json rows = ordered_json::array();
  for (const auto& r : M) {
    ordered_json row = ordered_json::array();
    for (const auto& x : r) row.push_back(ordered_json::parse(x.get_str()));
    rows.push_back(row);
  }
  return {{"matrix", rows}};
}

ordered_json pres_json(const GradedRingPresentation& pres) {
  ordered_json rels = ordered_json::array();
  for (const auto& r : pres.relations) rels.push_back(poly_str(r, pres.generator));
  auto gd = graded_dims(pres);
  return {{"n", pres.n},
          {"generator", pres.generator},
          {"top_degree", pres.top_degree},
          {"relations", rels},
          {"dims", dims_json(gd.dims)},
          {"palindromic", gd.palindromic()}};
}

ordered_json run_verify_ideal(const WeightVector& a, const IndexSet& S) {
  return {{"consistent", verify_ideal_consistency(a, S)}};
}

ordered_json run_phb_critical(int g, int d, const std::string& weights_file,
                              bool restrict_H) {
  ordered_json j = load_json_file(weights_file);
  ParabolicWeights beta;
  if (!j.is_object() || !j.contains("beta1") || !j.contains("beta2"))
    throw ParseError("weights file needs 'beta1' and 'beta2'");
  for (const auto& s : as_string_list(j["beta1"], "beta1"))
    beta.beta1.push_back(parse_rational(s));
  for (const auto& s : as_string_list(j["beta2"], "beta2"))
    beta.beta2.push_back(parse_rational(s));
  beta.validate();
  if (beta.n() > max_n())
    throw ParseError("n exceeds HYPOLY_MAX_N = " + std::to_string(max_n()));
  auto comps = restrict_H ? critical_submanifolds_restricted(beta)
                          : critical_submanifolds(g, d, beta);
  ordered_json out = ordered_json::array();
  for (const auto& c : comps)
    out.push_back({{"d0", c.d0},
                   {"S", set_json(c.S)},
                   {"m", c.m},
                   {"morse_index", c.morse_index},
                   {"description", c.description}});
  return {{"g", g}, {"d", d}, {"components", out}};
}

std::array<Cx, 2> cx_pair(const ordered_json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(what + " must have 2 entries");
  auto one = [&](const ordered_json& e) {
    if (!e.is_array() || e.size() != 2) throw ParseError(what + " entries must be [re,im]");
    return Cx{e[0].get<double>(), e[1].get<double>()};
  };
  return {one(j[0]), one(j[1])};
}

ordered_json run_verify_isom(const std::string& point_file, double tol) {
  ordered_json j = load_json_file(point_file);
  ordered_json out;
  if (j.contains("alpha")) {
    WeightVector alpha = WeightVector::parse(as_string_list(j["alpha"], "alpha"));
    HyperpolygonPoint pt;
    for (const auto& e : j.at("p")) pt.p.push_back(cx_pair(e, "p"));
    for (const auto& e : j.at("q")) pt.q.push_back(cx_pair(e, "q"));
    if (pt.n() != alpha.n() || static_cast<int>(pt.p.size()) != alpha.n())
      throw ParseError("p, q, alpha lengths differ");
    auto [re, cx] = moment_residuals(pt, alpha);
    out["moment_residuals"] = {re, cx};
    auto st = alpha_stable(pt, alpha, tol);
    out["alpha_stable"] = st.stable;
    bool valid = st.stable && std::max(re, cx) <= tol;
    out["valid"] = valid;
    if (valid) {
      std::vector<Rat> b1(static_cast<std::size_t>(alpha.n()), Rat(0)), b2;
      for (int i = 0; i < alpha.n(); ++i) b2.push_back(alpha[i].base());
      PHBPoint phb = to_phb(pt, b1, b2, tol);
      double inv = 0.0;
      ResidueMatrix sum;
      for (int i = 0; i < phb.n(); ++i) {
        const auto& N = phb.residues[static_cast<std::size_t>(i)];
        sum = sum + N;
        inv = std::max({inv, std::abs(N.trace()), std::abs(N.det()),
                        N.apply_norm(phb.flags[static_cast<std::size_t>(i)])});
      }
      inv = std::max(inv, sum.norm());
      out["residue_invariants"] = inv;
      auto back = from_phb(phb, tol);
      double rt = 0.0;
      for (int i = 0; i < back.n(); ++i) {
        auto nf = normalize_flag(back.q[static_cast<std::size_t>(i)], tol);
        auto nr = residue_of(back.p[static_cast<std::size_t>(i)],
                             back.q[static_cast<std::size_t>(i)]);
        const auto& N = phb.residues[static_cast<std::size_t>(i)];
        rt = std::max({rt, std::abs(nf[0] - phb.flags[static_cast<std::size_t>(i)][0]),
                       std::abs(nf[1] - phb.flags[static_cast<std::size_t>(i)][1]),
                       (nr + ResidueMatrix{-N.r11, -N.r12, -N.r21, -N.r22}).norm()});
      }
      out["roundtrip_error"] = rt;
      out["phb_stable"] = phb_stable(phb, tol).stable;
    }
  } else if (j.contains("flags")) {
    PHBPoint phb;
    for (const auto& s : as_string_list(j.at("beta1"), "beta1"))
      phb.beta1.push_back(parse_rational(s));
    for (const auto& s : as_string_list(j.at("beta2"), "beta2"))
      phb.beta2.push_back(parse_rational(s));
    for (const auto& e : j.at("flags")) phb.flags.push_back(cx_pair(e, "flags"));
    for (const auto& e : j.at("residues")) {
      if (!e.is_array() || e.size() != 4)
        throw ParseError("each residue must be [r11,r12,r21,r22] as [re,im] pairs");
      auto one = [&](const ordered_json& x) {
        if (!x.is_array() || x.size() != 2) throw ParseError("residue entries are [re,im]");
        return Cx{x[0].get<double>(), x[1].get<double>()};
      };
      phb.residues.push_back({one(e[0]), one(e[1]), one(e[2]), one(e[3])});
    }
    double inv = 0.0;
    ResidueMatrix sum;
    for (int i = 0; i < phb.n(); ++i) {
      const auto& N = phb.residues[static_cast<std::size_t>(i)];
      sum = sum + N;
      inv = std::max({inv, std::abs(N.trace()), std::abs(N.det()),
                      N.apply_norm(phb.flags[static_cast<std::size_t>(i)])});
    }
    inv = std::max(inv, sum.norm());
    out["residue_invariants"] = inv;
    HyperpolygonPoint pt = from_phb(phb, tol);
    std::vector<Eps> a;
    for (std::size_t i = 0; i < phb.beta1.size(); ++i)
      a.emplace_back(phb.beta2[i] - phb.beta1[i]);
    WeightVector alpha(std::move(a));
    auto [re, cx] = moment_residuals(pt, alpha);
    out["moment_residuals"] = {re, cx};
    out["alpha_stable"] = alpha_stable(pt, alpha, tol).stable;
    out["phb_stable"] = phb_stable(phb, tol).stable;
  } else {
    throw ParseError("point file needs either 'alpha'/'p'/'q' or 'beta1'/'beta2'/'flags'/'residues'");
  }
  return out;
}

ordered_json run_wallcross(const std::string& minus_file, const std::string& plus_file) {
  WeightVector am = weights_from_file(minus_file);
  WeightVector ap = weights_from_file(plus_file);
  am.validate();
  ap.validate();
  WallCrossReport rep = crossing_report(am, ap);
  ordered_json changes = ordered_json::array();
  auto variant_name = [](ComponentChange::Variant v) {
    switch (v) {
      case ComponentChange::Variant::Replaced: return "Replaced";
      case ComponentChange::Variant::Unchanged: return "Unchanged";
      case ComponentChange::Variant::BlowUpDown_insideS: return "BlowUpDown_insideS";
      default: return "BlowUpDown_inSc";
    }
  };
  for (const auto& [B, ch] : rep.component_changes)
    changes.push_back({{"B", set_json(B)},
                       {"change", variant_name(ch.variant)},
                       {"center", ch.center}});
  return {{"wall", set_json(rep.wall.discrete_data)},
          {"S_minus_short", set_json(rep.S_minus_short)},
          {"removed", set_json(rep.removed)},
          {"added", set_json(rep.added)},
          {"component_changes", changes},
          {"polygon_change", rep.polygon_change}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of hyperpolygon spaces and rank-2 parabolic "
               "Higgs moduli"};
  app.require_subcommand(1);

  Ctx ctx;
  app.add_flag("--pretty", ctx.pretty, "indent the JSON output");

  std::string alpha_s, S_s, mono_s, space = "X", basis_file, weights_file,
              point_file, minus_file, plus_file;
  int min_card = 2, g = 0, d = 0;
  double tol = 1e-9;
  bool restrict_H = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json-in", ctx.json_in, "read parameters from a JSON file");
    sub->add_flag("--pretty", ctx.pretty, "indent the JSON output");
    return sub;
  };
  auto add_alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha_s, "comma-separated rational weights");
    return add_common(sub);
  };

  auto* c_generic = add_alpha(app.add_subcommand("generic", "genericity test"));
  auto* c_short = add_alpha(app.add_subcommand("shortsets", "enumerate short sets"));
  c_short->add_option("--min-card", min_card, "minimum cardinality (default 2)");
  auto* c_chamber = add_alpha(app.add_subcommand("chamber", "chamber signature"));
  auto* c_poly = add_alpha(
      app.add_subcommand("polygon-nonempty", "is the polygon space nonempty"));
  auto* c_fixed = add_alpha(app.add_subcommand("fixed", "circle-fixed components"));
  auto* c_core = add_alpha(app.add_subcommand("core", "core components"));
  auto* c_betti = add_alpha(app.add_subcommand("betti", "Poincare polynomials"));
  auto* c_tri = add_alpha(app.add_subcommand("triangular", "triangular sets"));
  auto* c_int = add_alpha(app.add_subcommand("intersect", "single monomial integral"));
  c_int->add_option("--S", S_s, "index set, comma-separated 1-based");
  c_int->add_option("--monomial", mono_s, "comma-separated exponents");
  auto* c_pair = add_alpha(app.add_subcommand("pairing", "intersection pairing matrix"));
  c_pair->add_option("--S", S_s, "index set");
  c_pair->add_option("--basis", basis_file, "JSON file with the basis polynomials");
  auto* c_ring = add_alpha(app.add_subcommand("ring", "cohomology ring presentation"));
  c_ring->add_option("--space", space, "X or US (default X)");
  c_ring->add_option("--S", S_s, "index set (US only)");
  auto* c_vi = add_alpha(app.add_subcommand("verify-ideal", "ideal/integration consistency"));
  c_vi->add_option("--S", S_s, "index set");
  auto* c_phb = add_common(app.add_subcommand("phb-critical", "Higgs critical submanifolds"));
  c_phb->add_option("--g", g, "genus (default 0)");
  c_phb->add_option("--d", d, "degree (default 0)");
  c_phb->add_option("--weights", weights_file, "JSON file with beta1/beta2");
  c_phb->add_flag("--restrict-H", restrict_H, "d0 = 0 components of g=0, d=0 only");
  auto* c_isom = add_common(app.add_subcommand("verify-isom", "isomorphism checks on a point"));
  c_isom->add_option("--point", point_file, "JSON point file");
  c_isom->add_option("--tol", tol, "tolerance (default 1e-9)");
  auto* c_wall = add_common(app.add_subcommand("wallcross", "wall-crossing report"));
  c_wall->add_option("--minus", minus_file, "JSON file with the minus-side weights");
  c_wall->add_option("--plus", plus_file, "JSON file with the plus-side weights");

  ordered_json envelope;
  int exit_code = 0;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) return app.exit(e);  // --help
      throw ParseError(e.what());
    }
    ctx.load();
    if (ctx.has("min_card")) min_card = ctx.params["min_card"].get<int>();
    if (ctx.has("monomial")) {
      mono_s.clear();
      for (int e : ctx.params["monomial"].get<std::vector<int>>())
        mono_s += (mono_s.empty() ? "" : ",") + std::to_string(e);
    }
    if (ctx.has("space")) space = ctx.params["space"].get<std::string>();
    if (ctx.has("g")) g = ctx.params["g"].get<int>();
    if (ctx.has("d")) d = ctx.params["d"].get<int>();
    if (ctx.has("tol")) tol = ctx.params["tol"].get<double>();
    if (ctx.has("restrict_H")) restrict_H = ctx.params["restrict_H"].get<bool>();

    ordered_json result;
    if (c_generic->parsed()) {
      result = run_generic(get_alpha(ctx, alpha_s));
    } else if (c_short->parsed()) {
      result = run_shortsets(get_alpha(ctx, alpha_s), min_card);
    } else if (c_chamber->parsed()) {
      result = run_chamber(get_alpha(ctx, alpha_s));
    } else if (c_poly->parsed()) {
      result = run_polygon_nonempty(get_alpha(ctx, alpha_s));
    } else if (c_fixed->parsed()) {
      result = run_fixed(get_alpha(ctx, alpha_s));
    } else if (c_core->parsed()) {
      result = run_core(get_alpha(ctx, alpha_s));
    } else if (c_betti->parsed()) {
      result = run_betti(get_alpha(ctx, alpha_s));
    } else if (c_tri->parsed()) {
      result = run_triangular(get_alpha(ctx, alpha_s));
    } else if (c_int->parsed()) {
      WeightVector a = get_alpha(ctx, alpha_s);
      result = run_intersect(a, get_S(ctx, S_s, a.n()),
                             parse_int_list(mono_s, "monomial"));
    } else if (c_pair->parsed()) {
      WeightVector a = get_alpha(ctx, alpha_s);
      ordered_json basis = ctx.has("basis") ? ctx.params["basis"]
                                            : load_json_file(basis_file);
      if (basis.is_object() && basis.contains("basis")) basis = basis["basis"];
      result = run_pairing(a, get_S(ctx, S_s, a.n()), basis);
    } else if (c_ring->parsed()) {
      WeightVector a = get_alpha(ctx, alpha_s);
      if (space == "X")
        result = pres_json(ring_X(a.n()));
      else if (space == "US")
        result = pres_json(ring_US(a, get_S(ctx, S_s, a.n())));
      else
        throw ParseError("--space must be X or US");
    } else if (c_vi->parsed()) {
      WeightVector a = get_alpha(ctx, alpha_s);
      result = run_verify_ideal(a, get_S(ctx, S_s, a.n()));
    } else if (c_phb->parsed()) {
      if (ctx.has("weights")) weights_file = ctx.params["weights"].get<std::string>();
      result = run_phb_critical(g, d, weights_file, restrict_H);
    } else if (c_isom->parsed()) {
      if (ctx.has("point")) point_file = ctx.params["point"].get<std::string>();
      result = run_verify_isom(point_file, tol);
    } else if (c_wall->parsed()) {
      if (ctx.has("minus")) minus_file = ctx.params["minus"].get<std::string>();
      if (ctx.has("plus")) plus_file = ctx.params["plus"].get<std::string>();
      result = run_wallcross(minus_file, plus_file);
    }
    envelope = {{"ok", true}, {"result", result}};
  } catch (const ParseError& e) {
    envelope = {{"ok", false}, {"error", {{"code", e.code()}, {"message", e.what()}}}};
    exit_code = 2;
  } catch (const NonGenericWeights& e) {
    envelope = {{"ok", false}, {"error", {{"code", e.code()}, {"message", e.what()}}}};
    exit_code = 2;
  } catch (const Error& e) {
    envelope = {{"ok", false}, {"error", {{"code", e.code()}, {"message", e.what()}}}};
    exit_code = 3;
  } catch (const std::exception& e) {
    envelope = {{"ok", false},
                {"error", {{"code", "INTERNAL"}, {"message", e.what()}}}};
    exit_code = 3;
  }
  std::cout << (ctx.pretty ? envelope.dump(2) : envelope.dump()) << "\n";
  return exit_code;
}
