#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "aus/correspond.hpp"
#include "aus/errors.hpp"
#include "aus/io.hpp"

using namespace aus;

namespace {

constexpr int kExitPass = 0, kExitRefuted = 1, kExitInput = 2, kExitIndeterminate = 3;

struct Common {
  std::uint64_t seed = 0;
  std::optional<int> cap;
  std::string report, field, out;
  int cap_or(int d) const { return cap.value_or(d); }
};

void add_common(CLI::App* c, Common& o) {
  c->add_option("--seed", o.seed, "seed for randomized internals")->capture_default_str();
  c->add_option("--cap", o.cap, "degree or dimension cap");
  c->add_option("--report", o.report, "write the RunReport JSON here");
  c->add_option("--field", o.field, "override the field of the algebra file (Q, F2, F3, F5)");
}

struct Report {
  Json j = Json::object();
  bool refuted = false, indeterminate = false;

  void verdict(const std::string& name, Tri t) {
    j["verdicts"][name] = tri_str(t);
    refuted = refuted || t == Tri::False;
    indeterminate = indeterminate || t == Tri::Unknown;
  }
  void verdict(const std::string& name, bool b) { verdict(name, b ? Tri::True : Tri::False); }
  Json& result(const std::string& name) { return j["results"][name]; }
  Json& witness(const std::string& name) { return j["witnesses"][name]; }
  int exit_code() const { return refuted ? kExitRefuted : indeterminate ? kExitIndeterminate : kExitPass; }
};

AlgebraPtr read_algebra(const std::string& path, const Common& o) {
  Json j = read_json_file(path);
  if (!o.field.empty()) j["field"] = o.field;
  return parse_algebra(j, o.seed);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// P<v>, I<v> or S<v> where they apply, otherwise the dimension vector.
std::string module_label(const Module& m) {
  const auto& names = m.alg->vertex_labels();
  if (int v = projective_vertex(m); v >= 0) return "P" + names[v];
  if (int v = injective_vertex(m); v >= 0) return "I" + names[v];
  if (is_simple_module(m))
    for (int v = 0; v < m.alg->nverts(); ++v)
      if (m.vdim[v] > 0) return "S" + names[v];
  return "M(" + join(m.vdim) + ")";
}

struct Labelled {
  std::vector<Module> mods;
  std::vector<std::string> labels;
};

// Sorted by label; repeated labels get a suffix.
Labelled labelled(std::vector<Module> mods) {
  std::vector<std::pair<std::string, Module>> tmp;
  for (auto& m : mods) tmp.push_back({module_label(m), m});
  std::stable_sort(tmp.begin(), tmp.end(), [](auto& a, auto& b) {
    return a.first != b.first ? a.first < b.first : a.second.vdim < b.second.vdim;
  });
  Labelled out;
  std::map<std::string, int> seen;
  for (auto& [l, m] : tmp) {
    int k = seen[l]++;
    out.labels.push_back(k == 0 ? l : l + "#" + std::to_string(k));
    out.mods.push_back(m);
  }
  return out;
}

Json module_json(const Module& m, const std::string& label) {
  Json j = module_summary(m);
  j["label"] = label;
  return j;
}

// Pairwise non-isomorphic indecomposable summands.
std::vector<Module> basic_summands(const std::vector<Module>& ms, std::uint64_t seed) {
  std::vector<Module> out;
  for (auto& m : ms)
    for (auto& s : indecomposable_summands(m, seed))
      if (find_iso(out, s, seed) < 0) out.push_back(s);
  return out;
}

Labelled all_indecs(const AlgebraPtr& a, const Common& o) {
  IndecList l = knit_indecomposables(a, 200, 64, o.seed);
  if (!l.complete) throw IncompleteEnumeration("knitting did not close within its caps");
  return labelled(l.mods);
}

std::string bounded_json(const Bounded& b, bool infinite = false) { return infinite ? "inf" : bounded_str(b); }

void write_dot(const std::string& dot, const Common& o) {
  if (o.out.empty()) {
    std::cout << dot;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ParseError("cannot write " + o.out);
  f << dot;
}

// ---------------------------------------------------------------------------

Report cmd_invariants(const std::string& path, int bound, const Common& o) {
  Report r;
  AlgebraPtr a = read_algebra(path, o);
  const int cap = o.cap_or(kDefaultCap);
  r.result("field") = field_str(a->field());
  r.result("dim") = a->dim();
  r.result("vertices") = a->vertex_labels();
  Json cartan = Json::array();
  for (auto& row : cartan_matrix(a)) cartan.push_back(row);
  r.result("cartan") = cartan;
  const bool selfinj = is_injective(regular_module(a));
  r.result("selfinjective") = selfinj;
  // A finite coresolution of A settles bounds that would otherwise stop at the cap.
  Bounded ida = id(regular_module(a), cap), ida_op = id(regular_module(a->opposite()), cap);
  auto settled = [&](const Bounded& b, const Bounded& idv) { return !b.exact && idv.exact && idv.value < cap; };
  Bounded g = gldim(a, cap);
  Bounded dd = domdim(a, cap), ddo = domdim(a->opposite(), cap);
  Bounded gp = gorenstein_profile(a, cap);
  bool g_inf = !g.exact && selfinj;
  bool dd_inf = settled(dd, ida) || (!dd.exact && selfinj);
  bool ddo_inf = settled(ddo, ida_op) || (!ddo.exact && selfinj);
  bool gp_inf = settled(gp, ida) || (!gp.exact && selfinj);
  r.result("gldim") = bounded_json(g, g_inf);
  r.result("domdim") = bounded_json(dd, dd_inf);
  r.result("domdim_op") = bounded_json(ddo, ddo_inf);
  r.result("gorenstein") = bounded_json(gp, gp_inf);
  r.verdict("gldim_determined", g.exact || g_inf ? Tri::True : Tri::Unknown);
  r.verdict("domdim_determined", (dd.exact || dd_inf) && (ddo.exact || ddo_inf) ? Tri::True : Tri::Unknown);
  r.verdict("gorenstein_determined", gp.exact || gp_inf ? Tri::True : Tri::Unknown);
  Json table = Json::array();
  Tri all = Tri::True;
  for (int m = 1; m <= bound; ++m)
    for (int n = 1; n <= bound; ++n) {
      Tri left = mn_condition(a, m, n, cap), right = mn_condition(a->opposite(), m, n, cap);
      if (left == Tri::Unknown || right == Tri::Unknown) all = Tri::Unknown;
      table.push_back({{"m", m}, {"n", n}, {"left", tri_str(left)}, {"right", tri_str(right)}});
    }
  r.result("mn_table") = table;
  r.verdict("mn_table_determined", all);

  std::cout << "dim " << a->dim() << "  vertices " << a->nverts() << "  field " << field_str(a->field()) << "\n";
  std::cout << "cartan";
  for (auto& row : cartan_matrix(a)) std::cout << " [" << join(row) << "]";
  std::cout << "\ngldim " << r.result("gldim").get<std::string>() << "  domdim " << r.result("domdim").get<std::string>()
            << "  domdim_op " << r.result("domdim_op").get<std::string>() << "  gorenstein "
            << r.result("gorenstein").get<std::string>() << (selfinj ? "  selfinjective" : "") << "\n";
  return r;
}

Report cmd_indecs(const std::string& path, const std::string& method, const Common& o) {
  Report r;
  AlgebraPtr a = read_algebra(path, o);
  IndecList l;
  if (method == "brute") {
    const int cap = o.cap_or(4);
    r.j["cap"] = cap;
    try {
      l = brute_indecomposables(a, cap, o.seed);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  } else {
    l = knit_indecomposables(a, 200, o.cap_or(64), o.seed);
  }
  Labelled lb = labelled(l.mods);
  Json list = Json::array();
  for (std::size_t i = 0; i < lb.mods.size(); ++i) list.push_back(module_json(lb.mods[i], lb.labels[i]));
  r.result("method") = method;
  r.result("count") = lb.mods.size();
  r.result("modules") = list;
  r.result("complete") = l.complete;
  r.verdict("complete", l.complete ? Tri::True : Tri::Unknown);
  std::cout << lb.mods.size() << " indecomposables (" << method << ", " << (l.complete ? "complete" : "incomplete")
            << ")\n";
  for (std::size_t i = 0; i < lb.mods.size(); ++i)
    std::cout << "  " << lb.labels[i] << "  dims [" << join(lb.mods[i].vdim) << "]\n";
  return r;
}

struct Setting {
  AlgebraPtr a;
  Module t;
  int m = 0;
  Labelled ind_b;  // indecomposables of ⊥T
};

Setting read_setting(const std::string& path, const std::string& cotilting, const Common& o, Report& r) {
  Setting s;
  s.a = read_algebra(path, o);
  const int cap = o.cap_or(kDefaultCap);
  if (cotilting.empty()) {
    s.t = injective_cogenerator(s.a);
  } else {
    s.t = direct_sum_module(s.a, load_modules(s.a, cotilting));
  }
  Bounded it = id(s.t, cap);
  if (!it.exact) throw PreconditionFailed("the cotilting module has injective dimension beyond the cap");
  s.m = it.value;
  CotiltingCert cert = is_cotilting(s.t, s.m, cap);
  r.verdict("cotilting", cert.valid());
  Labelled all = all_indecs(s.a, o);
  std::vector<Module> keep;
  for (auto& x : all.mods)
    if (in_perp_T(x, s.t, std::max(s.m, 1), cap)) keep.push_back(x);
  s.ind_b = labelled(keep);
  r.result("m") = s.m;
  r.result("ind_B") = s.ind_b.labels;
  return s;
}

Report cmd_orthogonal(const std::string& path, int n, const std::string& mode, const std::string& cotilting,
                      const std::string& modules, const Common& o) {
  Report r;
  const int cap = o.cap_or(kDefaultCap);
  Setting s = read_setting(path, cotilting, o, r);
  const auto& ind = s.ind_b.mods;
  const int k = static_cast<int>(ind.size());
  r.result("n") = n;
  if (mode == "enumerate") {
    if (k > 24) throw PreconditionFailed("too many indecomposables for an exhaustive subset search");
    // bad[x][y]: Ext^i(X,Y) != 0 for some 0 < i < n.
    std::vector<std::vector<bool>> bad(k, std::vector<bool>(k, false));
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) {
        OrthoResult res = ortho_between({ind[x]}, {ind[y]}, n - 1, cap);
        if (res.verdict == Tri::Unknown) throw Inconclusive("Ext beyond the cap");
        bad[x][y] = res.verdict == Tri::False;
      }
    Json found = Json::array();
    std::cout << "maximal " << n - 1 << "-orthogonal subcategories:\n";
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      auto in = [&](int x) { return (mask >> x) & 1u; };
      bool ok = true;
      for (int x = 0; x < k && ok; ++x)
        for (int y = 0; y < k && ok; ++y)
          if (in(x) && in(y) && bad[x][y]) ok = false;
      for (int z = 0; z < k && ok; ++z) {
        if (in(z)) continue;
        bool right = true, left = true;  // Z in C^⊥, Z in ⊥C
        for (int x = 0; x < k; ++x)
          if (in(x)) right = right && !bad[x][z], left = left && !bad[z][x];
        if (right || left) ok = false;
      }
      if (!ok) continue;
      std::vector<std::string> names;
      for (int x = 0; x < k; ++x)
        if (in(x)) names.push_back(s.ind_b.labels[x]);
      found.push_back({{"size", names.size()}, {"members", names}});
      std::cout << "  {";
      for (std::size_t i = 0; i < names.size(); ++i) std::cout << (i ? ", " : "") << names[i];
      std::cout << "}\n";
    }
    r.result("subcategories") = found;
    r.result("count") = found.size();
    r.verdict("exhaustive", true);
    return r;
  }
  if (modules.empty()) throw ParseError("verify mode needs --modules");
  Labelled c = labelled(basic_summands(load_modules(s.a, modules), o.seed));
  r.result("C") = c.labels;
  OrthoResult oc = ortho_check(c.mods, n - 1, cap);
  r.verdict("orthogonal", oc.verdict);
  if (oc.witness)
    r.witness("orthogonal") = {{"x", c.labels[oc.witness->x]}, {"y", c.labels[oc.witness->y]},
                               {"degree", oc.witness->degree}};
  bool inside = true;
  for (auto& x : c.mods) inside = inside && in_perp_T(x, s.t, std::max(s.m, 1), cap);
  r.verdict("inside_B", inside);
  MaximalityResult mx = maximal_ortho_enumerative(c.mods, n, ind, true, cap);
  r.verdict("maximal", mx.maximal);
  if (mx.witness) r.witness("maximal") = {{"module", s.ind_b.labels[*mx.witness]}, {"reason", mx.reason}};
  std::cout << "orthogonal " << tri_str(oc.verdict) << "  maximal " << (mx.maximal ? "true" : "false");
  if (mx.witness) std::cout << "  witness " << s.ind_b.labels[*mx.witness] << " (" << mx.reason << ")";
  std::cout << "\n";
  return r;
}

Json gamma_json(const AlgebraPtr& g, int cap) {
  Bounded gd = gldim(g, cap), dd = domdim(g, cap);
  return {{"dim", g->dim()}, {"vertices", g->nverts()}, {"gldim", bounded_str(gd)}, {"domdim", bounded_str(dd)}};
}

Report cmd_auslander_verify(const std::string& path, const std::string& modules, const std::string& cotilting, int m,
                            int n, bool quasi, bool roundtrip, const Common& o) {
  Report r;
  const int cap = o.cap_or(kDefaultCap);
  AlgebraPtr a = read_algebra(path, o);
  Module t = cotilting.empty() ? injective_cogenerator(a) : direct_sum_module(a, load_modules(a, cotilting));
  Labelled mm = modules.empty() ? all_indecs(a, o) : labelled(basic_summands(load_modules(a, modules), o.seed));
  AuslanderTriple tr{a, mm.mods, t, m, n, quasi};
  TripleCheck c = verify_triple(tr, cap);
  r.result("M") = mm.labels;
  r.verdict("cotilting", c.cotilting);
  r.verdict("contains_lambda_and_T", c.contains);
  r.verdict("inside_perp_T", c.in_perp);
  r.verdict("orthogonal", c.orthogonal);
  if (!quasi) r.verdict("maximal", c.maximal);
  if (!c.reason.empty()) r.witness("triple") = c.reason;
  AlgebraPtr gamma = end_algebra(mm.mods).alg;
  r.result("gamma") = gamma_json(gamma, cap);
  r.verdict("gamma_auslander", check_auslander_algebra(gamma, m, n, cap));
  if (roundtrip && c.verdict == Tri::True) {
    Roundtrip rt = check_roundtrip(tr, cap);
    r.verdict("roundtrip_algebra", rt.algebra_iso);
    r.verdict("roundtrip_generators", rt.generators_match);
    r.verdict("roundtrip_cotilting", rt.cotilting_match);
    r.verdict("roundtrip_gamma", rt.gamma_match);
  }
  std::cout << "triple " << tri_str(c.verdict) << (c.reason.empty() ? "" : "  (" + c.reason + ")") << "\n";
  std::cout << "gamma dim " << gamma->dim() << "  gldim " << r.result("gamma")["gldim"].get<std::string>() << "\n";
  return r;
}

Report cmd_auslander_reconstruct(const std::string& path, int m, int n, bool quasi, bool roundtrip, const Common& o) {
  Report r;
  const int cap = o.cap_or(kDefaultCap);
  AlgebraPtr gamma = read_algebra(path, o);
  Characterization ch = characterize_auslander(gamma, m, n, cap);
  r.verdict("characterization", ch.verdict());
  r.result("e") = ch.e;
  r.result("f") = ch.f;
  std::vector<Module> ps, is;
  for (int v : ch.f) ps.push_back(projective_module(gamma, v));
  for (int v : ch.e) is.push_back(injective_module(gamma, v));
  if (ch.verdict() != Tri::True) {
    std::cout << "not an algebra of type (" << m << "," << n << "): characterization " << tri_str(ch.verdict()) << "\n";
    return r;
  }
  std::optional<AlphaInverse> maybe;
  try {
    maybe = alpha_inv(gamma, direct_sum_module(gamma, ps), direct_sum_module(gamma, is), m, n, quasi, cap);
  } catch (const PreconditionFailed& e) {
    r.verdict("extension_pair_superprojective", false);
    r.witness("extension_pair_superprojective") = e.what();
    std::cout << e.what() << "\n";
    return r;
  }
  const AlphaInverse& inv = *maybe;
  const AlgebraPtr& lam = inv.triple.lambda;
  r.result("lambda") = {{"dim", lam->dim()}, {"vertices", lam->nverts()}};
  Json cartan = Json::array();
  for (auto& row : cartan_matrix(lam)) cartan.push_back(row);
  r.result("lambda")["cartan"] = cartan;
  Json ms = Json::array();
  for (auto& x : inv.triple.m) ms.push_back(module_summary(x));
  r.result("M") = ms;
  r.result("T") = module_summary(inv.triple.t);
  r.verdict("triple", inv.check.verdict);
  if (!inv.check.reason.empty()) r.witness("triple") = inv.check.reason;
  if (roundtrip && inv.check.verdict == Tri::True) r.verdict("roundtrip", check_roundtrip(inv.triple, cap).ok());
  std::cout << "lambda dim " << lam->dim() << "  vertices " << lam->nverts() << "  #M " << inv.triple.m.size()
            << "  triple " << tri_str(inv.check.verdict) << "\n";
  return r;
}

Report cmd_repdim(const std::string& path, int n, const Common& o) {
  Report r;
  AlgebraPtr a = read_algebra(path, o);
  Labelled ind = all_indecs(a, o);
  SearchReport s = repdim_search(a, n, ind.mods, true, o.cap_or(kDefaultCap));
  std::vector<std::string> w;
  for (int i : s.witness) w.push_back(ind.labels[i]);
  r.result("n") = n;
  r.result("examined") = s.examined;
  r.result("feasible") = s.feasible;
  r.result("some_candidate_beyond_cap") = s.at_least_cap;
  if (s.value) r.result("repdim") = *s.value;
  r.witness("repdim") = w;
  r.verdict("determined", s.value ? Tri::True : Tri::Unknown);
  std::cout << "repdim_" << n << " " << (s.value ? std::to_string(*s.value) : "indeterminate") << "  examined "
            << s.examined << "\n";
  return r;
}

Report cmd_obound(const std::string& path, const Common& o) {
  Report r;
  AlgebraPtr a = read_algebra(path, o);
  Labelled ind = all_indecs(a, o);
  SearchReport s = o_bound(ind.mods, true, o.cap_or(kDefaultCap));
  std::vector<std::string> w;
  for (int i : s.witness) w.push_back(ind.labels[i]);
  if (s.value) r.result("o") = *s.value;
  r.witness("o") = w;
  r.verdict("determined", s.value ? Tri::True : Tri::Unknown);
  std::cout << "o " << (s.value ? std::to_string(*s.value) : "indeterminate") << "\n";
  return r;
}

Report cmd_mckay(const std::string& path, const Common& o) {
  Report r;
  Json j = read_json_file(path);
  CharacterTable t = parse_character_table(j);
  if (!j.contains("representation")) throw ParseError("missing field 'representation'");
  const Json& rep = j.at("representation");
  int d = rep.value("d", 2);
  Character v = parse_character(t, rep.at("values"));
  std::optional<Character> det;
  if (rep.contains("determinant")) det = parse_character(t, rep.at("determinant"));
  QuiverGraph q;
  try {
    q = mckay_quiver(t, v, d, det);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  r.result("vertices") = q.vertices;
  r.result("arrows") = q.arrows;
  r.result("dotted") = q.dotted;
  r.verdict("integral", true);
  write_dot(to_dot("McKay " + t.name, q.vertices, q.arrows, q.dotted), o);
  return r;
}

Report cmd_arquiver(const std::string& path, const std::string& modules, int n, const Common& o) {
  Report r;
  AlgebraPtr a = read_algebra(path, o);
  Labelled c = modules.empty() ? all_indecs(a, o) : labelled(basic_summands(load_modules(a, modules), o.seed));
  ARQuiver q = ar_quiver(c.mods, n, o.seed);
  r.result("vertices") = c.labels;
  r.result("arrows") = q.arrows;
  r.result("dotted") = q.dotted;
  r.verdict("radical_cross_check", q.cross_check);
  write_dot(to_dot("AR quiver", c.labels, q.arrows, q.dotted), o);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological invariants and higher Auslander correspondence checks"};
  app.require_subcommand(1);
  Common o;
  std::string algebra, method = "knit", mode = "enumerate", cotilting, modules, action;
  int n = 1, m = 0, bound = 3;
  bool quasi = false, roundtrip = false;

  auto* inv = app.add_subcommand("invariants", "dimension, Cartan matrix, gl.dim, dom.dim, (m,n) table");
  inv->add_option("algebra", algebra)->required();
  inv->add_option("--bound", bound, "largest m and n in the (m,n) table")->capture_default_str();
  add_common(inv, o);

  auto* ind = app.add_subcommand("indecs", "enumerate indecomposable modules");
  ind->add_option("algebra", algebra)->required();
  ind->add_option("--method", method)->check(CLI::IsMember({"knit", "brute"}))->capture_default_str();
  add_common(ind, o);

  auto* ort = app.add_subcommand("orthogonal", "maximal (n-1)-orthogonal subcategories of the perp of T");
  ort->add_option("algebra", algebra)->required();
  ort->add_option("--n", n)->required();
  ort->add_option("--mode", mode)->check(CLI::IsMember({"enumerate", "verify"}))->capture_default_str();
  ort->add_option("--cotilting", cotilting, "module file for T (default DΛ)");
  ort->add_option("--modules", modules, "module file for C in verify mode");
  add_common(ort, o);

  auto* aus = app.add_subcommand("auslander", "verify a triple or reconstruct it from its algebra");
  aus->add_option("action", action)->required()->check(CLI::IsMember({"verify", "reconstruct"}));
  aus->add_option("algebra", algebra, "Λ for verify, Γ for reconstruct")->required();
  aus->add_option("--modules", modules, "module file for M (default all indecomposables)");
  aus->add_option("--cotilting", cotilting, "module file for T (default DΛ)");
  aus->add_option("--m", m)->capture_default_str();
  aus->add_option("--n", n)->capture_default_str();
  aus->add_flag("--quasi", quasi, "drop the maximality requirement");
  aus->add_flag("--roundtrip", roundtrip, "also compare the triple after both directions");
  add_common(aus, o);

  auto* rep = app.add_subcommand("repdim", "rep.dim_n by exhaustive search");
  rep->add_option("algebra", algebra)->required();
  rep->add_option("--n", n)->capture_default_str();
  add_common(rep, o);

  auto* obd = app.add_subcommand("obound", "largest 1-orthogonal subcategory");
  obd->add_option("algebra", algebra)->required();
  add_common(obd, o);

  auto* mck = app.add_subcommand("mckay", "McKay quiver of a character table, as DOT");
  mck->add_option("table", algebra)->required();
  mck->add_option("--out", o.out, "DOT output path (default stdout)");
  add_common(mck, o);

  auto* arq = app.add_subcommand("arquiver", "AR quiver of a subcategory, as DOT");
  arq->add_option("algebra", algebra)->required();
  arq->add_option("--modules", modules, "module file for C (default all indecomposables)");
  arq->add_option("--n", n)->capture_default_str();
  arq->add_option("--out", o.out, "DOT output path (default stdout)");
  add_common(arq, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  int code = kExitPass;
  std::string error;
  try {
    if (inv->parsed()) r = cmd_invariants(algebra, bound, o);
    else if (ind->parsed()) r = cmd_indecs(algebra, method, o);
    else if (ort->parsed()) r = cmd_orthogonal(algebra, n, mode, cotilting, modules, o);
    else if (aus->parsed() && action == "verify")
      r = cmd_auslander_verify(algebra, modules, cotilting, m, n, quasi, roundtrip, o);
    else if (aus->parsed()) r = cmd_auslander_reconstruct(algebra, m, n, quasi, roundtrip, o);
    else if (rep->parsed()) r = cmd_repdim(algebra, n, o);
    else if (obd->parsed()) r = cmd_obound(algebra, o);
    else if (mck->parsed()) r = cmd_mckay(algebra, o);
    else r = cmd_arquiver(algebra, modules, n, o);
    code = r.exit_code();
  } catch (const ParseError& e) {
    error = e.what(), code = kExitInput;
  } catch (const PreconditionFailed& e) {
    error = e.what(), code = kExitInput;
  } catch (const NonIntegerMultiplicity& e) {
    error = e.what(), code = kExitRefuted;
  } catch (const IncompleteEnumeration& e) {
    error = e.what(), code = kExitIndeterminate;
  } catch (const Inconclusive& e) {
    error = e.what(), code = kExitIndeterminate;
  } catch (const ResolutionTruncated& e) {
    error = e.what(), code = kExitIndeterminate;
  } catch (const std::exception& e) {
    error = e.what(), code = kExitInput;
  }
  if (!error.empty()) std::cerr << "error: " << error << "\n";

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  for (auto* c : app.get_subcommands()) r.j["command"] = c->get_name();
  r.j["args"] = std::vector<std::string>(argv + 1, argv + argc);
  r.j["seed"] = o.seed;
  if (!r.j.contains("cap")) r.j["cap"] = o.cap ? Json(*o.cap) : Json(nullptr);
  if (!error.empty()) r.j["error"] = error;
  r.j["exit_code"] = code;
  r.j["elapsed_ms"] = ms.count();
  for (const char* k : {"verdicts", "witnesses", "results"})
    if (!r.j.contains(k)) r.j[k] = Json::object();
  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) {
      std::cerr << "error: cannot write " << o.report << "\n";
      return kExitInput;
    }
    f << r.j.dump(2) << "\n";
  }
  return code;
}
