#include "aus/correspond.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "aus/errors.hpp"

namespace aus {

namespace {

Module sum_or_zero(const AlgebraPtr& a, const std::vector<Module>& ms) {
  return ms.empty() ? zero_module(a) : direct_sum_module(a, ms);
}

std::vector<Module> projectives_at(const AlgebraPtr& a, const std::vector<int>& vs) {
  std::vector<Module> out;
  for (int v : vs) out.push_back(projective_module(a, v));
  return out;
}

std::vector<Module> injectives_at(const AlgebraPtr& a, const std::vector<int>& vs) {
  std::vector<Module> out;
  for (int v : vs) out.push_back(injective_module(a, v));
  return out;
}

std::vector<int> complement(int r, const std::vector<int>& vs) {
  std::vector<int> out;
  for (int v = 0; v < r; ++v)
    if (std::find(vs.begin(), vs.end(), v) == vs.end()) out.push_back(v);
  return out;
}

Tri at_most(const Bounded& b, int bound) {
  if (b.value > bound) return Tri::False;
  return b.exact ? Tri::True : Tri::Unknown;
}

// Vertices of the indecomposable summands, each located by `locate`.
std::vector<int> summand_vertices(const Module& x, const std::function<int(const Module&)>& locate) {
  std::vector<int> out;
  if (x.dim() == 0) return out;
  for (auto& s : indecomposable_summands(x)) {
    int v = locate(s);
    if (v < 0) return {-1};
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int single_vertex(const std::vector<int>& mult) {
  int v = -1, total = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    total += mult[i];
    if (mult[i] > 0) v = static_cast<int>(i);
  }
  return total == 1 ? v : -1;
}

ModuleMap inverse_map(const ModuleMap& f) {
  ModuleMap g = zero_map(f.tgt, f.src);
  for (std::size_t v = 0; v < f.blk.size(); ++v) g.blk[v] = *inverse(f.blk[v]);
  return g;
}

// Right multiplication by b ∈ e_t Λ e_s as a map P_t -> P_s.
ModuleMap right_mult(const AlgebraPtr& a, int b) {
  const int t = a->tgt(b), s = a->src(b);
  Module pt = projective_module(a, t), ps = projective_module(a, s);
  ModuleMap m = zero_map(pt, ps);
  for (int w = 0; w < a->nverts(); ++w) {
    const auto& from = a->block(w, t);
    const auto& to = a->block(w, s);
    for (std::size_t j = 0; j < from.size(); ++j)
      for (auto& term : a->mul(from[j], b)) {
        auto it = std::find(to.begin(), to.end(), term.idx);
        m.blk[w].at(it - to.begin(), j) = term.c;
      }
  }
  return m;
}

// Γ-map Hom(M, X) -> Hom(M, Y) induced by g : X -> Y.
ModuleMap induced(const EndModule& mx, const EndModule& my, const ModuleMap& g) {
  ModuleMap out = zero_map(mx.mod, my.mod);
  for (std::size_t i = 0; i < mx.basis.size(); ++i)
    for (std::size_t c = 0; c < mx.basis[i].size(); ++c) {
      auto co = end_coords(my, static_cast<int>(i), compose(g, mx.basis[i][c]));
      for (std::size_t r = 0; r < co.size(); ++r) out.blk[i].at(r, c) = co[r];
    }
  return out;
}

std::vector<Scalar> coords_in_end(const EndAlgebra& e, int k, int l, const ModuleMap& g) {
  const auto& bl = e.alg->block(k, l);
  auto target = flatten(g);
  const Field f = g.src.field();
  Matrix a(f, target.size(), bl.size()), rhs(f, target.size(), 1);
  for (std::size_t j = 0; j < bl.size(); ++j) {
    auto v = flatten(e.maps[bl[j]]);
    for (std::size_t i = 0; i < v.size(); ++i) a.at(i, j) = v[i];
  }
  for (std::size_t i = 0; i < target.size(); ++i) rhs.at(i, 0) = target[i];
  auto sol = solve(a, rhs);
  if (!sol) throw std::logic_error("map outside the endomorphism algebra block");
  std::vector<Scalar> out(e.alg->dim());
  for (std::size_t j = 0; j < bl.size(); ++j) out[bl[j]] = sol->at(j, 0);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

int projective_vertex(const Module& x) {
  if (x.dim() == 0 || !is_projective(x)) return -1;
  return single_vertex(top_multiplicities(x));
}

int injective_vertex(const Module& x) {
  if (x.dim() == 0 || !is_injective(x)) return -1;
  return single_vertex(socle_multiplicities(x));
}

TripleCheck verify_triple(const AuslanderTriple& t, int cap) {
  TripleCheck c;
  const auto& a = t.lambda;
  const int deg = std::max(t.mm, 1);
  c.cotilting = is_cotilting(t.t, t.mm, cap).valid();
  c.contains = in_add(t.m, regular_module(a)) && in_add(t.m, t.t);
  c.in_perp = std::all_of(t.m.begin(), t.m.end(), [&](const Module& x) { return in_perp_T(x, t.t, deg, cap); });
  c.orthogonal = ortho_check(t.m, t.n - 1, cap).verdict;
  if (t.quasi) {
    c.maximal = Tri::True;
  } else {
    IndecList ind = knit_indecomposables(a);
    std::vector<Module> perp;
    for (auto& x : ind.mods)
      if (in_perp_T(x, t.t, deg, cap)) perp.push_back(x);
    if (!ind.complete) {
      c.maximal = Tri::Unknown;
    } else {
      auto r = maximal_ortho_enumerative(t.m, t.n, perp, true, cap);
      c.maximal = r.maximal ? Tri::True : Tri::False;
    }
  }
  Tri flags = (c.cotilting && c.contains && c.in_perp) ? Tri::True : Tri::False;
  c.verdict = tri_and(flags, tri_and(c.orthogonal, c.maximal));
  if (!c.cotilting) c.reason = "T is not m-cotilting";
  else if (!c.contains) c.reason = "Λ ⊕ T is not in add M";
  else if (!c.in_perp) c.reason = "M is not in ⊥T";
  else if (c.orthogonal != Tri::True) c.reason = "M is not (n-1)-orthogonal";
  else if (c.maximal != Tri::True) c.reason = "add M is not maximal in ⊥T";
  return c;
}

GammaPresentation alpha(const AuslanderTriple& t) {
  GammaPresentation g;
  g.end = end_algebra(t.m);
  g.p = module_over_end(g.end, t.t).mod;
  g.i = module_over_end(g.end, injective_cogenerator(t.lambda)).mod;
  g.f = summand_vertices(g.p, projective_vertex);
  g.e = summand_vertices(g.i, injective_vertex);
  if ((!g.f.empty() && g.f[0] < 0) || (!g.e.empty() && g.e[0] < 0))
    throw PreconditionFailed("Hom(M, T) or Hom(M, DΛ) is not of the expected form; Λ ⊕ T must lie in add M");
  return g;
}

Tri check_extension_pair(const AlgebraPtr& gamma, const std::vector<int>& f, const std::vector<int>& e, int m,
                         int cap) {
  auto ps = projectives_at(gamma, f), is = injectives_at(gamma, e);
  Module p = sum_or_zero(gamma, ps);
  Module i = sum_or_zero(gamma, is);
  Module di = sum_or_zero(gamma->opposite(), projectives_at(gamma->opposite(), e));
  Tri bounds = tri_and(at_most(id(p, cap), m), at_most(id(di, cap), m));
  if (bounds == Tri::False) return Tri::False;
  // 0 -> P -> I_0 -> ... -> I_m -> 0
  bool co = p.dim() == 0;
  Module cur = p;
  for (int k = 0; k <= m && !co; ++k) {
    if (is.empty()) break;
    Approx ap = left_approximation(cur, is);
    if (!ap.map.is_injective()) break;
    cur = cokernel(ap.map).mod;
    co = cur.dim() == 0;
  }
  // 0 -> P_m -> ... -> P_0 -> I -> 0
  bool res = i.dim() == 0;
  cur = i;
  for (int k = 0; k <= m && !res; ++k) {
    if (ps.empty()) break;
    Approx ap = right_approximation(ps, cur);
    if (!ap.map.is_surjective()) break;
    cur = kernel(ap.map).mod;
    res = cur.dim() == 0;
  }
  return tri_and(bounds, co && res ? Tri::True : Tri::False);
}

SuperprojectiveCheck check_superprojective(const AlgebraPtr& gamma, const std::vector<int>& e, int n, int cap) {
  SuperprojectiveCheck c;
  c.grade_side = Tri::True;
  for (int v : complement(gamma->nverts(), e)) {
    Bounded g = grade(simple_module(gamma, v), cap);
    if (g.exact && g.value < n + 1) c.grade_side = Tri::False;
    else if (!g.exact && g.value < n + 1 && c.grade_side == Tri::True) c.grade_side = Tri::Unknown;
  }
  auto is = injectives_at(gamma, e);
  c.coresolution_side = Tri::False;
  if (!is.empty()) {
    Module cur = regular_module(gamma);
    c.coresolution_side = Tri::True;
    for (int k = 0; k <= n && cur.dim() > 0; ++k) {
      Approx ap = left_approximation(cur, is);
      if (!ap.map.is_injective()) {
        c.coresolution_side = Tri::False;
        break;
      }
      cur = cokernel(ap.map).mod;
    }
  }
  return c;
}

Module ext_module(const Module& s, int k) {
  if (k < 1) throw std::invalid_argument("ext_module: degree must be positive");
  Module cur = s;
  for (int i = 1; i < k; ++i) cur = omega(cur);
  return transpose(cur);
}

bool is_simple_module(const Module& x) {
  return x.dim() > 0 && radical_of_module(x).mod.dim() == 0 && is_local_end(x);
}

SimplesCondition simples_condition(const AlgebraPtr& gamma, int n, int cap) {
  Bounded g = gldim(gamma, cap);
  if (!g.exact || g.value != n + 1) throw PreconditionFailed("the simples condition needs gl.dim Γ = n+1");
  SimplesCondition c;
  c.lhs = two_sided_mn(gamma, n + 1, n + 1, cap);
  bool ok = true;
  for (const auto& side : {gamma, gamma->opposite()}) {
    Module reg = regular_module(side);
    for (int v = 0; v < side->nverts() && ok; ++v) {
      Module s = simple_module(side, v);
      if (pd(s, cap).value != n + 1) continue;
      auto dims = ext_table(s, reg, n + 1).dims;
      for (int i = 0; i <= n; ++i)
        if (dims[i] != 0) ok = false;
      if (ok && !is_simple_module(ext_module(s, n + 1))) ok = false;
    }
  }
  c.rhs = ok ? Tri::True : Tri::False;
  return c;
}

Characterization characterize_auslander(const AlgebraPtr& gamma, int m, int n, int cap) {
  Characterization c;
  const auto op = gamma->opposite();
  const int r = gamma->nverts();
  c.gldim_ok = at_most(gldim(gamma, cap), std::max(n + 1, m));
  c.idempotents_ok = Tri::True;
  for (int v = 0; v < r; ++v) {
    Bounded ie = id(projective_module(op, v), cap), jf = id(projective_module(gamma, v), cap);
    if (!ie.exact || !jf.exact) c.idempotents_ok = Tri::Unknown;
    if (ie.exact && ie.value <= m) c.e.push_back(v);
    if (jf.exact && jf.value <= m) c.f.push_back(v);
  }
  auto under = complement(r, c.e), over = complement(r, c.f);
  c.pd_grade_ok = Tri::True;
  auto pd_grade = [&](const AlgebraPtr& side, const std::vector<int>& vs) {
    for (int v : vs) {
      Module s = simple_module(side, v);
      Bounded p = pd(s, cap), g = grade(s, cap);
      if (p.exact && g.exact && p.value == n + 1 && g.value == n + 1) continue;
      if (p.exact && g.exact) c.pd_grade_ok = Tri::False;
      else if (c.pd_grade_ok == Tri::True) c.pd_grade_ok = Tri::Unknown;
    }
  };
  pd_grade(gamma, under);
  pd_grade(op, over);
  c.duality_ok = Tri::False;
  if (c.pd_grade_ok == Tri::True && under.size() == over.size()) {
    std::vector<int> hit;
    bool ok = true;
    for (int v : under) {
      Module s = simple_module(gamma, v);
      Module e = ext_module(s, n + 1);
      int w = is_simple_module(e) ? single_vertex(top_multiplicities(e)) : -1;
      if (w < 0 || std::find(over.begin(), over.end(), w) == over.end() ||
          std::find(hit.begin(), hit.end(), w) != hit.end() || !isomorphic(ext_module(e, n + 1), s)) {
        ok = false;
        break;
      }
      hit.push_back(w);
    }
    c.duality_ok = ok ? Tri::True : Tri::False;
  } else if (c.pd_grade_ok == Tri::Unknown) {
    c.duality_ok = Tri::Unknown;
  }
  return c;
}

AlphaInverse alpha_inv(const AlgebraPtr& gamma, const Module& p, const Module& i, int m, int n, bool quasi, int cap) {
  auto f = summand_vertices(p, projective_vertex);
  auto e = summand_vertices(i, injective_vertex);
  if (!f.empty() && f[0] < 0) throw PreconditionFailed("P is not a projective Γ-module");
  if (!e.empty() && e[0] < 0) throw PreconditionFailed("I is not an injective Γ-module");
  Tri ep = check_extension_pair(gamma, f, e, m, cap);
  if (ep != Tri::True) throw PreconditionFailed(std::string("(P, I) is not an m-extension pair: ") + tri_str(ep));
  Tri sp = check_superprojective(gamma, e, n, cap).verdict();
  if (sp != Tri::True) throw PreconditionFailed(std::string("ν⁻I is not n-superprojective: ") + tri_str(sp));
  AlphaInverse out;
  out.q_end = end_algebra(projectives_at(gamma, e));
  auto& t = out.triple;
  t.lambda = out.q_end.alg;
  for (int j = 0; j < gamma->nverts(); ++j)
    t.m.push_back(module_over_end(out.q_end, projective_module(gamma, j)).mod);
  t.t = module_over_end(out.q_end, p).mod;
  t.mm = m;
  t.n = n;
  t.quasi = quasi;
  out.check = verify_triple(t, cap);
  return out;
}

// ---------------------------------------------------------------------------

YonedaIso yoneda_iso(const AuslanderTriple& t, const GammaPresentation& g, const EndAlgebra& q_end) {
  const auto& a = t.lambda;
  const auto& gamma = g.end.alg;
  const int r = a->nverts();
  YonedaIso y;
  y.from = a;
  y.to = q_end.alg;
  y.vertex.assign(r, -1);
  // Q's summands are the Γ-projectives at g.e, in that order.
  std::vector<int> jv(r);
  std::vector<EndModule> hp(r);
  std::vector<ModuleMap> psi(r);
  for (int v = 0; v < r; ++v) {
    Module pv = projective_module(a, v);
    jv[v] = find_iso(t.m, pv);
    auto it = std::find(g.e.begin(), g.e.end(), jv[v]);
    if (jv[v] < 0 || it == g.e.end()) throw std::logic_error("Hom(M, Λ) does not match ν⁻I");
    y.vertex[v] = static_cast<int>(it - g.e.begin());
    hp[v] = module_over_end(g.end, pv);
    auto iso_map = iso(hp[v].mod, projective_module(gamma, jv[v]));
    if (!iso_map) throw std::logic_error("Hom(M, P_v) is not the expected projective");
    psi[v] = *iso_map;
  }
  y.phi = Matrix(a->field(), y.to->dim(), a->dim());
  for (int b = 0; b < a->dim(); ++b) {
    const int ts = a->tgt(b), ss = a->src(b);
    ModuleMap h = induced(hp[ts], hp[ss], right_mult(a, b));
    ModuleMap conj = compose(psi[ss], compose(h, inverse_map(psi[ts])));
    auto co = coords_in_end(q_end, y.vertex[ts], y.vertex[ss], conj);
    for (std::size_t i = 0; i < co.size(); ++i) y.phi.at(i, b) = co[i];
  }
  return y;
}

Module transport(const YonedaIso& y, const Module& x) {
  const auto& a = y.from;
  const auto& b = y.to;
  auto inv = inverse(y.phi);
  if (!inv) throw std::logic_error("transport: not an isomorphism");
  std::vector<int> vd(b->nverts());
  for (int v = 0; v < a->nverts(); ++v) vd[y.vertex[v]] = x.vdim[v];
  std::vector<Matrix> act;
  for (int c = 0; c < b->dim(); ++c) {
    Matrix m(b->field(), vd[b->tgt(c)], vd[b->src(c)]);
    for (int d = 0; d < a->dim(); ++d)
      if (sgn(inv->at(d, c)) != 0) m.add_scaled(x.act[d], inv->at(d, c));
    act.push_back(std::move(m));
  }
  return make_module(b, vd, act);
}

Roundtrip check_roundtrip(const AuslanderTriple& t, int cap) {
  Roundtrip rt;
  GammaPresentation g = alpha(t);
  AlphaInverse ai = alpha_inv(g.end.alg, g.p, g.i, t.mm, t.n, t.quasi, cap);
  YonedaIso y = yoneda_iso(t, g, ai.q_end);
  const auto& a = t.lambda;
  const auto& b = ai.q_end.alg;
  // φ is bijective and multiplicative.
  rt.algebra_iso = a->dim() == b->dim() && inverse(y.phi).has_value();
  for (int c = 0; c < a->dim() && rt.algebra_iso; ++c)
    for (int d = 0; d < a->dim() && rt.algebra_iso; ++d) {
      std::vector<Scalar> lhs(b->dim());
      for (auto& term : a->mul(c, d))
        for (int i = 0; i < b->dim(); ++i) lhs[i] += term.c * y.phi.at(i, term.idx);
      SparseVec pc = dense_to_sparse(y.phi.col(c).vec()), pd_ = dense_to_sparse(y.phi.col(d).vec());
      auto rhs = sparse_to_dense(b->mul(pc, pd_), b->dim());
      for (int i = 0; i < b->dim(); ++i)
        if (b->field().reduce(lhs[i]) != b->field().reduce(rhs[i])) rt.algebra_iso = false;
    }
  if (!rt.algebra_iso) return rt;
  rt.generators_match = true;
  for (std::size_t j = 0; j < t.m.size(); ++j)
    if (!isomorphic(transport(y, t.m[j]), ai.triple.m[j])) rt.generators_match = false;
  rt.cotilting_match = isomorphic(transport(y, t.t), ai.triple.t);
  GammaPresentation g2 = alpha(ai.triple);
  rt.gamma_match = cartan_matrix(g2.end.alg) == cartan_matrix(g.end.alg) && g2.p.vdim == g.p.vdim &&
                   g2.i.vdim == g.i.vdim && g2.e == g.e && g2.f == g.f;
  return rt;
}

// ---------------------------------------------------------------------------

SearchReport repdim_search(const AlgebraPtr& lambda, int n, const std::vector<Module>& ind, bool complete, int cap) {
  if (!complete) throw IncompleteEnumeration("repdim search needs a complete list of indecomposables");
  (void)lambda;
  std::vector<int> forced, free;
  for (int i = 0; i < static_cast<int>(ind.size()); ++i)
    (is_projective(ind[i]) || is_injective(ind[i]) ? forced : free).push_back(i);
  if (free.size() > 20) throw std::invalid_argument("repdim search: too many optional indecomposables");
  SearchReport rep;
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    std::vector<int> idx = forced;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (mask & (1u << k)) idx.push_back(free[k]);
    std::sort(idx.begin(), idx.end());
    std::vector<Module> c;
    for (int i : idx) c.push_back(ind[i]);
    ++rep.examined;
    if (ortho_check(c, n - 1, cap).verdict != Tri::True) continue;
    ++rep.feasible;
    Bounded g = gldim(end_algebra(c).alg, cap);
    if (!g.exact) {
      rep.at_least_cap = true;
      continue;
    }
    if (!rep.value || g.value < *rep.value) {
      rep.value = g.value;
      rep.witness = idx;
    }
  }
  return rep;
}

SearchReport o_bound(const std::vector<Module>& ind, bool complete, int cap) {
  if (!complete) throw IncompleteEnumeration("o(B) needs a complete list of indecomposables");
  const int k = static_cast<int>(ind.size());
  std::vector<std::vector<int>> e1(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) e1[i][j] = ext_dim(ind[i], ind[j], 1, cap);
  std::vector<int> verts;
  for (int i = 0; i < k; ++i)
    if (e1[i][i] == 0) verts.push_back(i);
  auto adj = [&](int i, int j) { return e1[i][j] == 0 && e1[j][i] == 0; };
  SearchReport rep;
  std::vector<int> cur, best;
  std::function<void(std::vector<int>)> grow = [&](std::vector<int> cand) {
    ++rep.examined;
    if (cur.size() > best.size()) best = cur;
    while (!cand.empty()) {
      if (cur.size() + cand.size() <= best.size()) return;
      int v = cand.front();
      cand.erase(cand.begin());
      std::vector<int> next;
      for (int u : cand)
        if (adj(u, v)) next.push_back(u);
      cur.push_back(v);
      grow(next);
      cur.pop_back();
    }
  };
  grow(verts);
  rep.value = static_cast<int>(best.size());
  rep.witness = best;
  rep.feasible = static_cast<int>(verts.size());
  return rep;
}

}  // namespace aus
