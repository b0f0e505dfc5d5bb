#include "aus/orthocat.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "aus/errors.hpp"

namespace aus {

namespace {

std::size_t flat_size(const Module& x, const Module& y) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < x.vdim.size(); ++v) n += static_cast<std::size_t>(x.vdim[v]) * y.vdim[v];
  return n;
}

Matrix flat_columns(Field f, const std::vector<ModuleMap>& ms, std::size_t len) {
  Matrix m(f, len, ms.size());
  for (std::size_t j = 0; j < ms.size(); ++j) {
    auto v = flatten(ms[j]);
    for (std::size_t i = 0; i < len; ++i) m.at(i, j) = v[i];
  }
  return m;
}

int span_rank(const std::vector<ModuleMap>& ms, std::size_t len) {
  if (ms.empty() || len == 0) return 0;
  return static_cast<int>(rank(flat_columns(ms[0].src.field(), ms, len)));
}

// rank of Hom(W, A) -> Hom(W, B) induced by f : A -> B.
int push_rank(const Module& w, const ModuleMap& f) {
  std::vector<ModuleMap> img;
  for (auto& h : hom_basis(w, f.src)) img.push_back(compose(f, h));
  return span_rank(img, flat_size(w, f.tgt));
}

// rank of Hom(B, W) -> Hom(A, W) induced by f : A -> B.
int pull_rank(const Module& w, const ModuleMap& f) {
  std::vector<ModuleMap> img;
  for (auto& h : hom_basis(f.tgt, w)) img.push_back(compose(h, f));
  return span_rank(img, flat_size(f.src, w));
}

// dim J(W, X) for indecomposable W, X with local split endomorphism rings.
int radical_hom_dim(const Module& w, const Module& x) {
  int h = hom_dim(w, x);
  return isomorphic(w, x) ? h - 1 : h;
}

Tri gldim_at_most(const AlgebraPtr& a, int bound, int cap) {
  Bounded g = gldim(a, cap);
  if (g.value > bound) return Tri::False;
  return g.exact ? Tri::True : Tri::Unknown;
}

ModuleMap lift_through(const ModuleMap& epi, const ModuleMap& target) {
  // Finds u : target.src -> epi.src with epi ∘ u = target (target.src projective).
  auto basis = hom_basis(target.src, epi.src);
  std::vector<ModuleMap> img;
  for (auto& b : basis) img.push_back(compose(epi, b));
  std::size_t len = flat_size(target.src, epi.tgt);
  const Field f = epi.src.field();
  Matrix a = img.empty() ? Matrix(f, len, 0) : flat_columns(f, img, len);
  Matrix rhs(f, len, 1);
  auto v = flatten(target);
  for (std::size_t i = 0; i < len; ++i) rhs.at(i, 0) = v[i];
  auto sol = solve(a, rhs);
  if (!sol) throw std::logic_error("lift through a projective cover failed");
  std::vector<Scalar> cs(basis.size());
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = sol->at(i, 0);
  return linear_combination(basis, cs, target.src, epi.src);
}

}  // namespace

// ---------------------------------------------------------------------------

OrthoResult ortho_between(const std::vector<Module>& xs, const std::vector<Module>& ys, int l, int cap) {
  OrthoResult r;
  if (l <= 0) return r;
  if (l > cap) {
    r.verdict = Tri::Unknown;
    return r;
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      ExtTable t = ext_table(xs[i], ys[j], l);
      for (int d = 1; d <= l; ++d)
        if (t.dims[d] != 0) {
          r.verdict = Tri::False;
          r.witness = ExtWitness{static_cast<int>(i), static_cast<int>(j), d};
          return r;
        }
    }
  return r;
}

OrthoResult ortho_check(const std::vector<Module>& c, int l, int cap) { return ortho_between(c, c, l, cap); }

bool in_perp_T(const Module& x, const Module& t, int m_bound, int cap) {
  return ortho_between({x}, {t}, m_bound, cap).verdict == Tri::True;
}

CotiltingCert is_cotilting(const Module& t, int m, int cap) {
  CotiltingCert cert;
  const auto& a = t.alg;
  Bounded it = id(t, cap);
  cert.id_bound = it.exact && it.value <= m;
  int deg = cert.id_bound ? std::max(m, 1) : cap;
  cert.self_ortho = ortho_check({t}, std::min(deg, cap), cap).verdict == Tri::True;
  auto ts = indecomposable_summands(t);
  Module cur = injective_cogenerator(a);
  cert.coresolution = false;
  for (int i = 0; i <= m; ++i) {
    if (in_add(ts, cur)) {
      cert.chain.push_back(cur);
      cert.coresolution = true;
      break;
    }
    if (i == m) break;
    Approx ap = right_approximation(ts, cur);
    if (!ap.map.is_surjective()) break;
    cert.chain.push_back(ap.obj);
    cur = kernel(ap.map).mod;
    if (cur.dim() == 0) {
      cert.coresolution = true;
      break;
    }
  }
  return cert;
}

MaximalityResult maximal_ortho_enumerative(const std::vector<Module>& c, int n, const std::vector<Module>& ind_b,
                                           bool complete, int cap) {
  if (!complete) throw IncompleteEnumeration("the list of indecomposables of B is not complete");
  MaximalityResult r;
  const int l = n - 1;
  OrthoResult self = ortho_check(c, l, cap);
  if (self.verdict != Tri::True) {
    r.reason = "C is not (n-1)-orthogonal";
    return r;
  }
  for (std::size_t z = 0; z < ind_b.size(); ++z) {
    if (find_iso(c, ind_b[z]) >= 0) continue;
    if (ortho_between(c, {ind_b[z]}, l, cap).verdict == Tri::True ||
        ortho_between({ind_b[z]}, c, l, cap).verdict == Tri::True) {
      r.reason = "an indecomposable outside C lies in one of its orthogonal categories";
      r.witness = static_cast<int>(z);
      return r;
    }
  }
  r.maximal = true;
  return r;
}

Tri check_auslander_algebra(const AlgebraPtr& gamma, int m, int n, int cap) {
  return tri_and(two_sided_mn(gamma, m + 1, n + 1, cap), gldim_at_most(gamma, n + 1, cap));
}

HomologicalVerdict maximal_ortho_homological(const AlgebraPtr& lambda, const std::vector<Module>& c,
                                             const Module& t, int m, int n, int cap) {
  HomologicalVerdict v;
  if (c.empty() || !in_add(c, regular_module(lambda)) || !in_add(c, t)) {
    v.reason = "Λ ⊕ T is not in add C";
    return v;
  }
  Tri ortho = ortho_check(c, n - 1, cap).verdict;
  if (ortho != Tri::True) {
    v.verdict = ortho == Tri::Unknown ? Tri::Unknown : Tri::False;
    v.reason = "C is not (n-1)-orthogonal";
    return v;
  }
  EndAlgebra e = end_algebra(c);
  if (m <= n) {
    v.verdict = check_auslander_algebra(e.alg, m, n, cap);
  } else {
    v.necessary_only = true;
    v.verdict = tri_and(two_sided_mn(e.alg, m + 1, n + 1, cap), gldim_at_most(e.alg, std::max(m, n + 1), cap));
  }
  if (v.verdict != Tri::True) v.reason = "Γ fails the two-sided condition or the global dimension bound";
  return v;
}

// ---------------------------------------------------------------------------
// Sequences

bool is_radical_map(const ModuleMap& f, std::uint64_t seed) {
  if (f.is_zero()) return true;
  auto dx = decompose(f.src, seed), dy = decompose(f.tgt, seed);
  for (auto& px : dx.pieces)
    for (auto& py : dy.pieces) {
      ModuleMap h = compose(py.proj, compose(f, px.incl));
      if (h.is_zero() || px.mod.vdim != py.mod.vdim) continue;
      for (auto& g : hom_basis(py.mod, px.mod))
        if (!is_nilpotent(compose(g, h).full())) return false;
    }
  return true;
}

bool sequence_exact(const std::vector<ModuleMap>& maps) {
  if (maps.empty()) return true;
  if (!maps.front().is_injective() || !maps.back().is_surjective()) return false;
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (!compose(maps[i], maps[i - 1]).is_zero()) return false;
    if (maps[i - 1].rank() + maps[i].rank() != maps[i].src.dim()) return false;
  }
  return true;
}

bool hom_sequences_exact(const AlmostSplitSeq& s, const std::vector<Module>& c) {
  const int k = static_cast<int>(s.maps.size());  // n + 1 maps
  const Module& y = s.terms.front();
  const Module& x = s.terms.back();
  for (auto& w : c) {
    // 0 -> (W,Y) -> (W,C_{n-1}) -> ... -> (W,C_0) -> J(W,X) -> 0
    std::vector<int> r(k);
    for (int i = 0; i < k; ++i) r[i] = push_rank(w, s.maps[i]);
    if (r[0] != hom_dim(w, y)) return false;
    for (int i = 1; i < k; ++i)
      if (r[i - 1] + r[i] != hom_dim(w, s.terms[i])) return false;
    if (r[k - 1] != radical_hom_dim(w, x)) return false;
    // 0 -> (X,W) -> (C_0,W) -> ... -> (C_{n-1},W) -> J(Y,W) -> 0
    std::vector<int> q(k);
    for (int i = 0; i < k; ++i) q[i] = pull_rank(w, s.maps[i]);
    if (q[k - 1] != hom_dim(x, w)) return false;
    for (int i = 1; i < k; ++i)
      if (q[i - 1] + q[i] != hom_dim(s.terms[i], w)) return false;
    if (q[0] != radical_hom_dim(y, w)) return false;
  }
  return true;
}

AlmostSplitSeq almost_split_sequence(const Module& z, std::uint64_t seed) {
  if (is_projective(z)) throw PreconditionFailed("almost split sequence ending at a projective module");
  if (!is_indecomposable(z, seed)) throw PreconditionFailed("almost split sequence ending at a decomposable module");
  const Field f = z.field();
  Cover cov = projective_cover(z);
  const Module& p = cov.p.ds.sum;
  Sub om = kernel(cov.epi);
  Module tz = tau(z);
  auto h = hom_basis(om.mod, tz);
  std::size_t len = flat_size(om.mod, tz);
  // Classes that vanish in Ext: maps extending along ΩZ -> P.
  std::vector<ModuleMap> zero_cls;
  for (auto& g : hom_basis(p, tz)) zero_cls.push_back(compose(g, om.map));
  // Right action of rad End(Z) lifted to ΩZ.
  std::vector<ModuleMap> rad_omega;
  for (auto& phi : hom_basis(z, z)) {
    auto roots = poly_roots(f, min_poly(phi.full()));
    ModuleMap r = add(phi, scale(identity_map(z), f.reduce(-roots.at(0))));
    ModuleMap rp = lift_through(cov.epi, compose(r, cov.epi));
    ModuleMap ro = zero_map(om.mod, om.mod);
    for (std::size_t v = 0; v < ro.blk.size(); ++v) {
      auto sol = solve(om.map.blk[v], rp.blk[v] * om.map.blk[v]);
      ro.blk[v] = *sol;
    }
    rad_omega.push_back(ro);
  }
  // Unknowns: coefficients on h, plus one coefficient vector on zero_cls per radical element.
  const std::size_t nh = h.size(), nz = zero_cls.size(), nr = rad_omega.size();
  Matrix sys(f, len * nr, nh + nz * nr);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t j = 0; j < nh; ++j) {
      auto v = flatten(compose(h[j], rad_omega[r]));
      for (std::size_t i = 0; i < len; ++i) sys.at(r * len + i, j) = v[i];
    }
    for (std::size_t j = 0; j < nz; ++j) {
      auto v = flatten(zero_cls[j]);
      for (std::size_t i = 0; i < len; ++i) sys.set(r * len + i, nh + r * nz + j, -v[i]);
    }
  }
  std::vector<std::vector<Scalar>> annihilator;
  if (nr == 0) {
    for (std::size_t j = 0; j < nh; ++j) {
      std::vector<Scalar> e(nh);
      e[j] = 1;
      annihilator.push_back(e);
    }
  } else {
    Matrix ker = kernel_basis(sys);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      std::vector<Scalar> e(nh);
      for (std::size_t j = 0; j < nh; ++j) e[j] = ker.at(j, c);
      annihilator.push_back(e);
    }
  }
  int base_rank = span_rank(zero_cls, len);
  std::optional<ModuleMap> phi;
  for (auto& cs : annihilator) {
    ModuleMap cand = linear_combination(h, cs, om.mod, tz);
    auto with = zero_cls;
    with.push_back(cand);
    if (span_rank(with, len) > base_rank) {
      phi = cand;
      break;
    }
  }
  if (!phi) throw NoSocleElement("Ext^1(Z, τZ) has no socle element outside the split classes");
  // Pushout of P <- ΩZ -> τZ.
  DirectSum s = direct_sum(z.alg, {p, tz});
  ModuleMap g = add(compose(s.incl[0], om.map), scale(compose(s.incl[1], *phi), Scalar(-1)));
  Sub e = cokernel(g);
  ModuleMap to_e = compose(e.map, s.incl[1]);
  ModuleMap down = compose(cov.epi, s.proj[0]);
  ModuleMap from_e = zero_map(e.mod, z);
  for (std::size_t v = 0; v < from_e.blk.size(); ++v) {
    auto sec = solve(e.map.blk[v], Matrix::identity(f, e.mod.vdim[v]));
    from_e.blk[v] = down.blk[v] * *sec;
  }
  AlmostSplitSeq out;
  out.n = 1;
  out.terms = {tz, e.mod, z};
  out.maps = {to_e, from_e};
  out.exact = sequence_exact(out.maps);
  for (auto& m : out.maps) out.radical_flags.push_back(is_radical_map(m, seed));
  out.tau_ok = true;
  return out;
}

AlmostSplitSeq n_almost_split(const std::vector<Module>& c, const Module& x, int n, std::uint64_t seed) {
  int xi = find_iso(c, x, seed);
  if (xi < 0) throw PreconditionFailed("X is not in C");
  EndAlgebra e = end_algebra(c);
  const auto& g = e.alg;
  Resolution r = min_proj_resolution(simple_module(g, xi), n + 2);
  if (r.truncated_at || r.length() != n + 1)
    throw PreconditionFailed("the simple Γ-module at X has projective dimension " +
                             (r.truncated_at ? std::string("beyond the cap") : std::to_string(r.length())) +
                             ", not n+1");
  const auto& lam = c[0].alg;
  std::vector<DirectSum> ts;
  for (auto& vs : r.verts) {
    std::vector<Module> parts;
    for (int v : vs) parts.push_back(c[v]);
    ts.push_back(direct_sum(lam, parts));
  }
  // d_i : T_i -> T_{i-1}
  std::vector<ModuleMap> d(r.terms.size());
  for (std::size_t i = 1; i < r.terms.size(); ++i) {
    ProjSum from = projective_sum(g, r.verts[i]), to = projective_sum(g, r.verts[i - 1]);
    Components comp = components(r.maps[i], from, to);
    ModuleMap m = zero_map(ts[i].sum, ts[i - 1].sum);
    for (std::size_t k = 0; k < r.verts[i].size(); ++k)
      for (std::size_t l = 0; l < r.verts[i - 1].size(); ++l) {
        if (comp[k][l].empty()) continue;
        ModuleMap a = map_of(e, comp[k][l], r.verts[i][k], r.verts[i - 1][l]);
        m = add(m, compose(ts[i - 1].incl[l], compose(a, ts[i].proj[k])));
      }
    d[i] = m;
  }
  AlmostSplitSeq out;
  out.n = n;
  for (int i = n + 1; i >= 0; --i) out.terms.push_back(ts[i].sum);
  for (int i = n + 1; i >= 1; --i) out.maps.push_back(d[i]);
  out.exact = sequence_exact(out.maps);
  for (auto& m : out.maps) out.radical_flags.push_back(is_radical_map(m, seed));
  out.tau_ok = isomorphic(out.terms.front(), tau_n(c[xi], n, seed), seed);
  out.hom_exact = hom_sequences_exact(out, c);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

IndecList knit_indecomposables(const AlgebraPtr& a, int cap_count, int cap_dim, std::uint64_t seed) {
  IndecList out;
  std::deque<int> queue;
  bool capped = false;
  auto add = [&](const Module& m) {
    if (m.dim() == 0) return;
    for (auto& s : indecomposable_summands(m, seed)) {
      if (s.dim() > cap_dim) {
        capped = true;
        continue;
      }
      if (find_iso(out.mods, s, seed) >= 0) continue;
      if (static_cast<int>(out.mods.size()) >= cap_count) {
        capped = true;
        continue;
      }
      out.mods.push_back(s);
      queue.push_back(static_cast<int>(out.mods.size()) - 1);
    }
  };
  for (int v = 0; v < a->nverts(); ++v) {
    add(projective_module(a, v));
    add(injective_module(a, v));
    add(radical_of_module(projective_module(a, v)).mod);
    Module i = injective_module(a, v);
    add(cokernel(socle(i).map).mod);
  }
  while (!queue.empty()) {
    Module x = out.mods[queue.front()];
    queue.pop_front();
    if (!is_projective(x)) {
      add(tau(x));
      add(almost_split_sequence(x, seed).terms[1]);
    }
    if (!is_injective(x)) add(tau_inv(x));
  }
  out.complete = !capped;
  return out;
}

namespace {

struct Monomial {
  SparseVec elem;
  std::vector<int> word;  // generator indices, applied first to last
  int src, tgt;
};

}  // namespace

IndecList brute_indecomposables(const AlgebraPtr& a, int dim_cap, std::uint64_t seed) {
  const Field f = a->field();
  if (!f.is_prime() || f.p > 5) throw std::invalid_argument("brute enumeration needs a prime field with p <= 5");
  const auto& gens = a->arrows();
  const int r = a->nverts(), n = a->dim();
  // Monomials spanning A.
  std::vector<Monomial> monos;
  std::map<std::pair<int, int>, Matrix> span;  // per block, rref-independent monomials as columns
  auto block_vec = [&](const SparseVec& x, int t, int s) {
    const auto& bl = a->block(t, s);
    Matrix col(f, bl.size(), 1);
    for (auto& term : x)
      for (std::size_t i = 0; i < bl.size(); ++i)
        if (bl[i] == term.idx) col.at(i, 0) = term.c;
    return col;
  };
  auto try_add = [&](Monomial m) {
    auto key = std::make_pair(m.tgt, m.src);
    Matrix col = block_vec(m.elem, m.tgt, m.src);
    if (col.is_zero()) return false;
    auto it = span.find(key);
    Matrix cur = it == span.end() ? Matrix(f, col.rows(), 0) : it->second;
    Matrix ext = hstack({cur, col}, f, col.rows());
    if (rank(ext) == cur.cols()) return false;
    span[key] = ext;
    monos.push_back(std::move(m));
    return true;
  };
  for (int v = 0; v < r; ++v) try_add({SparseVec{{a->idem(v), Scalar(1)}}, {}, v, v});
  for (std::size_t g = 0; g < gens.size(); ++g)
    try_add({gens[g].v, {static_cast<int>(g)}, gens[g].src, gens[g].tgt});
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (monos[i].word.empty()) continue;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].src != monos[i].tgt) continue;
      Monomial m{a->mul(gens[g].v, monos[i].elem), monos[i].word, monos[i].src, gens[g].tgt};
      m.word.push_back(static_cast<int>(g));
      try_add(std::move(m));
    }
  }
  // Each basis element as a combination of monomials in its block.
  std::vector<std::vector<std::pair<int, Scalar>>> expr(n);
  for (int b = 0; b < n; ++b) {
    int t = a->tgt(b), s = a->src(b);
    std::vector<int> idx;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (monos[i].tgt == t && monos[i].src == s) idx.push_back(static_cast<int>(i));
    Matrix m(f, a->block(t, s).size(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) m.set_block(0, j, block_vec(monos[idx[j]].elem, t, s));
    auto sol = solve(m, block_vec(SparseVec{{b, Scalar(1)}}, t, s));
    if (!sol) throw std::logic_error("arrows do not generate the algebra");
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (sgn(sol->at(j, 0)) != 0) expr[b].push_back({idx[j], sol->at(j, 0)});
  }

  IndecList out;
  out.complete = true;
  std::vector<int> dv(r, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == r) {
      int total = 0;
      for (int x : dv) total += x;
      if (total == 0) return;
      std::size_t entries = 0;
      for (auto& g : gens) entries += static_cast<std::size_t>(dv[g.tgt]) * dv[g.src];
      std::vector<long> val(entries, 0);
      for (;;) {
        std::vector<Matrix> gm;
        std::size_t pos = 0;
        for (auto& g : gens) {
          Matrix m(f, dv[g.tgt], dv[g.src]);
          for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = val[pos++];
          gm.push_back(std::move(m));
        }
        std::vector<Matrix> mono_act;
        for (auto& m : monos) {
          Matrix x = Matrix::identity(f, dv[m.src]);
          for (int g : m.word) x = gm[g] * x;
          mono_act.push_back(std::move(x));
        }
        std::vector<Matrix> act;
        for (int b = 0; b < n; ++b) {
          Matrix x(f, dv[a->tgt(b)], dv[a->src(b)]);
          for (auto& [i, c] : expr[b]) x.add_scaled(mono_act[i], c);
          act.push_back(std::move(x));
        }
        try {
          Module m = make_module(a, dv, act);
          if (is_indecomposable(m, seed) && find_iso(out.mods, m, seed) < 0) out.mods.push_back(m);
        } catch (const std::invalid_argument&) {
        }
        std::size_t i = 0;
        while (i < entries && val[i] == f.p - 1) val[i++] = 0;
        if (i == entries) break;
        ++val[i];
      }
      return;
    }
    for (int d = 0; d <= left; ++d) {
      dv[v] = d;
      rec(v + 1, left - d);
    }
    dv[v] = 0;
  };
  rec(0, dim_cap);
  return out;
}

// ---------------------------------------------------------------------------

ARQuiver ar_quiver(const std::vector<Module>& c, int n, std::uint64_t seed) {
  ARQuiver q;
  q.vertices = c;
  const int k = static_cast<int>(c.size());
  EndAlgebra e = end_algebra(c);
  q.arrows.assign(k, std::vector<int>(k, 0));
  for (auto& g : e.alg->arrows()) ++q.arrows[g.tgt][g.src];
  q.cross_check = true;
  for (int y = 0; y < k; ++y) {
    auto top = top_multiplicities(radical_of_module(projective_module(e.alg, y)).mod);
    for (int x = 0; x < k; ++x)
      if (top[x] != q.arrows[x][y]) q.cross_check = false;
  }
  q.dotted.assign(k, -1);
  for (int x = 0; x < k; ++x) {
    if (is_projective(c[x])) continue;
    Module t = tau_n(c[x], n, seed);
    if (t.dim() > 0) q.dotted[x] = find_iso(c, t, seed);
  }
  return q;
}

Module connecting_tilting(const EndAlgebra& e1, const std::vector<Module>& m2) {
  return module_over_end(e1, direct_sum_module(e1.gens[0].alg, m2)).mod;
}

Tri tilting_check(const AlgebraPtr& gamma, const Module& u, int t, int cap) {
  Bounded p = pd(u, cap);
  if (p.value > t) return Tri::False;
  if (!p.exact) return Tri::Unknown;
  Tri ortho = ortho_check({u}, std::max(t, 1), cap).verdict;
  if (ortho != Tri::True) return ortho;
  auto us = indecomposable_summands(u);
  Module cur = regular_module(gamma);
  for (int i = 0; i < t; ++i) {
    if (in_add(us, cur)) return Tri::True;
    Approx ap = left_approximation(cur, us);
    if (!ap.map.is_injective()) return Tri::False;
    cur = cokernel(ap.map).mod;
  }
  return in_add(us, cur) ? Tri::True : Tri::False;
}

}  // namespace aus
