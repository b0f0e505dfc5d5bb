#include "aus/homology.hpp"

#include <algorithm>

#include "aus/errors.hpp"

namespace aus {

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

Tri tri_not(Tri a) {
  if (a == Tri::Unknown) return a;
  return a == Tri::True ? Tri::False : Tri::True;
}

const char* tri_str(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    default:
      return "indeterminate";
  }
}

std::string bounded_str(const Bounded& b) {
  return b.exact ? std::to_string(b.value) : ">=" + std::to_string(b.value);
}

namespace {

// Hom(⊕P_{w_l}, Y) -> Hom(⊕P_{v_k}, Y) induced by d with components comp[k][l].
Matrix dual_differential(const Module& y, const std::vector<int>& from, const std::vector<int>& to,
                         const Components& comp) {
  std::vector<int> roff(from.size() + 1, 0), coff(to.size() + 1, 0);
  for (std::size_t k = 0; k < from.size(); ++k) roff[k + 1] = roff[k] + y.vdim[from[k]];
  for (std::size_t l = 0; l < to.size(); ++l) coff[l + 1] = coff[l] + y.vdim[to[l]];
  Matrix m(y.field(), roff.back(), coff.back());
  for (std::size_t k = 0; k < from.size(); ++k)
    for (std::size_t l = 0; l < to.size(); ++l)
      if (!comp[k][l].empty()) m.set_block(roff[k], coff[l], y.act_elem(comp[k][l], from[k], to[l]));
  return m;
}

int hom_from_proj(const Module& y, const std::vector<int>& verts) {
  int n = 0;
  for (int v : verts) n += y.vdim[v];
  return n;
}

// dims of Ext^0..Ext^upto using a resolution of x computed to degree upto+1.
std::vector<int> ext_dims(const Module& x, const Module& y, int upto) {
  if (!same_algebra(x.alg, y.alg)) throw std::invalid_argument("ext: modules over different algebras");
  Resolution r = min_proj_resolution(x, upto + 1);
  const auto& a = x.alg;
  const int len = static_cast<int>(r.terms.size());
  // rk[i] = rank of δ^{i-1} : Hom(P_{i-1},Y) -> Hom(P_i,Y), i >= 1.
  std::vector<int> rk(len + 1, 0);
  for (int i = 1; i < len; ++i) {
    ProjSum from = projective_sum(a, r.verts[i]), to = projective_sum(a, r.verts[i - 1]);
    Components c = components(r.maps[i], from, to);
    rk[i] = static_cast<int>(rank(dual_differential(y, r.verts[i], r.verts[i - 1], c)));
  }
  std::vector<int> out(upto + 1, 0);
  for (int i = 0; i <= upto && i < len; ++i)
    out[i] = hom_from_proj(y, r.verts[i]) - rk[i] - (i + 1 < len ? rk[i + 1] : 0);
  return out;
}

}  // namespace

int ext_dim(const Module& x, const Module& y, int i, int cap) {
  if (i < 0) throw std::invalid_argument("ext: negative degree");
  if (i > cap) throw ResolutionTruncated("degree " + std::to_string(i) + " exceeds cap " + std::to_string(cap));
  return ext_dims(x, y, i)[i];
}

int ext_dim_inj(const Module& x, const Module& y, int i, int cap) {
  // Hom_A(X, D P_•) = Hom_{A^op}(P_•, DX) for the projective resolution P_• of DY.
  return ext_dim(dual(y), dual(x), i, cap);
}

ExtTable ext_table(const Module& x, const Module& y, int cap) {
  ExtTable t;
  t.cap = cap;
  t.dims = ext_dims(x, y, cap);
  t.truncated = min_proj_resolution(x, cap).truncated_at.has_value();
  return t;
}

Bounded pd(const Module& m, int cap) {
  Resolution r = min_proj_resolution(m, cap);
  if (r.truncated_at) return {cap + 1, false};
  return {std::max(0, r.length()), true};
}

Bounded id(const Module& m, int cap) { return pd(dual(m), cap); }

Bounded gldim(const AlgebraPtr& a, int cap) {
  Bounded g{0, true};
  for (int v = 0; v < a->nverts(); ++v) {
    Bounded p = pd(simple_module(a, v), cap);
    if (!p.exact) return p;
    g.value = std::max(g.value, p.value);
  }
  return g;
}

namespace {

struct InjProfile {
  Resolution res;
  std::vector<bool> inj_proj;  // I_v projective
  std::vector<Bounded> inj_pd;
};

InjProfile inj_profile(const AlgebraPtr& a, int cap, bool need_pd) {
  InjProfile p{min_inj_coresolution(regular_module(a), cap), {}, {}};
  for (int v = 0; v < a->nverts(); ++v) {
    Module i = injective_module(a, v);
    p.inj_proj.push_back(is_projective(i));
    if (need_pd) p.inj_pd.push_back(pd(i, cap));
  }
  return p;
}

// Compares pd of term i with a bound; threshold(i) is the largest allowed pd.
template <class Th>
Tri term_condition(const InjProfile& p, int n, Th threshold) {
  Tri res = Tri::True;
  const int have = static_cast<int>(p.res.terms.size());
  for (int i = 0; i < n; ++i) {
    if (i >= have) {
      if (p.res.truncated_at) res = tri_and(res, Tri::Unknown);
      break;
    }
    for (int v : p.res.verts[i]) {
      const Bounded& b = p.inj_pd[v];
      int th = threshold(i);
      // An inexact pd is a lower bound.
      if (b.value > th) return Tri::False;
      if (!b.exact) res = tri_and(res, Tri::Unknown);
    }
  }
  return res;
}

}  // namespace

Bounded domdim(const AlgebraPtr& a, int cap) {
  InjProfile p = inj_profile(a, cap, false);
  int count = 0;
  for (auto& vs : p.res.verts) {
    bool proj = std::all_of(vs.begin(), vs.end(), [&](int v) { return p.inj_proj[v]; });
    if (!proj) return {count, true};
    ++count;
  }
  // Every term projective: either the coresolution stopped or it was cut at the cap.
  return {p.res.truncated_at ? count : cap + 1, false};
}

Tri mn_condition(const AlgebraPtr& a, int m, int n, int cap) {
  if (m < 1 || n < 1) throw std::invalid_argument("mn_condition: m and n must be positive");
  return term_condition(inj_profile(a, cap, true), n, [&](int) { return m - 1; });
}

Tri two_sided_mn(const AlgebraPtr& a, int m, int n, int cap) {
  return tri_and(mn_condition(a, m, n, cap), mn_condition(a->opposite(), m, n, cap));
}

Tri n_gorenstein(const AlgebraPtr& a, int n, int cap) {
  return term_condition(inj_profile(a, cap, true), n, [](int i) { return i; });
}

Bounded gorenstein_profile(const AlgebraPtr& a, int cap) {
  InjProfile p = inj_profile(a, cap, true);
  for (int n = 1; n <= cap; ++n) {
    Tri t = term_condition(p, n, [](int i) { return i; });
    if (t == Tri::False) return {n - 1, true};
    if (t == Tri::Unknown) return {n - 1, false};
  }
  return {cap, false};
}

Bounded grade(const Module& m, int cap) {
  if (m.dim() == 0) return {cap + 1, false};
  auto dims = ext_dims(m, regular_module(m.alg), cap);
  for (int i = 0; i <= cap; ++i)
    if (dims[i] != 0) return {i, true};
  return {cap + 1, false};
}

Module transpose(const Module& m) {
  const auto& a = m.alg;
  const auto op = a->opposite();
  Cover c0 = projective_cover(m);
  Sub k = kernel(c0.epi);
  Cover c1 = projective_cover(k.mod);
  ModuleMap d = compose(k.map, c1.epi);
  Components comp = components(d, c1.p, c0.p);
  // Dual presentation P0* -> P1* over A^op; component from summand l of P0* to summand k of P1* is comp[k][l].
  ProjSum q0 = projective_sum(op, c0.p.verts), q1 = projective_sum(op, c1.p.verts);
  Components t(c0.p.verts.size(), std::vector<SparseVec>(c1.p.verts.size()));
  for (std::size_t kk = 0; kk < c1.p.verts.size(); ++kk)
    for (std::size_t l = 0; l < c0.p.verts.size(); ++l) t[l][kk] = comp[kk][l];
  return cokernel(map_from_components(q0, q1, t)).mod;
}

Module tau(const Module& m) { return dual(transpose(m)); }

Module tau_inv(const Module& m) { return transpose(dual(m)); }

Module tau_n(const Module& m, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tau_n: n must be positive");
  return tau(syzygy(m, n - 1, seed));
}

Module tau_n_inv(const Module& m, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tau_n_inv: n must be positive");
  return tau_inv(cosyzygy(m, n - 1, seed));
}

namespace {

int factor_rank(const std::vector<ModuleMap>& maps) {
  if (maps.empty()) return 0;
  std::vector<Scalar> first = flatten(maps[0]);
  Matrix m(maps[0].src.field(), first.size(), maps.size());
  for (std::size_t j = 0; j < maps.size(); ++j) {
    auto v = flatten(maps[j]);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, j) = v[i];
  }
  return static_cast<int>(rank(m));
}

}  // namespace

int stable_hom_dim(const Module& x, const Module& y) {
  Cover c = projective_cover(y);
  std::vector<ModuleMap> through;
  for (auto& h : hom_basis(x, c.p.ds.sum)) through.push_back(compose(c.epi, h));
  return hom_dim(x, y) - factor_rank(through);
}

int costable_hom_dim(const Module& x, const Module& y, const std::vector<Module>* inj_class) {
  std::vector<ModuleMap> through;
  if (inj_class) {
    Approx ap = left_approximation(x, *inj_class);
    for (auto& h : hom_basis(ap.obj, y)) through.push_back(compose(h, ap.map));
  } else {
    Envelope e = injective_envelope(x);
    for (auto& h : hom_basis(e.inj, y)) through.push_back(compose(h, e.mono));
  }
  return hom_dim(x, y) - factor_rank(through);
}

DimReport dim_report(const AlgebraPtr& a, int cap) {
  return {gldim(a, cap), domdim(a, cap), domdim(a->opposite(), cap), gorenstein_profile(a, cap)};
}

}  // namespace aus
