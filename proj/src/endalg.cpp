#include "aus/endalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "aus/errors.hpp"

namespace aus {

namespace {

Matrix flat_columns(Field f, const std::vector<ModuleMap>& ms, std::size_t len) {
  Matrix m(f, len, ms.size());
  for (std::size_t j = 0; j < ms.size(); ++j) {
    auto v = flatten(ms[j]);
    for (std::size_t i = 0; i < len; ++i) m.at(i, j) = v[i];
  }
  return m;
}

std::size_t flat_size(const Module& x, const Module& y) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < x.vdim.size(); ++v) n += static_cast<std::size_t>(x.vdim[v]) * y.vdim[v];
  return n;
}

std::vector<Scalar> coords_in(Field f, const std::vector<ModuleMap>& basis, const ModuleMap& g, std::size_t len) {
  if (basis.empty()) return {};
  Matrix b = flat_columns(f, basis, len);
  Matrix rhs(f, len, 1);
  auto v = flatten(g);
  for (std::size_t i = 0; i < len; ++i) rhs.at(i, 0) = v[i];
  auto sol = solve(b, rhs);
  if (!sol) throw std::logic_error("map outside the span of the hom basis");
  std::vector<Scalar> out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = sol->at(i, 0);
  return out;
}

// Basis of End(M) with the identity first and the rest spanning the radical.
std::vector<ModuleMap> local_end_basis(const Module& m) {
  auto end = hom_basis(m, m);
  const Field f = m.field();
  std::vector<ModuleMap> nil;
  for (auto& phi : end) {
    auto roots = poly_roots(f, min_poly(phi.full()));
    if (roots.size() != 1) throw PreconditionFailed("end_algebra: generator without local split endomorphism ring");
    ModuleMap n = add(phi, scale(identity_map(m), f.reduce(-roots[0])));
    if (!is_nilpotent(n.full())) throw PreconditionFailed("end_algebra: generator is decomposable");
    nil.push_back(n);
  }
  std::size_t len = flat_size(m, m);
  std::vector<ModuleMap> out{identity_map(m)};
  if (!nil.empty())
    for (auto p : rref(flat_columns(f, nil, len)).pivots) out.push_back(nil[p]);
  if (out.size() != end.size()) throw PreconditionFailed("end_algebra: endomorphism ring is not local");
  return out;
}

}  // namespace

EndAlgebra end_algebra(const std::vector<Module>& gens) {
  if (gens.empty()) throw std::invalid_argument("end_algebra: empty generator list");
  const Field f = gens[0].field();
  const int r = static_cast<int>(gens.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < i; ++j)
      if (isomorphic(gens[i], gens[j])) throw PreconditionFailed("end_algebra: generators are not pairwise non-isomorphic");
  EndAlgebra e;
  e.gens = gens;
  Algebra::Data d;
  d.field = f;
  d.origin = Origin::Endomorphism;
  std::vector<std::vector<std::vector<ModuleMap>>> hb(r, std::vector<std::vector<ModuleMap>>(r));
  std::vector<std::vector<std::vector<int>>> idx(r, std::vector<std::vector<int>>(r));
  for (int k = 0; k < r; ++k) d.vertex_labels.push_back(std::to_string(k + 1));
  d.idem.resize(r);
  // Idempotents first so that their indices are stable.
  for (int k = 0; k < r; ++k) hb[k][k] = local_end_basis(gens[k]);
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l)
      if (k != l) hb[k][l] = hom_basis(gens[k], gens[l]);
  auto push = [&](int k, int l, std::size_t j) {
    idx[k][l].push_back(static_cast<int>(e.maps.size()));
    e.maps.push_back(hb[k][l][j]);
    d.src.push_back(l);
    d.tgt.push_back(k);
    d.labels.push_back(k == l && j == 0 ? "e_" + std::to_string(k + 1)
                                        : "h" + std::to_string(k + 1) + "_" + std::to_string(l + 1) + "_" +
                                              std::to_string(j));
  };
  for (int k = 0; k < r; ++k) {
    d.idem[k] = static_cast<int>(e.maps.size());
    push(k, k, 0);
  }
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l)
      for (std::size_t j = (k == l ? 1 : 0); j < hb[k][l].size(); ++j) push(k, l, j);
  const int n = static_cast<int>(e.maps.size());
  d.mult.assign(n, std::vector<SparseVec>(n));
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      if (d.src[b] != d.tgt[c]) continue;
      // b*c = c∘b : M_tgt(b) -> M_src(c)
      int k = d.tgt[b], l = d.src[c];
      ModuleMap prod = compose(e.maps[c], e.maps[b]);
      auto co = coords_in(f, hb[k][l], prod, flat_size(gens[k], gens[l]));
      SparseVec sv;
      for (std::size_t j = 0; j < co.size(); ++j)
        if (sgn(co[j]) != 0) sv.push_back({idx[k][l][j], co[j]});
      std::sort(sv.begin(), sv.end(), [](const Term& x, const Term& y) { return x.idx < y.idx; });
      d.mult[b][c] = sv;
    }
  // Faithful representation: transposed action on ⊕M_i.
  DirectSum ds = direct_sum(gens[0].alg, gens);
  for (int b = 0; b < n; ++b) {
    ModuleMap g = compose(ds.incl[d.src[b]], compose(e.maps[b], ds.proj[d.tgt[b]]));
    d.faithful.push_back(g.full().transpose());
  }
  e.alg = Algebra::make(std::move(d), true);
  return e;
}

ModuleMap map_of(const EndAlgebra& e, const SparseVec& x, int k, int l) {
  ModuleMap out = zero_map(e.gens[k], e.gens[l]);
  for (auto& t : x) {
    if (e.alg->tgt(t.idx) != k || e.alg->src(t.idx) != l) throw std::invalid_argument("map_of: element outside e_k Γ e_l");
    out = add(out, scale(e.maps[t.idx], t.c));
  }
  return out;
}

EndModule module_over_end(const EndAlgebra& e, const Module& x) {
  const Field f = x.field();
  const int r = static_cast<int>(e.gens.size());
  EndModule out;
  out.mod.alg = e.alg;
  for (int i = 0; i < r; ++i) {
    out.basis.push_back(hom_basis(e.gens[i], x));
    out.mod.vdim.push_back(static_cast<int>(out.basis[i].size()));
  }
  for (int b = 0; b < e.alg->dim(); ++b) {
    int k = e.alg->tgt(b), l = e.alg->src(b);
    Matrix a(f, out.mod.vdim[k], out.mod.vdim[l]);
    std::size_t len = flat_size(e.gens[k], x);
    for (int j = 0; j < out.mod.vdim[l]; ++j) {
      auto co = coords_in(f, out.basis[k], compose(out.basis[l][j], e.maps[b]), len);
      for (std::size_t i = 0; i < co.size(); ++i) a.at(i, j) = co[i];
    }
    out.mod.act.push_back(std::move(a));
  }
  return out;
}

EndModule module_over_end_contra(const EndAlgebra& e, const Module& x) {
  const Field f = x.field();
  const int r = static_cast<int>(e.gens.size());
  EndModule out;
  out.mod.alg = e.alg->opposite();
  for (int i = 0; i < r; ++i) {
    out.basis.push_back(hom_basis(x, e.gens[i]));
    out.mod.vdim.push_back(static_cast<int>(out.basis[i].size()));
  }
  // In Γ^op the element b : M_k -> M_l goes from vertex k to vertex l.
  for (int b = 0; b < e.alg->dim(); ++b) {
    int k = e.alg->tgt(b), l = e.alg->src(b);
    Matrix a(f, out.mod.vdim[l], out.mod.vdim[k]);
    std::size_t len = flat_size(x, e.gens[l]);
    for (int j = 0; j < out.mod.vdim[k]; ++j) {
      auto co = coords_in(f, out.basis[l], compose(e.maps[b], out.basis[k][j]), len);
      for (std::size_t i = 0; i < co.size(); ++i) a.at(i, j) = co[i];
    }
    out.mod.act.push_back(std::move(a));
  }
  return out;
}

std::vector<Scalar> end_coords(const EndModule& m, int i, const ModuleMap& f) {
  return coords_in(f.src.field(), m.basis[i], f, flat_size(f.src, f.tgt));
}

}  // namespace aus
