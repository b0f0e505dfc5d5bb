#include "aus/modrep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "aus/errors.hpp"

namespace aus {

namespace {

void require_same(const AlgebraPtr& a, const AlgebraPtr& b, const char* what) {
  if (!same_algebra(a, b)) throw std::invalid_argument(std::string(what) + ": modules over different algebras");
}

// k x n left inverse of a full-column-rank n x k matrix.
Matrix left_inverse(const Matrix& b) {
  Field f = b.field();
  if (b.cols() == 0) return Matrix(f, 0, b.rows());
  auto r = rref(b.transpose());
  std::vector<std::size_t> rows(r.pivots.begin(), r.pivots.end());
  auto inv = inverse(b.rows_subset(rows));
  if (!inv || rows.size() != b.cols()) throw std::logic_error("left_inverse: columns are dependent");
  Matrix sel(f, rows.size(), b.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) sel.at(i, rows[i]) = 1;
  return *inv * sel;
}

Module restrict_action(const Module& m, const std::vector<Matrix>& bases) {
  Module out;
  out.alg = m.alg;
  const int r = m.alg->nverts();
  out.vdim.resize(r);
  std::vector<Matrix> li(r);
  for (int v = 0; v < r; ++v) {
    out.vdim[v] = static_cast<int>(bases[v].cols());
    li[v] = left_inverse(bases[v]);
  }
  out.act.resize(m.alg->dim());
  for (int b = 0; b < m.alg->dim(); ++b) {
    int s = m.alg->src(b), t = m.alg->tgt(b);
    out.act[b] = li[t] * (m.act[b] * bases[s]);
  }
  return out;
}

Scalar random_scalar(Field f, std::mt19937_64& rng) {
  return f.reduce(Scalar(static_cast<long>(rng() % 7) - 3));
}

bool tiny_space(Field f, std::size_t n) {
  if (!f.is_prime()) return false;
  double bits = static_cast<double>(n) * std::log2(static_cast<double>(f.p));
  return bits <= 16.0;
}

// Calls fn on every nonzero coefficient vector of length n over F_p; stops when fn returns true.
template <class Fn>
bool enumerate_coeffs(Field f, std::size_t n, Fn fn) {
  std::vector<long> c(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && c[i] == f.p - 1) c[i++] = 0;
    if (i == n) return false;
    ++c[i];
    std::vector<Scalar> cs(n);
    for (std::size_t k = 0; k < n; ++k) cs[k] = c[k];
    if (fn(cs)) return true;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Module basics

int Module::dim() const { return std::accumulate(vdim.begin(), vdim.end(), 0); }

int Module::offset(int v) const { return std::accumulate(vdim.begin(), vdim.begin() + v, 0); }

Matrix Module::full_action(int b) const {
  Matrix m(field(), dim(), dim());
  m.set_block(offset(alg->tgt(b)), offset(alg->src(b)), act[b]);
  return m;
}

Matrix Module::act_elem(const SparseVec& x, int t, int s) const {
  Matrix m(field(), vdim[t], vdim[s]);
  for (auto& term : x)
    if (alg->tgt(term.idx) == t && alg->src(term.idx) == s) m.add_scaled(act[term.idx], term.c);
  return m;
}

Module make_module(AlgebraPtr a, std::vector<int> vdim, std::vector<Matrix> act) {
  if (static_cast<int>(vdim.size()) != a->nverts() || static_cast<int>(act.size()) != a->dim())
    throw std::invalid_argument("module: wrong number of vertices or action matrices");
  Module m{a, std::move(vdim), std::move(act)};
  for (int b = 0; b < a->dim(); ++b) {
    const auto& x = m.act[b];
    if (static_cast<int>(x.rows()) != m.vdim[a->tgt(b)] || static_cast<int>(x.cols()) != m.vdim[a->src(b)])
      throw std::invalid_argument("module: action of " + a->label(b) + " has the wrong shape");
    if (!(x.field() == a->field())) throw std::invalid_argument("module: field mismatch");
  }
  for (int v = 0; v < a->nverts(); ++v)
    if (!(m.act[a->idem(v)] == Matrix::identity(a->field(), m.vdim[v])))
      throw std::invalid_argument("module: idempotent does not act as identity");
  for (int b = 0; b < a->dim(); ++b)
    for (int c = 0; c < a->dim(); ++c) {
      if (a->src(b) != a->tgt(c)) continue;
      Matrix lhs = m.act[b] * m.act[c];
      Matrix rhs = m.act_elem(a->mul(b, c), a->tgt(b), a->src(c));
      if (!(lhs == rhs)) throw std::invalid_argument("module: action fails on " + a->label(b) + "*" + a->label(c));
    }
  return m;
}

Module zero_module(AlgebraPtr a) {
  Module m{a, std::vector<int>(a->nverts(), 0), {}};
  for (int b = 0; b < a->dim(); ++b) m.act.emplace_back(a->field(), 0, 0);
  return m;
}

// ---------------------------------------------------------------------------
// Maps

Matrix ModuleMap::full() const {
  Matrix m(src.field(), tgt.dim(), src.dim());
  for (int v = 0; v < static_cast<int>(blk.size()); ++v) m.set_block(tgt.offset(v), src.offset(v), blk[v]);
  return m;
}

bool ModuleMap::is_zero() const {
  return std::all_of(blk.begin(), blk.end(), [](const Matrix& m) { return m.is_zero(); });
}

int ModuleMap::rank() const {
  int r = 0;
  for (auto& m : blk) r += static_cast<int>(aus::rank(m));
  return r;
}

ModuleMap zero_map(const Module& x, const Module& y) {
  ModuleMap f{x, y, {}};
  for (int v = 0; v < x.alg->nverts(); ++v) f.blk.emplace_back(x.field(), y.vdim[v], x.vdim[v]);
  return f;
}

ModuleMap identity_map(const Module& x) {
  ModuleMap f{x, x, {}};
  for (int v = 0; v < x.alg->nverts(); ++v) f.blk.push_back(Matrix::identity(x.field(), x.vdim[v]));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (g.src.vdim != f.tgt.vdim) throw std::invalid_argument("compose: shapes do not match");
  ModuleMap h{f.src, g.tgt, {}};
  for (std::size_t v = 0; v < f.blk.size(); ++v) h.blk.push_back(g.blk[v] * f.blk[v]);
  return h;
}

ModuleMap add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h = f;
  for (std::size_t v = 0; v < f.blk.size(); ++v) h.blk[v] = f.blk[v] + g.blk[v];
  return h;
}

ModuleMap scale(const ModuleMap& f, const Scalar& s) {
  ModuleMap h = f;
  for (auto& m : h.blk) m = m.scaled(s);
  return h;
}

ModuleMap linear_combination(const std::vector<ModuleMap>& fs, const std::vector<Scalar>& cs, const Module& x,
                             const Module& y) {
  ModuleMap h = zero_map(x, y);
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (sgn(cs[i]) != 0)
      for (std::size_t v = 0; v < h.blk.size(); ++v) h.blk[v].add_scaled(fs[i].blk[v], cs[i]);
  return h;
}

bool is_module_map(const ModuleMap& f) {
  const auto& a = f.src.alg;
  for (int b = 0; b < a->dim(); ++b)
    if (!(f.blk[a->tgt(b)] * f.src.act[b] == f.tgt.act[b] * f.blk[a->src(b)])) return false;
  return true;
}

std::vector<Scalar> flatten(const ModuleMap& f) {
  std::vector<Scalar> out;
  for (auto& m : f.blk) {
    auto v = m.vec();
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

namespace {

std::size_t rank_of(Field f, const std::vector<std::vector<Scalar>>& vs, std::size_t len) {
  if (vs.empty()) return 0;
  Matrix m(f, len, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < len; ++i) m.at(i, j) = vs[j][i];
  return rank(m);
}

std::size_t flat_len(const Module& x, const Module& y) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < x.vdim.size(); ++v) n += static_cast<std::size_t>(x.vdim[v]) * y.vdim[v];
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Standard modules

Module simple_module(const AlgebraPtr& a, int i) {
  std::vector<int> vd(a->nverts(), 0);
  vd.at(i) = 1;
  Module m{a, vd, {}};
  for (int b = 0; b < a->dim(); ++b) {
    Matrix x(a->field(), vd[a->tgt(b)], vd[a->src(b)]);
    if (b == a->idem(i)) x.at(0, 0) = 1;
    m.act.push_back(x);
  }
  return m;
}

Module projective_module(const AlgebraPtr& a, int i) {
  const int r = a->nverts();
  std::vector<int> vd(r);
  std::vector<int> pos(a->dim(), -1);
  for (int t = 0; t < r; ++t) {
    const auto& bl = a->block(t, i);
    vd[t] = static_cast<int>(bl.size());
    for (int k = 0; k < vd[t]; ++k) pos[bl[k]] = k;
  }
  Module m{a, vd, {}};
  for (int c = 0; c < a->dim(); ++c) {
    int s = a->src(c), t = a->tgt(c);
    Matrix x(a->field(), vd[t], vd[s]);
    for (int y : a->block(s, i))
      for (auto& term : a->mul(c, y)) x.at(pos[term.idx], pos[y]) = term.c;
    m.act.push_back(x);
  }
  return m;
}

Module injective_module(const AlgebraPtr& a, int i) {
  const int r = a->nverts();
  std::vector<int> vd(r);
  std::vector<int> pos(a->dim(), -1);
  for (int t = 0; t < r; ++t) {
    const auto& bl = a->block(i, t);
    vd[t] = static_cast<int>(bl.size());
    for (int k = 0; k < vd[t]; ++k) pos[bl[k]] = k;
  }
  Module m{a, vd, {}};
  for (int c = 0; c < a->dim(); ++c) {
    int s = a->src(c), t = a->tgt(c);
    Matrix x(a->field(), vd[t], vd[s]);
    for (int xb : a->block(i, t))
      for (auto& term : a->mul(xb, c)) x.at(pos[xb], pos[term.idx]) = term.c;
    m.act.push_back(x);
  }
  return m;
}

Module regular_module(const AlgebraPtr& a) {
  std::vector<Module> ps;
  for (int v = 0; v < a->nverts(); ++v) ps.push_back(projective_module(a, v));
  return direct_sum_module(a, ps);
}

Module injective_cogenerator(const AlgebraPtr& a) {
  std::vector<Module> is;
  for (int v = 0; v < a->nverts(); ++v) is.push_back(injective_module(a, v));
  return direct_sum_module(a, is);
}

// ---------------------------------------------------------------------------
// Direct sums

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& ms) {
  const int r = a->nverts();
  DirectSum ds;
  ds.sum.alg = a;
  ds.sum.vdim.assign(r, 0);
  std::vector<std::vector<int>> off(ms.size(), std::vector<int>(r));
  for (std::size_t k = 0; k < ms.size(); ++k) {
    require_same(a, ms[k].alg, "direct_sum");
    for (int v = 0; v < r; ++v) {
      off[k][v] = ds.sum.vdim[v];
      ds.sum.vdim[v] += ms[k].vdim[v];
    }
  }
  for (int b = 0; b < a->dim(); ++b) {
    int s = a->src(b), t = a->tgt(b);
    Matrix x(a->field(), ds.sum.vdim[t], ds.sum.vdim[s]);
    for (std::size_t k = 0; k < ms.size(); ++k) x.set_block(off[k][t], off[k][s], ms[k].act[b]);
    ds.sum.act.push_back(std::move(x));
  }
  for (std::size_t k = 0; k < ms.size(); ++k) {
    ModuleMap in{ms[k], ds.sum, {}}, pr{ds.sum, ms[k], {}};
    for (int v = 0; v < r; ++v) {
      Matrix i(a->field(), ds.sum.vdim[v], ms[k].vdim[v]);
      i.set_block(off[k][v], 0, Matrix::identity(a->field(), ms[k].vdim[v]));
      pr.blk.push_back(i.transpose());
      in.blk.push_back(std::move(i));
    }
    ds.incl.push_back(std::move(in));
    ds.proj.push_back(std::move(pr));
  }
  return ds;
}

Module direct_sum_module(const AlgebraPtr& a, const std::vector<Module>& ms) { return direct_sum(a, ms).sum; }

ModuleMap block_map(const DirectSum& from, const DirectSum& to,
                    const std::vector<std::vector<std::optional<ModuleMap>>>& comp) {
  ModuleMap h = zero_map(from.sum, to.sum);
  for (std::size_t l = 0; l < comp.size(); ++l)
    for (std::size_t k = 0; k < comp[l].size(); ++k) {
      if (!comp[l][k]) continue;
      for (std::size_t v = 0; v < h.blk.size(); ++v)
        h.blk[v] = h.blk[v] + to.incl[l].blk[v] * comp[l][k]->blk[v] * from.proj[k].blk[v];
    }
  return h;
}

// ---------------------------------------------------------------------------
// Hom spaces

std::vector<ModuleMap> hom_basis(const Module& x, const Module& y) {
  require_same(x.alg, y.alg, "hom_basis");
  const auto& a = x.alg;
  const Field f = a->field();
  const int r = a->nverts();
  std::vector<int> uoff(r + 1, 0);
  for (int v = 0; v < r; ++v) uoff[v + 1] = uoff[v] + y.vdim[v] * x.vdim[v];
  const int nu = uoff[r];
  std::vector<ModuleMap> out;
  if (nu == 0) return out;
  std::size_t neq = 0;
  for (auto& g : a->arrows()) neq += static_cast<std::size_t>(y.vdim[g.tgt]) * x.vdim[g.src];
  Matrix sys(f, neq, nu);
  std::size_t row = 0;
  for (auto& g : a->arrows()) {
    int s = g.src, t = g.tgt;
    Matrix xg = x.act_elem(g.v, t, s), yg = y.act_elem(g.v, t, s);
    // (f_t X(g) - Y(g) f_s)[i][j]; f_v[i][k] sits at uoff[v] + k*ydim[v] + i.
    for (int i = 0; i < y.vdim[t]; ++i)
      for (int j = 0; j < x.vdim[s]; ++j, ++row) {
        for (int k = 0; k < x.vdim[t]; ++k)
          if (sgn(xg.at(k, j)) != 0) sys.at(row, uoff[t] + k * y.vdim[t] + i) += xg.at(k, j);
        for (int k = 0; k < y.vdim[s]; ++k)
          if (sgn(yg.at(i, k)) != 0) sys.at(row, uoff[s] + j * y.vdim[s] + k) -= yg.at(i, k);
      }
  }
  for (std::size_t i = 0; i < sys.rows(); ++i)
    for (std::size_t j = 0; j < sys.cols(); ++j) sys.at(i, j) = f.reduce(sys.at(i, j));
  Matrix ker = kernel_basis(sys);
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    ModuleMap h{x, y, {}};
    for (int v = 0; v < r; ++v) {
      Matrix m(f, y.vdim[v], x.vdim[v]);
      for (int k = 0; k < x.vdim[v]; ++k)
        for (int i = 0; i < y.vdim[v]; ++i) m.at(i, k) = ker.at(uoff[v] + k * y.vdim[v] + i, c);
      h.blk.push_back(std::move(m));
    }
    out.push_back(std::move(h));
  }
  return out;
}

int hom_dim(const Module& x, const Module& y) { return static_cast<int>(hom_basis(x, y).size()); }

// ---------------------------------------------------------------------------
// Kernels, images, cokernels

Sub submodule(const Module& m, const std::vector<Matrix>& gens) {
  std::vector<Matrix> bases;
  for (auto& g : gens) {
    Matrix b = column_basis(g);
    if (b.cols() == 0) b = Matrix(m.field(), g.rows(), 0);
    bases.push_back(b);
  }
  Module s = restrict_action(m, bases);
  return {s, ModuleMap{s, m, bases}};
}

Sub kernel(const ModuleMap& f) {
  std::vector<Matrix> ks;
  for (auto& b : f.blk) ks.push_back(kernel_basis(b));
  return submodule(f.src, ks);
}

Sub image(const ModuleMap& f) { return submodule(f.tgt, f.blk); }

Sub cokernel(const ModuleMap& f) {
  const Module& y = f.tgt;
  const Field fld = y.field();
  const int r = y.alg->nverts();
  std::vector<Matrix> q(r), c(r);
  Module out;
  out.alg = y.alg;
  out.vdim.resize(r);
  for (int v = 0; v < r; ++v) {
    Matrix im = column_basis(f.blk[v]);
    if (im.cols() == 0) im = Matrix(fld, y.vdim[v], 0);
    c[v] = column_complement(im);
    if (c[v].cols() == 0) c[v] = Matrix(fld, y.vdim[v], 0);
    Matrix t = hstack({im, c[v]}, fld, y.vdim[v]);
    auto inv = inverse(t);
    q[v] = inv->block(im.cols(), 0, c[v].cols(), y.vdim[v]);
    out.vdim[v] = static_cast<int>(c[v].cols());
  }
  for (int b = 0; b < y.alg->dim(); ++b) out.act.push_back(q[y.alg->tgt(b)] * y.act[b] * c[y.alg->src(b)]);
  return {out, ModuleMap{y, out, q}};
}

// ---------------------------------------------------------------------------
// Duality

Module dual(const Module& m) {
  Module d{m.alg->opposite(), m.vdim, {}};
  for (auto& x : m.act) d.act.push_back(x.transpose());
  return d;
}

ModuleMap dual(const ModuleMap& f) {
  ModuleMap d{dual(f.tgt), dual(f.src), {}};
  for (auto& b : f.blk) d.blk.push_back(b.transpose());
  return d;
}

// ---------------------------------------------------------------------------
// Radical, top, socle

Sub radical_of_module(const Module& m) {
  const auto& a = m.alg;
  const int r = a->nverts();
  std::vector<std::vector<Matrix>> parts(r);
  for (int b = 0; b < a->dim(); ++b)
    if (!a->is_idem(b)) parts[a->tgt(b)].push_back(m.act[b]);
  std::vector<Matrix> gens;
  for (int v = 0; v < r; ++v) {
    if (parts[v].empty())
      gens.emplace_back(m.field(), m.vdim[v], 0);
    else
      gens.push_back(hstack(parts[v], m.field(), m.vdim[v]));
  }
  return submodule(m, gens);
}

Sub top(const Module& m) { return cokernel(radical_of_module(m).map); }

Sub socle(const Module& m) {
  const auto& a = m.alg;
  const int r = a->nverts();
  std::vector<std::vector<Matrix>> parts(r);
  for (int b = 0; b < a->dim(); ++b)
    if (!a->is_idem(b)) parts[a->src(b)].push_back(m.act[b]);
  std::vector<Matrix> gens;
  for (int v = 0; v < r; ++v) {
    if (parts[v].empty())
      gens.push_back(Matrix::identity(m.field(), m.vdim[v]));
    else
      gens.push_back(kernel_basis(vstack(parts[v], m.field(), m.vdim[v])));
  }
  return submodule(m, gens);
}

std::vector<int> top_multiplicities(const Module& m) {
  auto rad = radical_of_module(m).mod;
  std::vector<int> out(m.vdim.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = m.vdim[v] - rad.vdim[v];
  return out;
}

std::vector<int> socle_multiplicities(const Module& m) { return socle(m).mod.vdim; }

// ---------------------------------------------------------------------------
// Projective sums and components

ProjSum projective_sum(const AlgebraPtr& a, const std::vector<int>& verts) {
  std::vector<Module> ps;
  for (int v : verts) ps.push_back(projective_module(a, v));
  return {verts, direct_sum(a, ps)};
}

namespace {

int pos_in_block(const AlgebraPtr& a, int t, int s, int b) {
  const auto& bl = a->block(t, s);
  auto it = std::find(bl.begin(), bl.end(), b);
  if (it == bl.end()) throw std::logic_error("basis element outside its block");
  return static_cast<int>(it - bl.begin());
}

// Offset of summand k at vertex v inside a projective sum.
int summand_offset(const ProjSum& p, int k, int v) {
  int off = 0;
  for (int j = 0; j < k; ++j) off += p.ds.incl[j].src.vdim[v];
  return off;
}

}  // namespace

ModuleMap map_from_components(const ProjSum& from, const ProjSum& to, const Components& comp) {
  const auto& a = from.ds.sum.alg;
  ModuleMap h = zero_map(from.ds.sum, to.ds.sum);
  for (std::size_t k = 0; k < from.verts.size(); ++k) {
    int vk = from.verts[k];
    for (std::size_t l = 0; l < to.verts.size(); ++l) {
      const SparseVec& c = comp[k][l];
      if (c.empty()) continue;
      int wl = to.verts[l];
      for (auto& term : c)
        if (a->tgt(term.idx) != vk || a->src(term.idx) != wl)
          throw std::invalid_argument("component lies outside e_v A e_w");
      for (int t = 0; t < a->nverts(); ++t)
        for (int b : a->block(t, vk)) {
          int col = summand_offset(from, static_cast<int>(k), t) + pos_in_block(a, t, vk, b);
          SparseVec img = a->mul(SparseVec{{b, Scalar(1)}}, c);
          for (auto& term : img) {
            int row = summand_offset(to, static_cast<int>(l), t) + pos_in_block(a, t, wl, term.idx);
            h.blk[t].at(row, col) = a->field().reduce(h.blk[t].at(row, col) + term.c);
          }
        }
    }
  }
  return h;
}

Components components(const ModuleMap& f, const ProjSum& from, const ProjSum& to) {
  const auto& a = f.src.alg;
  Components comp(from.verts.size(), std::vector<SparseVec>(to.verts.size()));
  for (std::size_t k = 0; k < from.verts.size(); ++k) {
    int vk = from.verts[k];
    int col = summand_offset(from, static_cast<int>(k), vk) + pos_in_block(a, vk, vk, a->idem(vk));
    for (std::size_t l = 0; l < to.verts.size(); ++l) {
      int wl = to.verts[l];
      int base = summand_offset(to, static_cast<int>(l), vk);
      const auto& bl = a->block(vk, wl);
      for (std::size_t j = 0; j < bl.size(); ++j) {
        const Scalar& x = f.blk[vk].at(base + j, col);
        if (sgn(x) != 0) comp[k][l].push_back({bl[j], x});
      }
    }
  }
  return comp;
}

// ---------------------------------------------------------------------------
// Covers, envelopes, resolutions

Cover projective_cover(const Module& m) {
  const auto& a = m.alg;
  const Field f = m.field();
  auto rad = radical_of_module(m);
  std::vector<int> verts;
  std::vector<Matrix> gens;  // generator vectors in M_v
  for (int v = 0; v < a->nverts(); ++v) {
    Matrix rb = rad.map.blk[v];
    Matrix comp = column_complement(rb.cols() ? rb : Matrix(f, m.vdim[v], 0));
    for (std::size_t j = 0; j < comp.cols(); ++j) {
      verts.push_back(v);
      gens.push_back(comp.col(j));
    }
  }
  ProjSum p = projective_sum(a, verts);
  ModuleMap epi = zero_map(p.ds.sum, m);
  for (std::size_t k = 0; k < verts.size(); ++k) {
    int v = verts[k];
    for (int t = 0; t < a->nverts(); ++t) {
      const auto& bl = a->block(t, v);
      int off = summand_offset(p, static_cast<int>(k), t);
      for (std::size_t j = 0; j < bl.size(); ++j) epi.blk[t].set_block(0, off + j, m.act[bl[j]] * gens[k]);
    }
  }
  return {p, epi};
}

Envelope injective_envelope(const Module& m) {
  Cover c = projective_cover(dual(m));
  return {c.p.verts, dual(c.p.ds.sum), dual(c.epi)};
}

Resolution min_proj_resolution(const Module& m, int cap) {
  Resolution res{Flavor::Projective, m, {}, {}, {}, true, std::nullopt};
  Module cur = m;
  std::optional<ModuleMap> incl;
  for (int i = 0;; ++i) {
    if (cur.dim() == 0) break;
    if (i > cap) {
      res.truncated_at = cap;
      break;
    }
    Cover c = projective_cover(cur);
    res.verts.push_back(c.p.verts);
    res.terms.push_back(c.p.ds.sum);
    res.maps.push_back(incl ? compose(*incl, c.epi) : c.epi);
    Sub k = kernel(c.epi);
    cur = k.mod;
    incl = k.map;
  }
  return res;
}

Resolution min_inj_coresolution(const Module& m, int cap) {
  Resolution p = min_proj_resolution(dual(m), cap);
  Resolution res{Flavor::Injective, m, p.verts, {}, {}, true, p.truncated_at};
  for (auto& t : p.terms) res.terms.push_back(dual(t));
  for (auto& f : p.maps) res.maps.push_back(dual(f));
  return res;
}

Module omega(const Module& m) { return kernel(projective_cover(m).epi).mod; }

Module omega_inv(const Module& m) { return cokernel(injective_envelope(m).mono).mod; }

bool is_projective(const Module& m) {
  return projective_cover(m).p.ds.sum.dim() == m.dim();
}

bool is_injective(const Module& m) { return is_projective(dual(m)); }

Module syzygy(const Module& m, int k, std::uint64_t seed) {
  Module x = strip_projective(m, seed);
  for (int i = 0; i < k; ++i) x = strip_projective(omega(x), seed);
  return x;
}

Module cosyzygy(const Module& m, int k, std::uint64_t seed) {
  Module x = strip_injective(m, seed);
  for (int i = 0; i < k; ++i) x = strip_injective(omega_inv(x), seed);
  return x;
}

// ---------------------------------------------------------------------------
// Endomorphism rings and decomposition

namespace {

ModuleMap map_power(ModuleMap f, int n) {
  ModuleMap r = identity_map(f.src);
  while (n > 0) {
    if (n & 1) r = compose(r, f);
    f = compose(f, f);
    n >>= 1;
  }
  return r;
}

bool is_nilpotent_map(const ModuleMap& f) { return is_nilpotent(f.full()); }

// Fitting split along φ - λ: returns (ker ψ^N, im ψ^N) when both are proper.
std::optional<std::pair<Sub, Sub>> fitting_split(const ModuleMap& phi) {
  const Module& m = phi.src;
  Matrix full = phi.full();
  auto mp = min_poly(full);
  for (const Scalar& lam : poly_roots(m.field(), mp)) {
    ModuleMap psi = add(phi, scale(identity_map(m), m.field().reduce(-lam)));
    if (is_nilpotent_map(psi)) continue;
    ModuleMap pw = map_power(psi, std::max(1, m.dim()));
    Sub k = kernel(pw), i = image(pw);
    if (k.mod.dim() > 0 && i.mod.dim() > 0) return std::make_pair(k, i);
  }
  return std::nullopt;
}

std::optional<std::pair<Sub, Sub>> find_split(const Module& m, const std::vector<ModuleMap>& end,
                                              std::uint64_t seed) {
  const Field f = m.field();
  for (auto& phi : end)
    if (auto s = fitting_split(phi)) return s;
  if (tiny_space(f, end.size())) {
    std::optional<std::pair<Sub, Sub>> found;
    enumerate_coeffs(f, end.size(), [&](const std::vector<Scalar>& cs) {
      found = fitting_split(linear_combination(end, cs, m, m));
      return found.has_value();
    });
    return found;
  }
  for (std::size_t i = 0; i < end.size(); ++i)
    for (std::size_t j = 0; j < end.size(); ++j)
      if (auto s = fitting_split(compose(end[i], end[j]))) return s;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < kRetryBudget; ++t) {
    std::vector<Scalar> cs(end.size());
    for (auto& c : cs) c = random_scalar(f, rng);
    if (auto s = fitting_split(linear_combination(end, cs, m, m))) return s;
  }
  return std::nullopt;
}

// End = k·1 ⊕ N with N a nilpotent subalgebra.
bool local_certificate(const Module& m, const std::vector<ModuleMap>& end) {
  if (m.dim() == 0) return false;
  if (end.size() == 1) return true;
  const Field f = m.field();
  std::vector<Matrix> nil;
  for (auto& phi : end) {
    Matrix full = phi.full();
    auto roots = poly_roots(f, min_poly(full));
    if (roots.size() != 1) return false;
    Matrix n = full - Matrix::identity(f, m.dim()).scaled(roots[0]);
    if (!is_nilpotent(n)) return false;
    nil.push_back(n);
  }
  auto basis_of = [&](const std::vector<Matrix>& ms) {
    std::vector<Matrix> out;
    if (ms.empty()) return out;
    std::size_t len = static_cast<std::size_t>(m.dim()) * m.dim();
    Matrix big(f, len, ms.size());
    for (std::size_t j = 0; j < ms.size(); ++j) {
      auto v = ms[j].vec();
      for (std::size_t i = 0; i < len; ++i) big.at(i, j) = v[i];
    }
    auto r = rref(big);
    for (auto p : r.pivots) out.push_back(ms[p]);
    return out;
  };
  std::vector<Matrix> n = basis_of(nil);
  if (n.size() + 1 != end.size()) return false;
  std::vector<Matrix> pw = n;
  for (int step = 0; step <= m.dim() && !pw.empty(); ++step) {
    std::vector<Matrix> prods;
    for (auto& x : pw)
      for (auto& y : n) {
        Matrix z = x * y;
        if (!z.is_zero()) prods.push_back(z);
      }
    auto next = basis_of(prods);
    if (next.size() >= pw.size() && !next.empty()) return false;
    pw = next;
  }
  return pw.empty();
}

// Complementary submodules K, I of m: inclusion and projection maps.
std::pair<Piece, Piece> split_pieces(const Module& m, const Sub& k, const Sub& i) {
  const Field f = m.field();
  Piece pk{k.mod, k.map, zero_map(m, k.mod), 0}, pi{i.mod, i.map, zero_map(m, i.mod), 0};
  for (std::size_t v = 0; v < m.vdim.size(); ++v) {
    Matrix t = hstack({k.map.blk[v], i.map.blk[v]}, f, m.vdim[v]);
    auto inv = inverse(t);
    if (!inv) throw std::logic_error("split: submodules are not complementary");
    pk.proj.blk[v] = inv->block(0, 0, k.mod.vdim[v], m.vdim[v]);
    pi.proj.blk[v] = inv->block(k.mod.vdim[v], 0, i.mod.vdim[v], m.vdim[v]);
  }
  return {pk, pi};
}

}  // namespace

bool is_local_end(const Module& m) { return local_certificate(m, hom_basis(m, m)); }

Decomposition decompose(const Module& m, std::uint64_t seed) {
  Decomposition d;
  if (m.dim() == 0) return d;
  std::vector<Piece> todo{{m, identity_map(m), identity_map(m), 0}};
  std::vector<Piece> done;
  while (!todo.empty()) {
    Piece p = std::move(todo.back());
    todo.pop_back();
    auto end = hom_basis(p.mod, p.mod);
    if (local_certificate(p.mod, end)) {
      done.push_back(std::move(p));
      continue;
    }
    auto s = find_split(p.mod, end, seed);
    if (!s) throw Inconclusive("no idempotent found for a summand of dimension " + std::to_string(p.mod.dim()));
    auto [a, b] = split_pieces(p.mod, s->first, s->second);
    for (Piece* q : {&a, &b}) {
      q->incl = compose(p.incl, q->incl);
      q->proj = compose(q->proj, p.proj);
      todo.push_back(std::move(*q));
    }
  }
  // Stable order: by dimension vector, then discovery.
  std::stable_sort(done.begin(), done.end(), [](const Piece& x, const Piece& y) { return x.mod.vdim < y.mod.vdim; });
  for (auto& p : done) {
    int cls = -1;
    for (std::size_t c = 0; c < d.summands.size(); ++c)
      if (iso(d.summands[c].first, p.mod, seed)) {
        cls = static_cast<int>(c);
        break;
      }
    if (cls < 0) {
      cls = static_cast<int>(d.summands.size());
      d.summands.push_back({p.mod, 0});
    }
    ++d.summands[cls].second;
    p.cls = cls;
    d.pieces.push_back(std::move(p));
  }
  return d;
}

std::vector<Module> indecomposable_summands(const Module& m, std::uint64_t seed) {
  std::vector<Module> out;
  for (auto& [mod, mult] : decompose(m, seed).summands) out.push_back(mod);
  return out;
}

Module strip_projective(const Module& m, std::uint64_t seed) {
  if (m.dim() == 0 || (is_local_end(m) && !is_projective(m))) return m;
  std::vector<Module> keep;
  for (auto& p : decompose(m, seed).pieces)
    if (!is_projective(p.mod)) keep.push_back(p.mod);
  return direct_sum_module(m.alg, keep);
}

Module strip_injective(const Module& m, std::uint64_t seed) {
  if (m.dim() == 0 || (is_local_end(m) && !is_injective(m))) return m;
  std::vector<Module> keep;
  for (auto& p : decompose(m, seed).pieces)
    if (!is_injective(p.mod)) keep.push_back(p.mod);
  return direct_sum_module(m.alg, keep);
}

bool is_indecomposable(const Module& m, std::uint64_t seed) {
  if (m.dim() == 0) return false;
  if (is_local_end(m)) return true;
  return decompose(m, seed).pieces.size() == 1;
}

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<ModuleMap> iso(const Module& x, const Module& y, std::uint64_t seed) {
  require_same(x.alg, y.alg, "iso");
  if (x.vdim != y.vdim) return std::nullopt;
  if (x.dim() == 0) return zero_map(x, y);
  auto h = hom_basis(x, y);
  if (h.empty()) return std::nullopt;
  const Field f = x.field();
  for (auto& g : h)
    if (g.is_iso()) return g;
  if (tiny_space(f, h.size())) {
    std::optional<ModuleMap> found;
    enumerate_coeffs(f, h.size(), [&](const std::vector<Scalar>& cs) {
      auto g = linear_combination(h, cs, x, y);
      if (g.is_iso()) found = g;
      return found.has_value();
    });
    return found;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < kRetryBudget; ++t) {
    std::vector<Scalar> cs(h.size());
    for (auto& c : cs) c = random_scalar(f, rng);
    auto g = linear_combination(h, cs, x, y);
    if (g.is_iso()) return g;
  }
  auto endx = hom_basis(x, x);
  if (local_certificate(x, endx)) {
    // In a local ring the non-units form an ideal: x ≅ y iff some g∘f is a unit.
    auto back = hom_basis(y, x);
    for (auto& fm : h)
      for (auto& g : back)
        if (!is_nilpotent_map(compose(g, fm))) {
          if (fm.is_iso()) return fm;
          throw Inconclusive("split monomorphism between equal dimensions was not invertible");
        }
    return std::nullopt;
  }
  // Compare indecomposable decompositions.
  auto dx = decompose(x, seed), dy = decompose(y, seed);
  if (dx.pieces.size() != dy.pieces.size()) return std::nullopt;
  std::vector<bool> used(dy.pieces.size(), false);
  ModuleMap total = zero_map(x, y);
  for (auto& px : dx.pieces) {
    bool matched = false;
    for (std::size_t j = 0; j < dy.pieces.size() && !matched; ++j) {
      if (used[j]) continue;
      auto g = iso(px.mod, dy.pieces[j].mod, seed);
      if (!g) continue;
      used[j] = true;
      matched = true;
      total = add(total, compose(dy.pieces[j].incl, compose(*g, px.proj)));
    }
    if (!matched) return std::nullopt;
  }
  return total;
}

bool isomorphic(const Module& x, const Module& y, std::uint64_t seed) { return iso(x, y, seed).has_value(); }

int find_iso(const std::vector<Module>& list, const Module& x, std::uint64_t seed) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (same_algebra(list[i].alg, x.alg) && isomorphic(list[i], x, seed)) return static_cast<int>(i);
  return -1;
}

bool in_add(const std::vector<Module>& list, const Module& x, std::uint64_t seed) {
  if (x.dim() == 0) return true;
  std::vector<Module> reps;
  for (auto& m : list)
    for (auto& s : indecomposable_summands(m, seed))
      if (find_iso(reps, s, seed) < 0) reps.push_back(s);
  for (auto& s : indecomposable_summands(x, seed))
    if (find_iso(reps, s, seed) < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Approximations

Approx right_approximation(const std::vector<Module>& add_m, const Module& x) {
  const auto& a = x.alg;
  const Field f = x.field();
  struct Copy {
    int j;
    ModuleMap phi;
  };
  std::vector<Copy> copies;
  std::vector<int> target(add_m.size());
  for (std::size_t j = 0; j < add_m.size(); ++j) {
    auto h = hom_basis(add_m[j], x);
    target[j] = static_cast<int>(h.size());
    for (auto& g : h) copies.push_back({static_cast<int>(j), g});
  }
  // hom[j'][j] = basis of Hom(M_j', M_j)
  std::vector<std::vector<std::vector<ModuleMap>>> hom(add_m.size(), std::vector<std::vector<ModuleMap>>(add_m.size()));
  for (std::size_t jp = 0; jp < add_m.size(); ++jp)
    for (std::size_t j = 0; j < add_m.size(); ++j) hom[jp][j] = hom_basis(add_m[jp], add_m[j]);
  std::vector<bool> alive(copies.size(), true);
  auto still_approx = [&]() {
    for (std::size_t jp = 0; jp < add_m.size(); ++jp) {
      if (target[jp] == 0) continue;
      std::vector<std::vector<Scalar>> vs;
      for (std::size_t c = 0; c < copies.size(); ++c) {
        if (!alive[c]) continue;
        for (auto& h : hom[jp][copies[c].j]) vs.push_back(flatten(compose(copies[c].phi, h)));
      }
      if (static_cast<int>(rank_of(f, vs, flat_len(add_m[jp], x))) != target[jp]) return false;
    }
    return true;
  };
  for (std::size_t c = 0; c < copies.size(); ++c) {
    alive[c] = false;
    if (!still_approx()) alive[c] = true;
  }
  std::vector<Module> parts;
  std::vector<ModuleMap> maps;
  Approx out{Module{}, ModuleMap{}, std::vector<int>(add_m.size(), 0)};
  for (std::size_t c = 0; c < copies.size(); ++c)
    if (alive[c]) {
      parts.push_back(add_m[copies[c].j]);
      maps.push_back(copies[c].phi);
      ++out.mult[copies[c].j];
    }
  DirectSum ds = direct_sum(a, parts);
  ModuleMap g = zero_map(ds.sum, x);
  for (std::size_t k = 0; k < parts.size(); ++k) g = add(g, compose(maps[k], ds.proj[k]));
  out.obj = ds.sum;
  out.map = g;
  return out;
}

Approx left_approximation(const Module& x, const std::vector<Module>& add_m) {
  const auto& a = x.alg;
  const Field f = x.field();
  struct Copy {
    int j;
    ModuleMap psi;
  };
  std::vector<Copy> copies;
  std::vector<int> target(add_m.size());
  for (std::size_t j = 0; j < add_m.size(); ++j) {
    auto h = hom_basis(x, add_m[j]);
    target[j] = static_cast<int>(h.size());
    for (auto& g : h) copies.push_back({static_cast<int>(j), g});
  }
  std::vector<std::vector<std::vector<ModuleMap>>> hom(add_m.size(), std::vector<std::vector<ModuleMap>>(add_m.size()));
  for (std::size_t j = 0; j < add_m.size(); ++j)
    for (std::size_t jp = 0; jp < add_m.size(); ++jp) hom[j][jp] = hom_basis(add_m[j], add_m[jp]);
  std::vector<bool> alive(copies.size(), true);
  auto still_approx = [&]() {
    for (std::size_t jp = 0; jp < add_m.size(); ++jp) {
      if (target[jp] == 0) continue;
      std::vector<std::vector<Scalar>> vs;
      for (std::size_t c = 0; c < copies.size(); ++c) {
        if (!alive[c]) continue;
        for (auto& h : hom[copies[c].j][jp]) vs.push_back(flatten(compose(h, copies[c].psi)));
      }
      if (static_cast<int>(rank_of(f, vs, flat_len(x, add_m[jp]))) != target[jp]) return false;
    }
    return true;
  };
  for (std::size_t c = 0; c < copies.size(); ++c) {
    alive[c] = false;
    if (!still_approx()) alive[c] = true;
  }
  std::vector<Module> parts;
  std::vector<ModuleMap> maps;
  Approx out{Module{}, ModuleMap{}, std::vector<int>(add_m.size(), 0)};
  for (std::size_t c = 0; c < copies.size(); ++c)
    if (alive[c]) {
      parts.push_back(add_m[copies[c].j]);
      maps.push_back(copies[c].psi);
      ++out.mult[copies[c].j];
    }
  DirectSum ds = direct_sum(a, parts);
  ModuleMap g = zero_map(x, ds.sum);
  for (std::size_t k = 0; k < parts.size(); ++k) g = add(g, compose(ds.incl[k], maps[k]));
  out.obj = ds.sum;
  out.map = g;
  return out;
}

Bounded resolution_dim(const std::vector<Module>& c, const Module& x, int cap) {
  std::vector<Module> reps;
  for (auto& m : c)
    for (auto& s : indecomposable_summands(m))
      if (find_iso(reps, s) < 0) reps.push_back(s);
  Module cur = x;
  int n = -1;
  for (;;) {
    bool reached = cur.dim() == 0 || std::all_of(reps.begin(), reps.end(), [&](const Module& r) {
                     return hom_dim(r, cur) == 0;
                   });
    if (reached) return {std::max(n, 0), true};
    ++n;
    if (n > cap) return {cap + 1, false};
    Approx ap = right_approximation(reps, cur);
    cur = kernel(ap.map).mod;
  }
}

}  // namespace aus
