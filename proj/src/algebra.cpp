#include "aus/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "aus/errors.hpp"
#include "aus/poly.hpp"

namespace aus {

const SparseVec Algebra::kZero{};

SparseVec dense_to_sparse(const std::vector<Scalar>& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (sgn(v[i]) != 0) s.push_back({i, v[i]});
  return s;
}

std::vector<Scalar> sparse_to_dense(const SparseVec& v, int dim) {
  std::vector<Scalar> d(dim);
  for (auto& t : v) d[t.idx] += t.c;
  return d;
}

namespace {

SparseVec accumulate(Field f, const std::map<int, Scalar>& acc) {
  SparseVec out;
  for (auto& [k, v] : acc) {
    Scalar r = f.reduce(v);
    if (sgn(r) != 0) out.push_back({k, r});
  }
  return out;
}

}  // namespace

Algebra::Algebra(Data d) : d_(std::move(d)) {}

AlgebraPtr Algebra::make(Data d, bool check) {
  auto a = std::shared_ptr<Algebra>(new Algebra(std::move(d)));
  a->finish(check);
  return a;
}

void Algebra::finish(bool check) {
  const int n = dim(), r = nverts();
  if (static_cast<int>(d_.src.size()) != n || static_cast<int>(d_.tgt.size()) != n)
    throw std::invalid_argument("algebra: src/tgt size mismatch");
  if (d_.vertex_labels.size() != d_.idem.size()) throw std::invalid_argument("algebra: vertex label count");
  is_idem_.assign(n, false);
  for (int v = 0; v < r; ++v) {
    int e = d_.idem[v];
    if (d_.src[e] != v || d_.tgt[e] != v) throw std::invalid_argument("algebra: idempotent not in its corner");
    is_idem_[e] = true;
  }
  blocks_.assign(static_cast<std::size_t>(r) * r, {});
  for (int b = 0; b < n; ++b) blocks_[d_.tgt[b] * r + d_.src[b]].push_back(b);
  if (d_.mult.size() != static_cast<std::size_t>(n)) d_.mult.resize(n);
  for (auto& row : d_.mult) row.resize(n);

  // Peirce consistency and radical shape.
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      const auto& p = d_.mult[b][c];
      if (d_.src[b] != d_.tgt[c]) {
        if (!p.empty()) throw std::invalid_argument("algebra: product of non-composable basis elements");
        continue;
      }
      for (auto& t : p) {
        if (d_.tgt[t.idx] != d_.tgt[b] || d_.src[t.idx] != d_.src[c])
          throw std::invalid_argument("algebra: product leaves its Peirce block");
        if (is_idem_[t.idx] && !(is_idem_[b] && is_idem_[c]))
          throw std::invalid_argument("algebra: non-idempotent basis elements must span an ideal");
      }
    }
  if (check) {
    for (int b = 0; b < n; ++b) {
      int et = d_.idem[d_.tgt[b]], es = d_.idem[d_.src[b]];
      SparseVec unit{{b, Scalar(1)}};
      if (!(mul(et, b).size() == 1 && mul(et, b)[0].idx == b && mul(et, b)[0].c == 1) ||
          !(mul(b, es).size() == 1 && mul(b, es)[0].idx == b && mul(b, es)[0].c == 1))
        throw std::invalid_argument("algebra: unit law fails at " + d_.labels[b]);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (d_.src[a] != d_.tgt[b]) continue;
        for (int c = 0; c < n; ++c) {
          if (d_.src[b] != d_.tgt[c]) continue;
          SparseVec l = mul(mul(a, b), SparseVec{{c, Scalar(1)}});
          SparseVec rr = mul(SparseVec{{a, Scalar(1)}}, mul(b, c));
          auto dl = sparse_to_dense(l, n), dr = sparse_to_dense(rr, n);
          if (dl != dr) throw std::invalid_argument("algebra: associativity fails");
        }
      }
  }

  // Radical generators: complement of rad^2 in rad, per Peirce block.
  arrows_.clear();
  for (int t = 0; t < r; ++t)
    for (int s = 0; s < r; ++s) {
      std::vector<int> cols;
      for (int b : block(t, s))
        if (!is_idem_[b]) cols.push_back(b);
      if (cols.empty()) continue;
      std::map<int, int> pos;
      for (int i = 0; i < static_cast<int>(cols.size()); ++i) pos[cols[i]] = i;
      std::vector<SparseVec> prods;
      for (int u = 0; u < r; ++u)
        for (int x : block(t, u)) {
          if (is_idem_[x]) continue;
          for (int y : block(u, s)) {
            if (is_idem_[y]) continue;
            if (!d_.mult[x][y].empty()) prods.push_back(d_.mult[x][y]);
          }
        }
      Matrix m(d_.field, prods.size(), cols.size());
      for (std::size_t i = 0; i < prods.size(); ++i)
        for (auto& tm : prods[i]) m.at(i, pos.at(tm.idx)) = tm.c;
      std::vector<bool> piv(cols.size(), false);
      if (!prods.empty())
        for (auto p : rref(m).pivots) piv[p] = true;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (!piv[j]) arrows_.push_back({s, t, SparseVec{{cols[j], Scalar(1)}}});
    }

  std::ostringstream os;
  os << d_.field.str() << '|' << n << '|' << r;
  for (int b = 0; b < n; ++b) os << ',' << d_.src[b] << ':' << d_.tgt[b];
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      for (auto& t : d_.mult[b][c]) os << ';' << b << ',' << c << ',' << t.idx << '=' << t.c.get_str();
  fingerprint_ = std::hash<std::string>{}(os.str());
}

const SparseVec& Algebra::mul(int b, int c) const {
  if (d_.src[b] != d_.tgt[c]) return kZero;
  return d_.mult[b][c];
}

SparseVec Algebra::mul(const SparseVec& x, const SparseVec& y) const {
  std::map<int, Scalar> acc;
  for (auto& s : x)
    for (auto& t : y)
      for (auto& p : mul(s.idx, t.idx)) acc[p.idx] += s.c * t.c * p.c;
  return accumulate(d_.field, acc);
}

bool Algebra::same_as(const Algebra& o) const {
  if (this == &o) return true;
  if (fingerprint_ != o.fingerprint_ || dim() != o.dim() || nverts() != o.nverts()) return false;
  if (!(d_.field == o.d_.field) || d_.src != o.d_.src || d_.tgt != o.d_.tgt || d_.idem != o.d_.idem) return false;
  for (int b = 0; b < dim(); ++b)
    for (int c = 0; c < dim(); ++c)
      if (sparse_to_dense(d_.mult[b][c], dim()) != sparse_to_dense(o.d_.mult[b][c], dim())) return false;
  return true;
}

AlgebraPtr Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(op_mu_);
  if (op_strong_) return op_strong_;
  if (auto w = op_weak_.lock()) return w;
  Data o;
  o.field = d_.field;
  o.vertex_labels = d_.vertex_labels;
  o.labels = d_.labels;
  o.src = d_.tgt;
  o.tgt = d_.src;
  o.idem = d_.idem;
  o.origin = Origin::Opposite;
  const int n = dim();
  o.mult.assign(n, std::vector<SparseVec>(n));
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) o.mult[b][c] = d_.mult[c][b];
  for (auto& m : d_.faithful) o.faithful.push_back(m.transpose());
  auto op = std::shared_ptr<Algebra>(new Algebra(std::move(o)));
  op->finish(false);
  op->op_weak_ = shared_from_this();
  op_strong_ = op;
  return op;
}

AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

// ---------------------------------------------------------------------------
// Path algebras

namespace {

struct PathIndex {
  std::vector<std::vector<int>> paths;  // arrow indices in traversal order
  std::vector<int> src, tgt;            // vertex indices
  std::map<std::vector<int>, int> col;  // path (with vertex tag for trivial) -> column
};

// Key for a path: trivial paths are {-1-v}.
std::vector<int> trivial_key(int v) { return {-1 - v}; }

using SVec = std::map<int, Scalar>;

struct Echelon {
  Field f;
  std::map<int, SVec> rows;  // pivot column -> row normalised to 1 at pivot

  SVec reduce(SVec v) const {
    for (auto it = v.begin(); it != v.end();) {
      auto r = rows.find(it->first);
      if (r == rows.end() || sgn(it->second) == 0) {
        ++it;
        continue;
      }
      Scalar c = it->second;
      int key = it->first;
      for (auto& [k, x] : r->second) {
        Scalar nv = f.reduce(v[k] - c * x);
        v[k] = nv;
      }
      it = v.upper_bound(key);
    }
    for (auto it = v.begin(); it != v.end();)
      if (sgn(it->second) == 0)
        it = v.erase(it);
      else
        ++it;
    return v;
  }

  bool add(SVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int p = v.begin()->first;
    Scalar inv = f.inv(v.begin()->second);
    for (auto& [k, x] : v) x = f.reduce(x * inv);
    rows[p] = std::move(v);
    return true;
  }

  void fully_reduce() {
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      SVec& row = it->second;
      int p = it->first;
      SVec rest = row;
      rest.erase(p);
      SVec red = reduce(rest);
      red[p] = 1;
      row = red;
    }
  }
};

}  // namespace

AlgebraPtr build_path_algebra(const Quiver& q, const std::vector<PathExpr>& rels, Field f, int length_cap) {
  const int nv = static_cast<int>(q.vertices.size());
  std::map<std::string, int> vid, aid;
  for (int i = 0; i < nv; ++i)
    if (!vid.emplace(q.vertices[i], i).second) throw BadRelation("duplicate vertex label " + q.vertices[i]);
  const int na = static_cast<int>(q.arrows.size());
  std::vector<int> as(na), at(na);
  for (int i = 0; i < na; ++i) {
    auto& a = q.arrows[i];
    if (!aid.emplace(a.name, i).second) throw BadRelation("duplicate arrow name " + a.name);
    if (!vid.count(a.source) || !vid.count(a.target)) throw BadRelation("arrow " + a.name + " has undeclared endpoint");
    as[i] = vid[a.source];
    at[i] = vid[a.target];
  }

  struct RelTerm {
    Scalar c;
    std::vector<int> path;
  };
  std::vector<std::vector<RelTerm>> rterms;
  for (auto& rel : rels) {
    std::vector<RelTerm> terms;
    int s = -1, t = -1;
    for (auto& term : rel.terms) {
      if (term.path.size() < 2) throw BadRelation("relation term of length < 2");
      std::vector<int> p;
      for (auto& name : term.path) {
        if (!aid.count(name)) throw BadRelation("unknown arrow " + name);
        p.push_back(aid[name]);
      }
      for (std::size_t k = 0; k + 1 < p.size(); ++k)
        if (at[p[k]] != as[p[k + 1]]) throw BadRelation("relation path is not composable");
      int ps = as[p.front()], pt = at[p.back()];
      if (s == -1) {
        s = ps;
        t = pt;
      } else if (s != ps || t != pt) {
        throw BadRelation("relation mixes sources or targets");
      }
      terms.push_back({f.reduce(term.c), p});
    }
    rterms.push_back(std::move(terms));
  }

  for (int N = 2; N <= length_cap; ++N) {
    // Enumerate paths of length < N, longest first.
    std::vector<std::vector<int>> byLen(N);
    std::vector<std::vector<std::vector<int>>> layer(N);
    for (int l = 1; l < N; ++l) {
      if (l == 1) {
        for (int a = 0; a < na; ++a) layer[1].push_back({a});
      } else {
        for (auto& p : layer[l - 1])
          for (int a = 0; a < na; ++a)
            if (at[p.back()] == as[a]) {
              auto np = p;
              np.push_back(a);
              layer[l].push_back(np);
            }
      }
    }
    PathIndex pi;
    for (int l = N - 1; l >= 1; --l)
      for (auto& p : layer[l]) {
        pi.col[p] = static_cast<int>(pi.paths.size());
        pi.paths.push_back(p);
        pi.src.push_back(as[p.front()]);
        pi.tgt.push_back(at[p.back()]);
      }
    for (int v = 0; v < nv; ++v) {
      pi.col[trivial_key(v)] = static_cast<int>(pi.paths.size());
      pi.paths.push_back({});
      pi.src.push_back(v);
      pi.tgt.push_back(v);
    }
    auto extend = [&](const SVec& v, int arrow, bool right) {
      SVec out;
      for (auto& [c, x] : v) {
        const auto& p = pi.paths[c];
        if (p.empty()) continue;  // relations never involve trivial paths
        if (right) {
          if (at[p.back()] != as[arrow]) continue;
        } else if (at[arrow] != as[p.front()]) {
          continue;
        }
        if (static_cast<int>(p.size()) + 1 >= N) continue;
        std::vector<int> np;
        if (right) {
          np = p;
          np.push_back(arrow);
        } else {
          np.push_back(arrow);
          np.insert(np.end(), p.begin(), p.end());
        }
        out[pi.col.at(np)] += x;
      }
      return out;
    };
    Echelon ech{f, {}};
    std::vector<SVec> queue;
    for (auto& terms : rterms) {
      SVec v;
      for (auto& t : terms)
        if (static_cast<int>(t.path.size()) < N) v[pi.col.at(t.path)] += t.c;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      SVec v = std::move(queue.back());
      queue.pop_back();
      SVec red = ech.reduce(v);
      if (red.empty()) continue;
      ech.add(red);
      for (int a = 0; a < na; ++a) {
        queue.push_back(extend(red, a, true));
        queue.push_back(extend(red, a, false));
      }
    }
    bool layer_in = true;
    for (auto& p : layer[N - 1]) {
      SVec u{{pi.col.at(p), Scalar(1)}};
      if (!ech.reduce(u).empty()) {
        layer_in = false;
        break;
      }
    }
    if (!layer_in) continue;

    ech.fully_reduce();
    Algebra::Data d;
    d.field = f;
    d.origin = Origin::PathAlgebra;
    d.vertex_labels = q.vertices;
    std::vector<int> basis_cols;
    std::map<int, int> col_to_basis;
    // Basis order: idempotents, then arrows, then longer paths.
    std::vector<int> order;
    for (int v = 0; v < nv; ++v) order.push_back(pi.col.at(trivial_key(v)));
    for (int l = 1; l < N; ++l)
      for (auto& p : layer[l]) order.push_back(pi.col.at(p));
    for (int c : order) {
      if (ech.rows.count(c)) continue;
      col_to_basis[c] = static_cast<int>(basis_cols.size());
      basis_cols.push_back(c);
    }
    for (int c : basis_cols) {
      const auto& p = pi.paths[c];
      std::string lab;
      if (p.empty()) {
        lab = "e_" + q.vertices[pi.src[c]];
      } else {
        for (std::size_t k = 0; k < p.size(); ++k) lab += (k ? "." : "") + q.arrows[p[k]].name;
      }
      d.labels.push_back(lab);
      d.src.push_back(pi.src[c]);
      d.tgt.push_back(pi.tgt[c]);
    }
    d.idem.resize(nv);
    for (int v = 0; v < nv; ++v) d.idem[v] = col_to_basis.at(pi.col.at(trivial_key(v)));
    const int n = static_cast<int>(basis_cols.size());
    d.mult.assign(n, std::vector<SparseVec>(n));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (d.src[b] != d.tgt[c]) continue;
        const auto& pb = pi.paths[basis_cols[b]];
        const auto& pc = pi.paths[basis_cols[c]];
        // b*c is "c, then b".
        std::vector<int> np = pc;
        np.insert(np.end(), pb.begin(), pb.end());
        SVec v;
        if (np.empty()) {
          v[pi.col.at(trivial_key(d.src[c]))] = 1;
        } else if (static_cast<int>(np.size()) < N) {
          v[pi.col.at(np)] = 1;
        }
        v = ech.reduce(v);
        SparseVec out;
        for (auto& [k, x] : v) out.push_back({col_to_basis.at(k), x});
        std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.idx < y.idx; });
        d.mult[b][c] = out;
      }
    return Algebra::make(std::move(d), true);
  }
  throw NotAdmissible("some path of length " + std::to_string(length_cap - 1) +
                      " survives modulo the relations");
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Matrix> regular_rep(const AlgebraPtr& a) {
  const int n = a->dim();
  std::vector<Matrix> reps;
  for (int b = 0; b < n; ++b) {
    Matrix m(a->field(), n, n);
    for (int c = 0; c < n; ++c)
      for (auto& t : a->mul(b, c)) m.at(t.idx, c) = t.c;
    reps.push_back(std::move(m));
  }
  return reps;
}

}  // namespace

Matrix trace_radical(const AlgebraPtr& a) {
  const int n = a->dim();
  std::vector<Matrix> rep = a->data().faithful.empty() ? regular_rep(a) : a->data().faithful;
  std::size_t rep_dim = rep.empty() ? 0 : rep[0].rows();
  if (a->field().is_prime() && a->field().p <= static_cast<long>(std::max<std::size_t>(rep_dim, 1)))
    throw FieldTooSmall("trace form radical needs p > " + std::to_string(rep_dim));
  Matrix g(a->field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar t = trace(rep[i] * rep[j]);
      g.set(i, j, t);
      g.set(j, i, t);
    }
  return kernel_basis(g);
}

Matrix radical_basis(const AlgebraPtr& a) {
  if (a->origin() != Origin::PathAlgebra) return trace_radical(a);
  std::vector<int> nonidem;
  for (int b = 0; b < a->dim(); ++b)
    if (!a->is_idem(b)) nonidem.push_back(b);
  Matrix m(a->field(), a->dim(), nonidem.size());
  for (std::size_t j = 0; j < nonidem.size(); ++j) m.at(nonidem[j], j) = 1;
  return m;
}

std::vector<std::vector<int>> cartan_matrix(const AlgebraPtr& a) {
  const int r = a->nverts();
  std::vector<std::vector<int>> c(r, std::vector<int>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c[i][j] = static_cast<int>(a->block(j, i).size());
  return c;
}

AlgebraPtr quotient_by_idempotent_ideal(const AlgebraPtr& a, const std::vector<int>& verts) {
  const int r = a->nverts(), n = a->dim();
  std::vector<bool> kill(r, false);
  for (int v : verts) {
    if (v < 0 || v >= r) throw std::invalid_argument("quotient: vertex out of range");
    kill[v] = true;
  }
  const Field f = a->field();
  // Ideal vectors per block.
  std::map<std::pair<int, int>, Echelon> ideal;
  for (int t = 0; t < r; ++t)
    for (int s = 0; s < r; ++s) ideal.emplace(std::make_pair(t, s), Echelon{f, {}});
  for (int v = 0; v < r; ++v) {
    if (!kill[v]) continue;
    for (int b = 0; b < n; ++b) {
      if (a->src(b) != v) continue;
      for (int c = 0; c < n; ++c) {
        if (a->tgt(c) != v) continue;
        const auto& p = a->mul(b, c);
        if (p.empty()) continue;
        SVec sv;
        for (auto& t : p) sv[t.idx] = t.c;
        ideal.at({a->tgt(b), a->src(c)}).add(sv);
      }
    }
  }
  for (auto& [k, e] : ideal) e.fully_reduce();
  std::vector<int> newv(r, -1);
  Algebra::Data d;
  d.field = f;
  d.origin = Origin::Quotient;
  for (int v = 0; v < r; ++v)
    if (!kill[v]) {
      newv[v] = static_cast<int>(d.vertex_labels.size());
      d.vertex_labels.push_back(a->vertex_label(v));
    }
  std::vector<int> newb(n, -1);
  std::vector<int> oldb;
  for (int b = 0; b < n; ++b) {
    if (kill[a->src(b)] || kill[a->tgt(b)]) continue;
    if (ideal.at({a->tgt(b), a->src(b)}).rows.count(b)) continue;
    newb[b] = static_cast<int>(oldb.size());
    oldb.push_back(b);
    d.labels.push_back(a->label(b));
    d.src.push_back(newv[a->src(b)]);
    d.tgt.push_back(newv[a->tgt(b)]);
  }
  d.idem.assign(d.vertex_labels.size(), -1);
  for (int v = 0; v < r; ++v)
    if (!kill[v]) d.idem[newv[v]] = newb[a->idem(v)];
  const int m = static_cast<int>(oldb.size());
  d.mult.assign(m, std::vector<SparseVec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int b = oldb[i], c = oldb[j];
      const auto& p = a->mul(b, c);
      if (p.empty()) continue;
      SVec sv;
      for (auto& t : p) sv[t.idx] = t.c;
      sv = ideal.at({a->tgt(b), a->src(c)}).reduce(sv);
      SparseVec out;
      for (auto& [k, x] : sv) out.push_back({newb.at(k), x});
      d.mult[i][j] = out;
    }
  return Algebra::make(std::move(d), false);
}

// ---------------------------------------------------------------------------
// Raw structure constants

namespace {

struct Dense {
  Field f;
  int n;
  const std::vector<std::vector<std::vector<Scalar>>>* c;

  std::vector<Scalar> mul(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(n);
    for (int i = 0; i < n; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (sgn(y[j]) == 0) continue;
        const auto& cij = (*c)[i][j];
        for (int k = 0; k < n; ++k)
          if (sgn(cij[k]) != 0) out[k] += x[i] * y[j] * cij[k];
      }
    }
    for (auto& v : out) v = f.reduce(v);
    return out;
  }
  Matrix left(const std::vector<Scalar>& x) const {
    Matrix m(f, n, n);
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> e(n);
      e[j] = 1;
      auto p = mul(x, e);
      for (int k = 0; k < n; ++k) m.at(k, j) = p[k];
    }
    return m;
  }
};

Matrix span_cols(Field f, int n, const std::vector<std::vector<Scalar>>& vs) {
  Matrix m(f, n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = vs[j][i];
  return m;
}

std::vector<Scalar> col_vec(const Matrix& m, std::size_t j) {
  std::vector<Scalar> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

}  // namespace

AlgebraPtr algebra_from_constants(Field f, const std::vector<std::vector<std::vector<Scalar>>>& c,
                                  std::uint64_t seed) {
  const int n = static_cast<int>(c.size());
  Dense A{f, n, &c};
  // Unit: solve x*b_j = b_j for all j.
  Matrix sys(f, n * n, n);
  Matrix rhs(f, n * n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        sys.set(j * n + k, i, c[i][j][k]);
        if (j == k) rhs.at(j * n + k, 0) = 1;
      }
  auto u = solve(sys, rhs);
  if (!u) throw std::invalid_argument("structure constants have no unit");
  std::vector<Scalar> unit = col_vec(*u, 0);

  // Radical by the trace form of the regular representation.
  if (f.is_prime() && f.p <= n) throw FieldTooSmall("raw algebra needs p > dim");
  std::vector<Matrix> L;
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> e(n);
    e[i] = 1;
    L.push_back(A.left(e));
  }
  Matrix g(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.set(i, j, trace(L[i] * L[j]));
  Matrix rad = kernel_basis(g);

  auto corner = [&](const std::vector<Scalar>& e) {
    std::vector<std::vector<Scalar>> vs;
    for (int i = 0; i < n; ++i) {
      std::vector<Scalar> b(n);
      b[i] = 1;
      vs.push_back(A.mul(A.mul(e, b), e));
    }
    return column_basis(span_cols(f, n, vs));
  };
  auto corner_rad_dim = [&](const std::vector<Scalar>& e) {
    std::vector<std::vector<Scalar>> vs;
    for (std::size_t j = 0; j < rad.cols(); ++j) vs.push_back(A.mul(A.mul(e, col_vec(rad, j)), e));
    return rank(span_cols(f, n, vs));
  };

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Scalar>> done;
  std::vector<std::vector<Scalar>> todo{unit};
  while (!todo.empty()) {
    auto e = todo.back();
    todo.pop_back();
    Matrix cb = corner(e);
    std::size_t cd = cb.cols();
    if (cd - corner_rad_dim(e) == 1) {
      done.push_back(e);
      continue;
    }
    bool split = false;
    for (int attempt = 0; attempt < 64 && !split; ++attempt) {
      std::vector<Scalar> x(n);
      for (std::size_t j = 0; j < cd; ++j) {
        long coef = attempt < static_cast<int>(cd) ? (j == static_cast<std::size_t>(attempt) ? 1 : 0)
                                                    : static_cast<long>(rng() % 7) - 3;
        for (int i = 0; i < n; ++i) x[i] += coef * cb.at(i, j);
      }
      for (auto& v : x) v = f.reduce(v);
      // Left multiplication by x on the corner, in corner coordinates.
      Matrix lx(f, cd, cd);
      for (std::size_t j = 0; j < cd; ++j) {
        auto img = A.mul(x, col_vec(cb, j));
        auto coords = solve(cb, span_cols(f, n, {img}));
        for (std::size_t i = 0; i < cd; ++i) lx.at(i, j) = coords->at(i, 0);
      }
      auto mp = min_poly(lx);
      auto idem_poly = crt_idempotent(f, mp);
      if (!idem_poly) continue;
      // Evaluate the polynomial at x inside the corner (constant term times e).
      std::vector<Scalar> val(n), pw = e;
      for (std::size_t k = 0; k < idem_poly->size(); ++k) {
        for (int i = 0; i < n; ++i) val[i] += (*idem_poly)[k] * pw[i];
        pw = A.mul(x, pw);
      }
      for (auto& v : val) v = f.reduce(v);
      std::vector<Scalar> rest(n);
      for (int i = 0; i < n; ++i) rest[i] = f.reduce(e[i] - val[i]);
      todo.push_back(val);
      todo.push_back(rest);
      split = true;
    }
    if (!split) throw Inconclusive("idempotent search exhausted its retry budget on a corner of dimension " +
                                   std::to_string(cd));
  }

  // Peirce basis: e_i, then bases of e_t rad e_s.
  const int r = static_cast<int>(done.size());
  std::vector<std::vector<Scalar>> basis;
  Algebra::Data d;
  d.field = f;
  d.origin = Origin::Raw;
  for (int v = 0; v < r; ++v) d.vertex_labels.push_back(std::to_string(v + 1));
  d.idem.resize(r);
  for (int v = 0; v < r; ++v) {
    d.idem[v] = static_cast<int>(basis.size());
    basis.push_back(done[v]);
    d.labels.push_back("e_" + std::to_string(v + 1));
    d.src.push_back(v);
    d.tgt.push_back(v);
  }
  for (int t = 0; t < r; ++t)
    for (int s = 0; s < r; ++s) {
      std::vector<std::vector<Scalar>> vs, full;
      for (std::size_t j = 0; j < rad.cols(); ++j) vs.push_back(A.mul(A.mul(done[t], col_vec(rad, j)), done[s]));
      for (int i = 0; i < n; ++i) {
        std::vector<Scalar> b(n);
        b[i] = 1;
        full.push_back(A.mul(A.mul(done[t], b), done[s]));
      }
      Matrix rb = column_basis(span_cols(f, n, vs));
      std::size_t fd = rank(span_cols(f, n, full));
      if (fd != rb.cols() + (t == s ? 1 : 0))
        throw PreconditionFailed("algebra is not basic and split; Peirce block (" + std::to_string(t + 1) + "," +
                                 std::to_string(s + 1) + ") leaves the radical");
      for (std::size_t j = 0; j < rb.cols(); ++j) {
        basis.push_back(col_vec(rb, j));
        d.labels.push_back("r" + std::to_string(basis.size()));
        d.src.push_back(s);
        d.tgt.push_back(t);
      }
    }
  Matrix bm = span_cols(f, n, basis);
  if (static_cast<int>(basis.size()) != n || rank(bm) != static_cast<std::size_t>(n))
    throw PreconditionFailed("Peirce decomposition does not span the algebra");
  d.mult.assign(n, std::vector<SparseVec>(n));
  for (int b = 0; b < n; ++b)
    for (int cc = 0; cc < n; ++cc) {
      if (d.src[b] != d.tgt[cc]) continue;
      auto p = A.mul(basis[b], basis[cc]);
      auto coords = solve(bm, span_cols(f, n, {p}));
      d.mult[b][cc] = dense_to_sparse(col_vec(*coords, 0));
    }
  return Algebra::make(std::move(d), true);
}

std::vector<std::vector<Scalar>> primitive_idempotents(const AlgebraPtr& a, std::uint64_t) {
  // Peirce algebras carry their complete set of primitive orthogonal idempotents.
  std::vector<std::vector<Scalar>> out;
  for (int v = 0; v < a->nverts(); ++v) {
    std::vector<Scalar> e(a->dim());
    e[a->idem(v)] = 1;
    out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

AlgebraPtr linear_A(int n, Field f) {
  Quiver q;
  for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i)
    q.arrows.push_back({n == 2 ? "a" : "a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  return build_path_algebra(q, {}, f);
}

AlgebraPtr dual_numbers(Field f) {
  Quiver q{{"1"}, {{"x", "1", "1"}}};
  PathExpr r{{{Scalar(1), {"x", "x"}}}};
  return build_path_algebra(q, {r}, f);
}

AlgebraPtr preprojective_A(int n, Field f) {
  Quiver q;
  for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
  auto an = [&](int i) { return n == 2 ? std::string("a") : "a" + std::to_string(i); };
  auto bn = [&](int i) { return n == 2 ? std::string("b") : "b" + std::to_string(i); };
  for (int i = 1; i < n; ++i) q.arrows.push_back({an(i), std::to_string(i), std::to_string(i + 1)});
  for (int i = 1; i < n; ++i) q.arrows.push_back({bn(i), std::to_string(i + 1), std::to_string(i)});
  std::vector<PathExpr> rels;
  if (n >= 2) {
    rels.push_back({{{Scalar(1), {an(1), bn(1)}}}});
    for (int i = 1; i <= n - 2; ++i)
      rels.push_back({{{Scalar(1), {an(i + 1), bn(i + 1)}}, {Scalar(-1), {bn(i), an(i)}}}});
    rels.push_back({{{Scalar(1), {bn(n - 1), an(n - 1)}}}});
  }
  return build_path_algebra(q, rels, f);
}

AlgebraPtr semisimple(int n, Field f) {
  Quiver q;
  for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
  return build_path_algebra(q, {}, f);
}

}  // namespace aus
