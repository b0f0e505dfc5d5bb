#include "aus/exactlin.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "aus/errors.hpp"

namespace aus {

namespace {

long mod_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return ((t % p) + p) % p;
}

long to_residue(const Scalar& x, long p) {
  mpz_class n = x.get_num() % p;
  mpz_class d = x.get_den() % p;
  long ln = n.get_si(), ld = d.get_si();
  ln = ((ln % p) + p) % p;
  return static_cast<long>((static_cast<__int128>(ln) * mod_inv(ld, p)) % p);
}

std::vector<int64_t> to_residues(const Matrix& m) {
  std::vector<int64_t> out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = m.at(i, j).get_num().get_si();
  return out;
}

Rref rref_fp(const Matrix& m) {
  const int64_t p = m.field().p;
  const std::size_t R = m.rows(), C = m.cols();
  auto a = to_residues(m);
  Rref out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t piv = row;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[row * C + j]);
    int64_t inv = mod_inv(a[row * C + c], p);
    for (std::size_t j = c; j < C; ++j) a[row * C + j] = a[row * C + j] * inv % p;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row) continue;
      int64_t f = a[i * C + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < C; ++j) {
        a[i * C + j] = (a[i * C + j] - f * a[row * C + j]) % p;
        if (a[i * C + j] < 0) a[i * C + j] += p;
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  out.R = Matrix(m.field(), R, C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) out.R.at(i, j) = a[i * C + j];
  return out;
}

Rref rref_q(const Matrix& m) {
  Rref out;
  out.R = m;
  Matrix& a = out.R;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t row = 0;
  Scalar f;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t piv = row;
    while (piv < R && sgn(a.at(piv, c)) == 0) ++piv;
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(a.at(piv, j), a.at(row, j));
    Scalar inv = 1 / a.at(row, c);
    for (std::size_t j = c; j < C; ++j)
      if (sgn(a.at(row, j)) != 0) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row || sgn(a.at(i, c)) == 0) continue;
      f = a.at(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (sgn(a.at(row, j)) != 0) a.at(i, j) -= f * a.at(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  return out;
}

Scalar eval_poly(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small;
  if (n == 0) return small;
  // Trial division is bounded; very large constants only contribute the divisors found.
  for (mpz_class d = 1; d * d <= n && d <= 2000000; ++d)
    if (n % d == 0) {
      small.push_back(d);
      small.push_back(n / d);
    }
  std::sort(small.begin(), small.end());
  small.erase(std::unique(small.begin(), small.end()), small.end());
  return small;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::Fp(long p) {
  if (!aus::is_prime(p) || p > (1L << 30)) throw std::invalid_argument("field modulus must be a prime below 2^30");
  return {FieldKind::PrimeField, p};
}

Scalar Field::reduce(const Scalar& x) const {
  if (kind == FieldKind::Rationals) {
    Scalar y = x;
    y.canonicalize();
    return y;
  }
  return Scalar(to_residue(x, p));
}

Scalar Field::inv(const Scalar& x) const {
  if (kind == FieldKind::Rationals) return 1 / x;
  return Scalar(mod_inv(to_residue(x, p), p));
}

std::string Field::str() const {
  return kind == FieldKind::Rationals ? "Q" : "F_" + std::to_string(p);
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), r_(rows), c_(cols), a_(rows * cols) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(rows[i][j]));
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool Matrix::operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m = *this;
  return m.add_scaled(o, 1);
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix m = *this;
  return m.add_scaled(o, -1);
}

Matrix& Matrix::add_scaled(const Matrix& o, const Scalar& s) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in addition");
  if (sgn(s) == 0) return *this;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (sgn(o.a_[k]) != 0) a_[k] += s * o.a_[k];
  if (f_.is_prime())
    for (auto& x : a_) x = f_.reduce(x);
  return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix m(f_, r_, o.c_);
  if (f_.is_prime()) {
    const int64_t p = f_.p;
    auto a = to_residues(*this), b = to_residues(o);
    std::vector<int64_t> c(r_ * o.c_, 0);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        int64_t x = a[i * c_ + k];
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.c_; ++j) c[i * o.c_ + j] = (c[i * o.c_ + j] + x * b[k * o.c_ + j]) % p;
      }
    for (std::size_t k = 0; k < c.size(); ++k) m.a_[k] = c[k];
    return m;
  }
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Scalar& x = at(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j)
        if (sgn(o.at(k, j)) != 0) m.at(i, j) += x * o.at(k, j);
    }
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(f_, r_, c_);
  return m.add_scaled(*this, s);
}

Matrix Matrix::transpose() const {
  Matrix m(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix m(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

Matrix Matrix::col(std::size_t j) const { return block(0, j, r_, 1); }

Matrix Matrix::cols_subset(const std::vector<std::size_t>& js) const {
  Matrix m(f_, r_, js.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < js.size(); ++k) m.at(i, k) = at(i, js[k]);
  return m;
}

Matrix Matrix::rows_subset(const std::vector<std::size_t>& is) const {
  Matrix m(f_, is.size(), c_);
  for (std::size_t k = 0; k < is.size(); ++k)
    for (std::size_t j = 0; j < c_; ++j) m.at(k, j) = at(is[k], j);
  return m;
}

std::vector<Scalar> Matrix::vec() const {
  std::vector<Scalar> v;
  v.reserve(a_.size());
  for (std::size_t j = 0; j < c_; ++j)
    for (std::size_t i = 0; i < r_; ++i) v.push_back(at(i, j));
  return v;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << at(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Rref rref(const Matrix& m) { return m.field().is_prime() ? rref_fp(m) : rref_q(m); }

std::size_t rank(const Matrix& m) { return m.empty() ? 0 : rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_piv(n, false);
  for (auto p : r.pivots) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix k(m.field(), n, free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    k.at(free[t], t) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) k.set(r.pivots[i], t, -r.R.at(i, free[t]));
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  Matrix aug(a.field(), a.rows(), n + k);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  Rref r = rref(aug);
  for (auto p : r.pivots)
    if (p >= n) return std::nullopt;
  Matrix x(a.field(), n, k);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < k; ++j) x.at(r.pivots[i], j) = r.R.at(i, n + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return m;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("kron: field mismatch");
  Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a.at(i, j)) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m.set(i * b.rows() + k, j * b.cols() + l, a.at(i, j) * b.at(k, l));
    }
  return m;
}

Matrix hstack(const std::vector<Matrix>& ms, Field f, std::size_t rows) {
  std::size_t c = 0;
  for (auto& m : ms) c += m.cols();
  Matrix out(f, rows, c);
  std::size_t off = 0;
  for (auto& m : ms) {
    out.set_block(0, off, m);
    off += m.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& ms, Field f, std::size_t cols) {
  std::size_t r = 0;
  for (auto& m : ms) r += m.rows();
  Matrix out(f, r, cols);
  std::size_t off = 0;
  for (auto& m : ms) {
    out.set_block(off, 0, m);
    off += m.rows();
  }
  return out;
}

Matrix column_basis(const Matrix& m) {
  if (m.empty()) return Matrix(m.field(), m.rows(), 0);
  return m.cols_subset(rref(m).pivots);
}

Matrix column_complement(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix cb = column_basis(m);
  Matrix aug = hstack({cb, Matrix::identity(m.field(), n)}, m.field(), n);
  std::vector<std::size_t> extra;
  for (auto p : rref(aug).pivots)
    if (p >= cb.cols()) extra.push_back(p - cb.cols());
  return Matrix::identity(m.field(), n).cols_subset(extra);
}

Scalar trace(const Matrix& m) {
  Scalar t = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m.at(i, i);
  return m.field().reduce(t);
}

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  const Field f = m.field();
  Matrix a = m;
  const std::size_t n = m.rows();
  Scalar d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(a.at(piv, c)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      d = -d;
    }
    d = f.reduce(d * a.at(c, c));
    Scalar inv = f.inv(a.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a.at(i, c)) == 0) continue;
      Scalar g = f.reduce(a.at(i, c) * inv);
      for (std::size_t j = c; j < n; ++j) a.set(i, j, a.at(i, j) - g * a.at(c, j));
    }
  }
  return f.reduce(d);
}

std::vector<Scalar> min_poly(const Matrix& m) {
  const Field f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return {Scalar(1)};
  std::vector<Matrix> powers{Matrix::identity(f, n)};
  while (true) {
    const std::size_t k = powers.size();
    Matrix cols(f, n * n, k);
    for (std::size_t t = 0; t < k; ++t) {
      auto v = powers[t].vec();
      for (std::size_t i = 0; i < v.size(); ++i) cols.at(i, t) = v[i];
    }
    Matrix next = powers.back() * m;
    auto nv = next.vec();
    Matrix b(f, n * n, 1);
    for (std::size_t i = 0; i < nv.size(); ++i) b.at(i, 0) = nv[i];
    if (auto x = solve(cols, b)) {
      std::vector<Scalar> c(k + 1);
      for (std::size_t t = 0; t < k; ++t) c[t] = f.reduce(-x->at(t, 0));
      c[k] = 1;
      return c;
    }
    powers.push_back(std::move(next));
  }
}

std::vector<Scalar> poly_roots(Field f, const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> c = coeffs;
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  std::vector<Scalar> roots;
  if (c.size() <= 1) return roots;
  if (f.is_prime()) {
    if (f.p > 200000) return roots;
    for (long x = 0; x < f.p; ++x)
      if (sgn(f.reduce(eval_poly(c, Scalar(x)))) == 0) roots.push_back(Scalar(x));
    return roots;
  }
  std::size_t low = 0;
  while (sgn(c[low]) == 0) ++low;
  if (low > 0) roots.push_back(0);
  std::vector<Scalar> d(c.begin() + low, c.end());
  if (d.size() <= 1) return roots;
  mpz_class l = 1;
  for (auto& x : d) l = lcm(l, x.get_den());
  std::vector<mpz_class> z;
  for (auto& x : d) z.push_back(mpz_class(x * l));
  std::set<Scalar> found;
  for (auto& pn : divisors(z.front()))
    for (auto& qd : divisors(z.back()))
      for (int s : {1, -1}) {
        Scalar cand(pn * s, qd);
        cand.canonicalize();
        if (found.count(cand)) continue;
        if (sgn(eval_poly(d, cand)) == 0) found.insert(cand);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

bool is_nilpotent(const Matrix& m) {
  Matrix p = m;
  for (std::size_t k = 1; k < std::max<std::size_t>(1, m.rows()); k *= 2) p = p * p;
  return p.is_zero();
}

}  // namespace aus
