#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace aus {

using Scalar = mpq_class;

enum class FieldKind { Rationals, PrimeField };

struct Field {
  FieldKind kind = FieldKind::Rationals;
  long p = 0;

  static Field Q() { return {}; }
  static Field Fp(long p);

  bool is_prime() const { return kind == FieldKind::PrimeField; }
  // Canonical representative: reduced fraction over Q, residue in [0,p) over F_p.
  Scalar reduce(const Scalar& x) const;
  Scalar inv(const Scalar& x) const;
  std::string str() const;
  bool operator==(const Field&) const = default;
};

bool is_prime(long n);

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<std::vector<long>>& rows);

  const Field& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  // Stores x reduced into the field.
  void set(std::size_t i, std::size_t j, const Scalar& x) { at(i, j) = f_.reduce(x); }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix& add_scaled(const Matrix& o, const Scalar& s);
  Matrix transpose() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix col(std::size_t j) const;
  Matrix cols_subset(const std::vector<std::size_t>& js) const;
  Matrix rows_subset(const std::vector<std::size_t>& is) const;

  // Column-major flattening; used to view maps as vectors.
  std::vector<Scalar> vec() const;
  std::string str() const;

 private:
  Field f_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

struct Rref {
  Matrix R;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix kernel_basis(const Matrix& m);
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& ms, Field f, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& ms, Field f, std::size_t cols);
// Independent columns of m (those at rref pivots), in order.
Matrix column_basis(const Matrix& m);
// Columns of the identity completing column_basis(m) to a basis of the ambient space.
Matrix column_complement(const Matrix& m);
Scalar trace(const Matrix& m);
Scalar det(const Matrix& m);

// Minimal polynomial of a square matrix, monic, coefficients low to high.
std::vector<Scalar> min_poly(const Matrix& m);
// Distinct roots of a polynomial in the field (rational roots over Q).
std::vector<Scalar> poly_roots(Field f, const std::vector<Scalar>& coeffs);
bool is_nilpotent(const Matrix& m);

}  // namespace aus
