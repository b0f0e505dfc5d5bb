#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "aus/exactlin.hpp"

namespace aus {

// Sparse coefficient vector over the basis of an algebra.
struct Term {
  int idx;
  Scalar c;
};
using SparseVec = std::vector<Term>;

struct Quiver {
  std::vector<std::string> vertices;
  struct Arrow {
    std::string name, source, target;
  };
  std::vector<Arrow> arrows;
};

// Linear combination of paths; a path lists arrow names in traversal order,
// so {"a","b"} is "a then b". An empty path denotes the vertex idempotent at `vertex`.
struct PathExpr {
  struct PathTerm {
    Scalar c;
    std::vector<std::string> path;
  };
  std::vector<PathTerm> terms;
};

enum class Origin { PathAlgebra, Endomorphism, Quotient, Opposite, Raw };

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Basic split algebra with a Peirce basis: basis element b lies in e_tgt(b) A e_src(b),
// vertex idempotents are basis elements and every other basis element lies in the radical.
// Left modules; the product x*y means "y, then x", so a path a then b is the element b*a.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  struct Data {
    Field field;
    std::vector<std::string> vertex_labels;
    std::vector<std::string> labels;
    std::vector<int> src, tgt;
    std::vector<int> idem;  // basis index of each vertex idempotent
    // mult[b][c] = b*c, only stored when src(b) == tgt(c)
    std::vector<std::vector<SparseVec>> mult;
    Origin origin = Origin::Raw;
    // Faithful representation used for the trace-form radical; empty means regular.
    std::vector<Matrix> faithful;
  };

  static AlgebraPtr make(Data d, bool check = true);

  const Field& field() const { return d_.field; }
  int dim() const { return static_cast<int>(d_.labels.size()); }
  int nverts() const { return static_cast<int>(d_.idem.size()); }
  const std::string& label(int b) const { return d_.labels[b]; }
  const std::string& vertex_label(int v) const { return d_.vertex_labels[v]; }
  const std::vector<std::string>& vertex_labels() const { return d_.vertex_labels; }
  int src(int b) const { return d_.src[b]; }
  int tgt(int b) const { return d_.tgt[b]; }
  int idem(int v) const { return d_.idem[v]; }
  bool is_idem(int b) const { return is_idem_[b]; }
  Origin origin() const { return d_.origin; }
  const Data& data() const { return d_; }

  // b*c; empty when the basis elements do not compose.
  const SparseVec& mul(int b, int c) const;
  SparseVec mul(const SparseVec& x, const SparseVec& y) const;

  // Basis elements of e_t A e_s.
  const std::vector<int>& block(int t, int s) const { return blocks_[t * nverts() + s]; }

  // Generators of the radical modulo its square, one list per Peirce block (t,s).
  struct Gen {
    int src, tgt;
    SparseVec v;
  };
  const std::vector<Gen>& arrows() const { return arrows_; }

  AlgebraPtr opposite() const;
  // Structural equality of tables (used when pointers differ).
  bool same_as(const Algebra& o) const;
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  explicit Algebra(Data d);
  void finish(bool check);

  Data d_;
  std::vector<bool> is_idem_;
  std::vector<std::vector<int>> blocks_;
  std::vector<Gen> arrows_;
  std::uint64_t fingerprint_ = 0;
  static const SparseVec kZero;

  mutable std::mutex op_mu_;
  mutable std::shared_ptr<const Algebra> op_strong_;
  mutable std::weak_ptr<const Algebra> op_weak_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

AlgebraPtr build_path_algebra(const Quiver& q, const std::vector<PathExpr>& rels, Field f = Field::Q(),
                              int length_cap = 30);
AlgebraPtr opposite(const AlgebraPtr& a);
// Basis of the Jacobson radical as dense coefficient vectors (columns of the result).
Matrix radical_basis(const AlgebraPtr& a);
// Trace-form radical, independent of the stored Peirce structure (cross-check).
Matrix trace_radical(const AlgebraPtr& a);
std::vector<std::vector<Scalar>> primitive_idempotents(const AlgebraPtr& a, std::uint64_t seed = 0);
AlgebraPtr quotient_by_idempotent_ideal(const AlgebraPtr& a, const std::vector<int>& verts);
std::vector<std::vector<int>> cartan_matrix(const AlgebraPtr& a);

// Algebra from raw structure constants (dense, c[i][j][k] = coefficient of b_k in b_i b_j)
// and unit; primitive idempotents are computed and the basis is rebuilt in Peirce form.
AlgebraPtr algebra_from_constants(Field f, const std::vector<std::vector<std::vector<Scalar>>>& c,
                                  std::uint64_t seed = 0);

// Standard corpus.
AlgebraPtr linear_A(int n, Field f = Field::Q());
AlgebraPtr dual_numbers(Field f = Field::Q());
AlgebraPtr preprojective_A(int n, Field f = Field::Q());
AlgebraPtr semisimple(int n, Field f = Field::Q());

SparseVec dense_to_sparse(const std::vector<Scalar>& v);
std::vector<Scalar> sparse_to_dense(const SparseVec& v, int dim);

}  // namespace aus
