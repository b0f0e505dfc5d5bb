#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aus/exactlin.hpp"

namespace aus {

// Element of Q(ζ_n) in the power basis 1, ζ, ..., ζ^{φ(n)-1}.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int conductor, const Scalar& rational = 0);
  // Σ c_k ζ^{e_k}, exponents taken mod n.
  static Cyclotomic from_terms(int conductor, const std::vector<std::pair<Scalar, int>>& terms);
  static Cyclotomic root(int conductor, int exponent);

  int conductor() const { return n_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_rational() const;
  Scalar rational() const;  // throws unless is_rational()
  Cyclotomic conj() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic scaled(const Scalar& s) const;
  bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }
  std::string str() const;

 private:
  int n_;
  std::vector<Scalar> c_;
};

// Coefficients of the n-th cyclotomic polynomial, low to high.
std::vector<Scalar> cyclotomic_polynomial(int n);

using Character = std::vector<Cyclotomic>;

struct ConjugacyClass {
  std::string label;
  int size = 1;
  std::vector<int> power;  // power[k] = class of g^k; may be empty
};

struct CharacterTable {
  std::string name;
  int conductor = 1;
  int order = 1;
  std::vector<ConjugacyClass> classes;
  std::vector<std::string> labels;
  std::vector<Character> irr;
  // Class sums, trivial row and orthonormality of the rows.
  void validate() const;
};

Scalar inner_product(const Character& chi, const Character& psi, const CharacterTable& t);
Character char_mul(const Character& a, const Character& b);
// Multiplicities of the irreducibles in chi.
std::vector<int> decompose_character(const Character& chi, const CharacterTable& t);
// Character of the d-th exterior power, from power maps via Newton's identities.
Character exterior_power(const Character& chi, int d, const CharacterTable& t);

struct QuiverGraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> arrows;  // arrows[x][y] = d_XY
  std::vector<int> dotted;               // x -> τ x
};
// d_XY = multiplicity of X in V ⊗ Y; dotted X -> S ⊗ X with S = ∧^d V unless chi_s is given.
QuiverGraph mckay_quiver(const CharacterTable& t, const Character& chi_v, int d,
                         const std::optional<Character>& chi_s = std::nullopt);

// Corpus tables: trivial group, C_n = <diag(ζ, ζ^{-1})> with power maps.
CharacterTable trivial_table();
CharacterTable cyclic_table(int n);
// Defining character of C_n in SL_2.
Character cyclic_sl2_character(int n);

}  // namespace aus
