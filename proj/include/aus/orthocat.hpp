#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aus/endalg.hpp"
#include "aus/homology.hpp"

namespace aus {

struct ExtWitness {
  int x, y, degree;  // indices into the lists involved
};

struct OrthoResult {
  Tri verdict = Tri::True;
  std::optional<ExtWitness> witness;
};
// Ext^i(X,Y) = 0 for all X,Y in c and 0 < i <= l.
OrthoResult ortho_check(const std::vector<Module>& c, int l, int cap = kDefaultCap);
// Ext^i(X,Y) = 0 for X in xs, Y in ys, 0 < i <= l.
OrthoResult ortho_between(const std::vector<Module>& xs, const std::vector<Module>& ys, int l,
                          int cap = kDefaultCap);

struct CotiltingCert {
  bool self_ortho = false, id_bound = false, coresolution = false;
  std::vector<Module> chain;  // T_0, T_1, ... resolving DΛ
  bool valid() const { return self_ortho && id_bound && coresolution; }
};
CotiltingCert is_cotilting(const Module& t, int m, int cap = kDefaultCap);
// Ext^i(X,T) = 0 for 0 < i <= m_bound.
bool in_perp_T(const Module& x, const Module& t, int m_bound, int cap = kDefaultCap);

struct MaximalityResult {
  bool maximal = false;
  std::string reason;
  std::optional<int> witness;  // index into ind_b
};
// C ⊥_{n-1} C, and C^⊥ and ⊥C (degrees 1..n-1, inside the list ind_b) both equal C.
MaximalityResult maximal_ortho_enumerative(const std::vector<Module>& c, int n, const std::vector<Module>& ind_b,
                                           bool complete = true, int cap = kDefaultCap);
// Homological criterion through Γ = End(⊕C). Returns False when the preconditions fail.
struct HomologicalVerdict {
  Tri verdict = Tri::False;
  bool necessary_only = false;
  std::string reason;
};
HomologicalVerdict maximal_ortho_homological(const AlgebraPtr& lambda, const std::vector<Module>& c,
                                             const Module& t, int m, int n, int cap = kDefaultCap);
// Two-sided (m+1,n+1)-condition and gl.dim Γ <= n+1.
Tri check_auslander_algebra(const AlgebraPtr& gamma, int m, int n, int cap = kDefaultCap);

// 0 -> Y -> C_{n-1} -> ... -> C_0 -> X -> 0; terms[0] = Y, terms.back() = X,
// maps[i] : terms[i] -> terms[i+1].
struct AlmostSplitSeq {
  int n = 1;
  std::vector<Module> terms;
  std::vector<ModuleMap> maps;
  std::vector<bool> radical_flags;
  bool exact = false;
  bool tau_ok = false;
  bool hom_exact = false;  // both induced Hom-sequences on the ambient category
};
bool is_radical_map(const ModuleMap& f, std::uint64_t seed = 0);
bool sequence_exact(const std::vector<ModuleMap>& maps);
AlmostSplitSeq almost_split_sequence(const Module& z, std::uint64_t seed = 0);
AlmostSplitSeq n_almost_split(const std::vector<Module>& c, const Module& x, int n, std::uint64_t seed = 0);
// Both Hom-sequences of an n-almost split sequence are exact when evaluated at every W in c.
bool hom_sequences_exact(const AlmostSplitSeq& s, const std::vector<Module>& c);

struct IndecList {
  std::vector<Module> mods;
  bool complete = false;
};
IndecList knit_indecomposables(const AlgebraPtr& a, int cap_count = 200, int cap_dim = 64, std::uint64_t seed = 0);
IndecList brute_indecomposables(const AlgebraPtr& a, int dim_cap, std::uint64_t seed = 0);

struct ARQuiver {
  std::vector<Module> vertices;
  std::vector<std::vector<int>> arrows;  // arrows[x][y] = d_XY
  std::vector<int> dotted;               // x -> index of τ_n x, or -1
  bool cross_check = false;
};
ARQuiver ar_quiver(const std::vector<Module>& c, int n, std::uint64_t seed = 0);

// Hom(⊕M1, ⊕M2) as a module over End(⊕M1).
Module connecting_tilting(const EndAlgebra& e1, const std::vector<Module>& m2);
Tri tilting_check(const AlgebraPtr& gamma, const Module& u, int t, int cap = kDefaultCap);

}  // namespace aus
