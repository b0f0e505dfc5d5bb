#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aus/orthocat.hpp"

namespace aus {

// (Λ, M, T) with add M an (n-1)-orthogonal subcategory of ⊥T containing Λ and T;
// maximal in ⊥T unless quasi.
struct AuslanderTriple {
  AlgebraPtr lambda;
  std::vector<Module> m;  // indecomposable, pairwise non-isomorphic
  Module t;
  int mm = 0, n = 1;
  bool quasi = false;
};

struct TripleCheck {
  Tri verdict = Tri::False;
  bool cotilting = false, contains = false, in_perp = false;
  Tri orthogonal = Tri::False, maximal = Tri::False;
  std::string reason;
};
TripleCheck verify_triple(const AuslanderTriple& t, int cap = kDefaultCap);

// Γ = End(⊕M); f indexes Γf = add P, e indexes D(eΓ) = add I.
struct GammaPresentation {
  EndAlgebra end;
  Module p, i;
  std::vector<int> e, f;
};
GammaPresentation alpha(const AuslanderTriple& t);

struct AlphaInverse {
  AuslanderTriple triple;
  EndAlgebra q_end;  // End_Γ(Q) with Q = ν⁻I
  TripleCheck check;
};
// Throws PreconditionFailed when (P, I) is not an m-extension pair or Q is not n-superprojective.
AlphaInverse alpha_inv(const AlgebraPtr& gamma, const Module& p, const Module& i, int m, int n, bool quasi = false,
                       int cap = kDefaultCap);

// Vertex of an indecomposable projective (top) or injective (socle); -1 otherwise.
int projective_vertex(const Module& x);
int injective_vertex(const Module& x);

Tri check_extension_pair(const AlgebraPtr& gamma, const std::vector<int>& f, const std::vector<int>& e, int m,
                         int cap = kDefaultCap);

struct SuperprojectiveCheck {
  Tri grade_side = Tri::False;        // grade of every simple of Γ/ΓeΓ is at least n+1
  Tri coresolution_side = Tri::False;  // 0 -> Γ -> I_0 -> ... -> I_n with I_i in add D(eΓ)
  Tri verdict() const { return tri_and(grade_side, coresolution_side); }
  bool consistent() const { return grade_side == coresolution_side; }
};
SuperprojectiveCheck check_superprojective(const AlgebraPtr& gamma, const std::vector<int>& e, int n,
                                           int cap = kDefaultCap);

// Ext^{k}(S, Γ) as a Γ^op-module, for S with a minimal projective resolution of length >= k.
Module ext_module(const Module& s, int k);
// Nonzero, radical acts trivially and the endomorphism ring is local.
bool is_simple_module(const Module& x);

struct SimplesCondition {
  Tri lhs = Tri::False;
  Tri rhs = Tri::False;
};
// Requires gl.dim Γ = n+1.
SimplesCondition simples_condition(const AlgebraPtr& gamma, int n, int cap = kDefaultCap);

// Homological characterization for arbitrary m, n; (3) and (4) are tested on simples.
struct Characterization {
  Tri gldim_ok = Tri::False, idempotents_ok = Tri::False, pd_grade_ok = Tri::False, duality_ok = Tri::False;
  std::vector<int> e, f;
  Tri verdict() const { return tri_and(tri_and(gldim_ok, idempotents_ok), tri_and(pd_grade_ok, duality_ok)); }
};
Characterization characterize_auslander(const AlgebraPtr& gamma, int m, int n, int cap = kDefaultCap);

// Algebra isomorphism Λ -> End_Γ(Q) for Q = Hom(M, Λ), and transport of modules along it.
struct YonedaIso {
  AlgebraPtr from, to;
  std::vector<int> vertex;  // vertex[v] of `to` for vertex v of `from`
  Matrix phi;               // columns: images of the basis of `from` in the basis of `to`
};
YonedaIso yoneda_iso(const AuslanderTriple& t, const GammaPresentation& g, const EndAlgebra& q_end);
Module transport(const YonedaIso& y, const Module& x);
// Both roundtrips of the correspondence on a verified triple.
struct Roundtrip {
  bool algebra_iso = false, generators_match = false, cotilting_match = false, gamma_match = false;
  bool ok() const { return algebra_iso && generators_match && cotilting_match && gamma_match; }
};
Roundtrip check_roundtrip(const AuslanderTriple& t, int cap = kDefaultCap);

struct SearchReport {
  std::optional<int> value;  // absent when no candidate has an exact objective
  bool at_least_cap = false;  // some candidate exceeded the cap
  std::vector<int> witness;
  int examined = 0, feasible = 0;
};
// min gl.dim End(⊕S) over S ⊇ projectives ∪ injectives with S ⊥_{n-1} S.
SearchReport repdim_search(const AlgebraPtr& lambda, int n, const std::vector<Module>& ind, bool complete = true,
                           int cap = kDefaultCap);
// Largest C ⊆ ind with C ⊥_1 C.
SearchReport o_bound(const std::vector<Module>& ind, bool complete = true, int cap = kDefaultCap);

}  // namespace aus
