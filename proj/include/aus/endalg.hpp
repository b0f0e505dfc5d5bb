#pragma once

#include <vector>

#include "aus/modrep.hpp"

namespace aus {

// Γ = End(⊕M_i) for pairwise non-isomorphic indecomposables M_i. Vertex i is M_i.
// A basis element of block (k,l) is a map M_k -> M_l, and γ1*γ2 = γ2∘γ1, so the
// left Γ-module attached to X has vertex i space Hom(M_i, X).
struct EndAlgebra {
  AlgebraPtr alg;
  std::vector<Module> gens;
  std::vector<ModuleMap> maps;  // Λ-map of each basis element
};

EndAlgebra end_algebra(const std::vector<Module>& gens);

// Λ-map M_k -> M_l of an element of e_k Γ e_l.
ModuleMap map_of(const EndAlgebra& e, const SparseVec& x, int k, int l);

struct EndModule {
  Module mod;
  std::vector<std::vector<ModuleMap>> basis;  // basis[i] spans Hom(M_i, X)
};
// Hom(M, X) as a left Γ-module.
EndModule module_over_end(const EndAlgebra& e, const Module& x);
// Hom(X, M) as a left Γ^op-module.
EndModule module_over_end_contra(const EndAlgebra& e, const Module& x);
// Coordinates of a map M_i -> X in basis[i].
std::vector<Scalar> end_coords(const EndModule& m, int i, const ModuleMap& f);

}  // namespace aus
