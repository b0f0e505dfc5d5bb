#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "aus/algebra.hpp"

namespace aus {

constexpr int kRetryBudget = 64;

// Representation: vertex v carries a space of dimension vdim[v]; basis element b
// acts by act[b] : vdim[src b] -> vdim[tgt b]. Vertex idempotents act as identity.
struct Module {
  AlgebraPtr alg;
  std::vector<int> vdim;
  std::vector<Matrix> act;

  int dim() const;
  int offset(int v) const;
  const Field& field() const { return alg->field(); }
  // Action of b on the whole space (dim x dim).
  Matrix full_action(int b) const;
  // Action of an algebra element given in basis coordinates, as a block vdim[t] x vdim[s].
  Matrix act_elem(const SparseVec& x, int t, int s) const;
  bool is_zero() const { return dim() == 0; }
};

// Builds a module and verifies the module axioms.
Module make_module(AlgebraPtr a, std::vector<int> vdim, std::vector<Matrix> act);
Module zero_module(AlgebraPtr a);

// Per-vertex linear maps; blk[v] : src.vdim[v] -> tgt.vdim[v].
struct ModuleMap {
  Module src, tgt;
  std::vector<Matrix> blk;

  Matrix full() const;
  bool is_zero() const;
  int rank() const;
  bool is_injective() const { return rank() == src.dim(); }
  bool is_surjective() const { return rank() == tgt.dim(); }
  bool is_iso() const { return is_injective() && is_surjective(); }
};

ModuleMap zero_map(const Module& x, const Module& y);
ModuleMap identity_map(const Module& x);
// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap add(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale(const ModuleMap& f, const Scalar& s);
ModuleMap linear_combination(const std::vector<ModuleMap>& fs, const std::vector<Scalar>& cs,
                             const Module& x, const Module& y);
bool is_module_map(const ModuleMap& f);
// Flattened coordinates of the blocks, for rank computations on hom spaces.
std::vector<Scalar> flatten(const ModuleMap& f);

Module simple_module(const AlgebraPtr& a, int i);
Module projective_module(const AlgebraPtr& a, int i);
Module injective_module(const AlgebraPtr& a, int i);
Module regular_module(const AlgebraPtr& a);
Module injective_cogenerator(const AlgebraPtr& a);  // D(A_A)

struct DirectSum {
  Module sum;
  std::vector<ModuleMap> incl, proj;
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& ms);
Module direct_sum_module(const AlgebraPtr& a, const std::vector<Module>& ms);
// Map between direct sums from a matrix of component maps comp[l][k] : ms[k] -> ns[l].
ModuleMap block_map(const DirectSum& from, const DirectSum& to,
                    const std::vector<std::vector<std::optional<ModuleMap>>>& comp);

std::vector<ModuleMap> hom_basis(const Module& x, const Module& y);
int hom_dim(const Module& x, const Module& y);

struct Sub {
  Module mod;
  ModuleMap map;  // inclusion or projection
};
Sub kernel(const ModuleMap& f);
Sub image(const ModuleMap& f);  // inclusion into the target
Sub cokernel(const ModuleMap& f);
// Submodule spanned per vertex by columns of gens[v] (must be closed under the action).
Sub submodule(const Module& m, const std::vector<Matrix>& gens);

Module dual(const Module& m);
ModuleMap dual(const ModuleMap& f);

Sub radical_of_module(const Module& m);
Sub top(const Module& m);
Sub socle(const Module& m);
std::vector<int> top_multiplicities(const Module& m);
std::vector<int> socle_multiplicities(const Module& m);

// Direct sum of indecomposable projectives P_{verts[0]} ⊕ P_{verts[1]} ⊕ ...
struct ProjSum {
  std::vector<int> verts;
  DirectSum ds;
};
ProjSum projective_sum(const AlgebraPtr& a, const std::vector<int>& verts);
// comp[k][l] ∈ e_{from_k} A e_{to_l}; the map sends the generator of summand k to Σ_l comp[k][l].
using Components = std::vector<std::vector<SparseVec>>;
ModuleMap map_from_components(const ProjSum& from, const ProjSum& to, const Components& comp);
Components components(const ModuleMap& f, const ProjSum& from, const ProjSum& to);

struct Cover {
  ProjSum p;
  ModuleMap epi;
};
Cover projective_cover(const Module& m);
struct Envelope {
  std::vector<int> verts;  // injective summands I_v
  Module inj;
  ModuleMap mono;
};
Envelope injective_envelope(const Module& m);

enum class Flavor { Projective, Injective };
// Projective flavor: terms[i] = P_i, maps[0] : P_0 -> M, maps[i] : P_i -> P_{i-1}.
// Injective flavor: terms[i] = I^i, maps[0] : M -> I^0, maps[i] : I^{i-1} -> I^i.
struct Resolution {
  Flavor flavor;
  Module base;
  std::vector<std::vector<int>> verts;
  std::vector<Module> terms;
  std::vector<ModuleMap> maps;
  bool minimal = true;
  std::optional<int> truncated_at;
  int length() const { return static_cast<int>(terms.size()) - 1; }
};
Resolution min_proj_resolution(const Module& m, int cap);
Resolution min_inj_coresolution(const Module& m, int cap);

// Plain one-step kernel / cokernel of the minimal cover / envelope.
Module omega(const Module& m);
Module omega_inv(const Module& m);
// Iterated and stabilized (projective, resp. injective, summands removed).
Module syzygy(const Module& m, int k, std::uint64_t seed = 0);
Module cosyzygy(const Module& m, int k, std::uint64_t seed = 0);

bool is_projective(const Module& m);
bool is_injective(const Module& m);

struct Piece {
  Module mod;
  ModuleMap incl, proj;
  int cls = 0;
};
struct Decomposition {
  std::vector<Piece> pieces;
  std::vector<std::pair<Module, int>> summands;  // representative, multiplicity
};
Decomposition decompose(const Module& m, std::uint64_t seed = 0);
// Indecomposable summands up to isomorphism (one representative each).
std::vector<Module> indecomposable_summands(const Module& m, std::uint64_t seed = 0);
// Removes projective (resp. injective) indecomposable summands.
Module strip_projective(const Module& m, std::uint64_t seed = 0);
Module strip_injective(const Module& m, std::uint64_t seed = 0);

// Certificate that End(m) is local with residue field k.
bool is_local_end(const Module& m);
bool is_indecomposable(const Module& m, std::uint64_t seed = 0);

std::optional<ModuleMap> iso(const Module& x, const Module& y, std::uint64_t seed = 0);
bool isomorphic(const Module& x, const Module& y, std::uint64_t seed = 0);
// Index in list of a module isomorphic to x, or -1.
int find_iso(const std::vector<Module>& list, const Module& x, std::uint64_t seed = 0);
// Whether x lies in add(list); list entries should be indecomposable.
bool in_add(const std::vector<Module>& list, const Module& x, std::uint64_t seed = 0);

struct Approx {
  Module obj;        // in add(M)
  ModuleMap map;     // obj -> X (right) or X -> obj (left)
  std::vector<int> mult;  // multiplicity of each list entry in obj
};
Approx right_approximation(const std::vector<Module>& add_m, const Module& x);
Approx left_approximation(const Module& x, const std::vector<Module>& add_m);

struct Bounded {
  int value = 0;
  bool exact = true;  // false: the true value is at least `value`
  bool operator==(const Bounded&) const = default;
};
Bounded resolution_dim(const std::vector<Module>& c, const Module& x, int cap);

}  // namespace aus
