#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aus/modrep.hpp"

namespace aus {

constexpr int kDefaultCap = 16;

enum class Tri { False, True, Unknown };
Tri tri_and(Tri a, Tri b);
Tri tri_not(Tri a);
const char* tri_str(Tri t);
std::string bounded_str(const Bounded& b);

// Ext via the minimal projective resolution of X.
int ext_dim(const Module& x, const Module& y, int i, int cap = kDefaultCap);
// Ext via the minimal injective coresolution of Y (balance cross-check).
int ext_dim_inj(const Module& x, const Module& y, int i, int cap = kDefaultCap);

struct ExtTable {
  std::vector<int> dims;  // degrees 0..cap
  int cap = 0;
  bool truncated = false;  // pd(X) not reached within cap
};
ExtTable ext_table(const Module& x, const Module& y, int cap = kDefaultCap);

Bounded pd(const Module& m, int cap = kDefaultCap);
Bounded id(const Module& m, int cap = kDefaultCap);
Bounded gldim(const AlgebraPtr& a, int cap = kDefaultCap);
// Number of leading projective terms of the minimal injective coresolution of A.
// Inexact when every computed term is projective.
Bounded domdim(const AlgebraPtr& a, int cap = kDefaultCap);

// pd I^i < m for 0 <= i < n, where I^i are the terms of the minimal injective coresolution of A.
Tri mn_condition(const AlgebraPtr& a, int m, int n, int cap = kDefaultCap);
Tri two_sided_mn(const AlgebraPtr& a, int m, int n, int cap = kDefaultCap);
// pd I^i <= i for 0 <= i < n.
Tri n_gorenstein(const AlgebraPtr& a, int n, int cap = kDefaultCap);
// Largest n <= cap with A n-Gorenstein; inexact when all n <= cap pass.
Bounded gorenstein_profile(const AlgebraPtr& a, int cap = kDefaultCap);

// min{i : Ext^i(M, A) != 0}; inexact when none up to cap.
Bounded grade(const Module& m, int cap = kDefaultCap);

// Tr M over A^op from the minimal presentation P1 -> P0 -> M -> 0.
Module transpose(const Module& m);
Module tau(const Module& m);
Module tau_inv(const Module& m);
Module tau_n(const Module& m, int n, std::uint64_t seed = 0);
Module tau_n_inv(const Module& m, int n, std::uint64_t seed = 0);

int stable_hom_dim(const Module& x, const Module& y);
// Maps modulo those factoring through add(DA), or through add(inj_class) when given.
int costable_hom_dim(const Module& x, const Module& y, const std::vector<Module>* inj_class = nullptr);

struct DimReport {
  Bounded gldim, domdim, domdim_op, gorenstein;
};
DimReport dim_report(const AlgebraPtr& a, int cap = kDefaultCap);

}  // namespace aus
