#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "aus/mckay.hpp"
#include "aus/orthocat.hpp"

namespace aus {

using Json = nlohmann::json;

constexpr int kFormatVersion = 1;

Json read_json_file(const std::string& path);

// Rationals are integers or "num/den" strings.
Scalar parse_scalar(const Json& j);
std::string scalar_str(const Scalar& s);
Field parse_field(const Json& j);
std::string field_str(const Field& f);

// {"version", "field", "quiver": {"vertices", "arrows": [{"name","source","target"}]},
//  "relations": [[[coef, [arrows...]], ...], ...], "length_cap"}
// or {"version", "field", "structure_constants": c[i][j][k]}
// or {"version", "field", "builtin": "linear_A" | "dual_numbers" | "preprojective_A" | "semisimple", "n"}.
AlgebraPtr parse_algebra(const Json& j, std::uint64_t seed = 0);
AlgebraPtr load_algebra(const std::string& path, std::uint64_t seed = 0);
Json algebra_to_json(const AlgebraPtr& a);  // structure constants

// Module list over a fixed algebra: {"version", "modules": [{"kind": "simple"|"projective"|"injective",
// "vertex"}, {"kind": "regular"|"cogenerator"}, {"kind": "explicit", "dims", "arrows": {name: rows}}]}.
Module parse_module(const AlgebraPtr& a, const Json& j);
std::vector<Module> parse_modules(const AlgebraPtr& a, const Json& j);
std::vector<Module> load_modules(const AlgebraPtr& a, const std::string& path);
// Module over a path algebra from matrices of its arrows.
Module module_from_arrows(const AlgebraPtr& a, const std::vector<int>& dims,
                          const std::vector<std::pair<std::string, Matrix>>& arrows);
Json module_summary(const Module& m);

// Values are rationals or {"terms": [[coef, exponent], ...]} in powers of E(conductor).
Cyclotomic parse_cyclotomic(int conductor, const Json& j);
CharacterTable parse_character_table(const Json& j);
CharacterTable load_character_table(const std::string& path);
Character parse_character(const CharacterTable& t, const Json& values);

// Parallel solid edges for multiplicities; dashed edges for the dotted map.
std::string to_dot(const std::string& name, const std::vector<std::string>& labels,
                   const std::vector<std::vector<int>>& arrows, const std::vector<int>& dotted);
struct DotCounts {
  int vertices = 0, solid = 0, dashed = 0;
};
DotCounts count_dot(const std::string& dot);

}  // namespace aus
