#include "aus/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "aus/errors.hpp"

namespace aus {

namespace {

void check_version(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("version") && j.at("version") != kFormatVersion)
    throw ParseError("unsupported format version " + j.at("version").dump());
}

const Json& field_of(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int vertex_index(const AlgebraPtr& a, const Json& v) {
  if (v.is_number_integer()) {
    int i = v.get<int>();
    if (i < 0 || i >= a->nverts()) throw ParseError("vertex index out of range: " + v.dump());
    return i;
  }
  if (!v.is_string()) throw ParseError("vertex must be a label or an index");
  const auto& labels = a->vertex_labels();
  for (int i = 0; i < a->nverts(); ++i)
    if (labels[i] == v.get<std::string>()) return i;
  throw ParseError("unknown vertex '" + v.get<std::string>() + "'");
}

Matrix parse_matrix(Field f, const Json& rows, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  if (!rows.is_array() || rows.size() != r) throw ParseError("matrix must have " + std::to_string(r) + " rows");
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw ParseError("matrix row must have " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < c; ++k) m.set(i, k, parse_scalar(rows[i][k]));
  }
  return m;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Scalar parse_scalar(const Json& j) {
  try {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) {
      Scalar s(j.get<std::string>());
      s.canonicalize();
      return s;
    }
  } catch (const std::invalid_argument&) {
  }
  throw ParseError("not a rational: " + j.dump());
}

std::string scalar_str(const Scalar& s) { return s.get_str(); }

Field parse_field(const Json& j) {
  if (j.is_object()) return Field::Fp(field_of(j, "p").get<long>());
  if (!j.is_string()) throw ParseError("field must be \"Q\", \"F<p>\" or {\"p\": p}");
  std::string s = j.get<std::string>();
  if (s == "Q" || s == "QQ") return Field::Q();
  std::string digits;
  if (s.rfind("GF(", 0) == 0 && s.back() == ')') digits = s.substr(3, s.size() - 4);
  else if (s.rfind("F_", 0) == 0) digits = s.substr(2);
  else if (s.rfind("F", 0) == 0) digits = s.substr(1);
  try {
    return Field::Fp(std::stol(digits));
  } catch (const std::exception&) {
    throw ParseError("unknown field '" + s + "'");
  }
}

std::string field_str(const Field& f) { return f.is_prime() ? "F" + std::to_string(f.p) : "Q"; }

// ---------------------------------------------------------------------------

AlgebraPtr parse_algebra(const Json& j, std::uint64_t seed) {
  check_version(j);
  Field f = j.contains("field") ? parse_field(j.at("field")) : Field::Q();
  try {
    if (j.contains("builtin")) {
      std::string b = j.at("builtin").get<std::string>();
      int n = j.value("n", 1);
      if (b == "linear_A") return linear_A(n, f);
      if (b == "dual_numbers") return dual_numbers(f);
      if (b == "preprojective_A") return preprojective_A(n, f);
      if (b == "semisimple") return semisimple(n, f);
      throw ParseError("unknown builtin algebra '" + b + "'");
    }
    if (j.contains("structure_constants")) {
      const auto& c = j.at("structure_constants");
      std::vector<std::vector<std::vector<Scalar>>> sc;
      for (auto& plane : c) {
        std::vector<std::vector<Scalar>> p;
        for (auto& row : plane) {
          std::vector<Scalar> r;
          for (auto& x : row) r.push_back(parse_scalar(x));
          p.push_back(r);
        }
        sc.push_back(p);
      }
      return algebra_from_constants(f, sc, seed);
    }
    const auto& qj = field_of(j, "quiver");
    Quiver q;
    for (auto& v : field_of(qj, "vertices")) q.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    for (auto& a : field_of(qj, "arrows")) {
      auto name = [&](const char* k) {
        const Json& x = field_of(a, k);
        return x.is_string() ? x.get<std::string>() : x.dump();
      };
      q.arrows.push_back({name("name"), name("source"), name("target")});
    }
    std::vector<PathExpr> rels;
    if (j.contains("relations"))
      for (auto& r : j.at("relations")) {
        PathExpr e;
        for (auto& term : r) {
          if (!term.is_array() || term.size() != 2) throw ParseError("relation term must be [coef, [arrows...]]");
          PathExpr::PathTerm t{parse_scalar(term[0]), {}};
          for (auto& x : term[1]) t.path.push_back(x.get<std::string>());
          e.terms.push_back(t);
        }
        rels.push_back(e);
      }
    return build_path_algebra(q, rels, f, j.value("length_cap", 30));
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

AlgebraPtr load_algebra(const std::string& path, std::uint64_t seed) { return parse_algebra(read_json_file(path), seed); }

Json algebra_to_json(const AlgebraPtr& a) {
  const int n = a->dim();
  Json c = Json::array();
  for (int i = 0; i < n; ++i) {
    Json plane = Json::array();
    for (int k = 0; k < n; ++k) {
      Json row = Json::array();
      std::vector<Scalar> v = sparse_to_dense(a->mul(i, k), n);
      for (auto& x : v) row.push_back(x.get_den() == 1 ? Json(x.get_num().get_si()) : Json(x.get_str()));
      plane.push_back(row);
    }
    c.push_back(plane);
  }
  return {{"version", kFormatVersion}, {"field", field_str(a->field())}, {"structure_constants", c}};
}

// ---------------------------------------------------------------------------

Module module_from_arrows(const AlgebraPtr& a, const std::vector<int>& dims,
                          const std::vector<std::pair<std::string, Matrix>>& arrows) {
  if (a->origin() != Origin::PathAlgebra) throw ParseError("explicit modules need a quiver algebra");
  if (static_cast<int>(dims.size()) != a->nverts()) throw ParseError("dimension vector has the wrong length");
  std::map<std::string, Matrix> by_name(arrows.begin(), arrows.end());
  std::vector<Matrix> act;
  for (int b = 0; b < a->dim(); ++b) {
    const int s = a->src(b), t = a->tgt(b);
    if (a->is_idem(b)) {
      act.push_back(Matrix::identity(a->field(), dims[s]));
      continue;
    }
    std::stringstream ss(a->label(b));
    std::string name;
    Matrix m;
    bool first = true;
    while (std::getline(ss, name, '.')) {
      auto it = by_name.find(name);
      if (it == by_name.end()) throw ParseError("no matrix for arrow '" + name + "'");
      m = first ? it->second : it->second * m;
      first = false;
    }
    if (m.rows() != static_cast<std::size_t>(dims[t]) || m.cols() != static_cast<std::size_t>(dims[s]))
      throw ParseError("matrix for '" + a->label(b) + "' has the wrong shape");
    act.push_back(m);
  }
  try {
    return make_module(a, dims, act);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("module axioms fail: ") + e.what());
  }
}

Module parse_module(const AlgebraPtr& a, const Json& j) {
  try {
    std::string kind = field_of(j, "kind").get<std::string>();
    if (kind == "simple") return simple_module(a, vertex_index(a, field_of(j, "vertex")));
    if (kind == "projective") return projective_module(a, vertex_index(a, field_of(j, "vertex")));
    if (kind == "injective") return injective_module(a, vertex_index(a, field_of(j, "vertex")));
    if (kind == "regular") return regular_module(a);
    if (kind == "cogenerator") return injective_cogenerator(a);
    if (kind == "explicit") {
      std::vector<int> dims = field_of(j, "dims").get<std::vector<int>>();
      if (static_cast<int>(dims.size()) != a->nverts()) throw ParseError("dimension vector has the wrong length");
      std::vector<std::pair<std::string, Matrix>> arrows;
      const Json& aj = j.contains("arrows") ? j.at("arrows") : Json::object();
      std::map<std::string, std::pair<int, int>> shape;
      for (auto& g : a->arrows()) {
        if (g.v.size() != 1) continue;
        shape[a->label(g.v[0].idx)] = {g.tgt, g.src};
      }
      for (auto& [name, st] : shape) {
        std::size_t r = dims[st.first], c = dims[st.second];
        if (aj.contains(name)) arrows.push_back({name, parse_matrix(a->field(), aj.at(name), r, c)});
        else arrows.push_back({name, Matrix(a->field(), r, c)});
      }
      for (auto& [name, v] : aj.items())
        if (!shape.count(name)) throw ParseError("unknown arrow '" + name + "'");
      return module_from_arrows(a, dims, arrows);
    }
    throw ParseError("unknown module kind '" + kind + "'");
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

std::vector<Module> parse_modules(const AlgebraPtr& a, const Json& j) {
  check_version(j);
  std::vector<Module> out;
  for (auto& m : field_of(j, "modules")) out.push_back(parse_module(a, m));
  return out;
}

std::vector<Module> load_modules(const AlgebraPtr& a, const std::string& path) {
  return parse_modules(a, read_json_file(path));
}

Json module_summary(const Module& m) { return {{"dims", m.vdim}, {"dim", m.dim()}}; }

// ---------------------------------------------------------------------------

Cyclotomic parse_cyclotomic(int conductor, const Json& j) {
  if (j.is_object()) {
    std::vector<std::pair<Scalar, int>> terms;
    for (auto& t : field_of(j, "terms")) {
      if (!t.is_array() || t.size() != 2) throw ParseError("cyclotomic term must be [coef, exponent]");
      terms.push_back({parse_scalar(t[0]), t[1].get<int>()});
    }
    return Cyclotomic::from_terms(conductor, terms);
  }
  return Cyclotomic(conductor, parse_scalar(j));
}

Character parse_character(const CharacterTable& t, const Json& values) {
  if (!values.is_array() || values.size() != t.classes.size()) throw ParseError("character has the wrong length");
  Character c;
  for (auto& v : values) c.push_back(parse_cyclotomic(t.conductor, v));
  return c;
}

CharacterTable parse_character_table(const Json& j) {
  check_version(j);
  CharacterTable t;
  try {
    t.name = j.value("name", "");
    t.conductor = j.value("conductor", 1);
    t.order = field_of(j, "order").get<int>();
    for (auto& c : field_of(j, "classes"))
      t.classes.push_back({c.value("label", ""), field_of(c, "size").get<int>(),
                           c.value("power", std::vector<int>{})});
    for (auto& c : t.classes)
      for (int p : c.power)
        if (p < 0 || p >= static_cast<int>(t.classes.size())) throw ParseError("power map out of range");
    for (auto& ch : field_of(j, "characters")) {
      t.labels.push_back(ch.value("label", "chi" + std::to_string(t.labels.size())));
      t.irr.push_back(parse_character(t, field_of(ch, "values")));
    }
    t.validate();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return t;
}

CharacterTable load_character_table(const std::string& path) { return parse_character_table(read_json_file(path)); }

// ---------------------------------------------------------------------------

std::string to_dot(const std::string& name, const std::vector<std::string>& labels,
                   const std::vector<std::vector<int>>& arrows, const std::vector<int>& dotted) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (auto& l : labels) os << "  \"" << l << "\";\n";
  for (std::size_t x = 0; x < arrows.size(); ++x)
    for (std::size_t y = 0; y < arrows[x].size(); ++y)
      for (int k = 0; k < arrows[x][y]; ++k) os << "  \"" << labels[x] << "\" -> \"" << labels[y] << "\";\n";
  for (std::size_t x = 0; x < dotted.size(); ++x)
    if (dotted[x] >= 0)
      os << "  \"" << labels[x] << "\" -> \"" << labels[dotted[x]] << "\" [style=dashed];\n";
  os << "}\n";
  return os.str();
}

DotCounts count_dot(const std::string& dot) {
  DotCounts c;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("->") != std::string::npos) {
      if (line.find("style=dashed") != std::string::npos) ++c.dashed;
      else ++c.solid;
    } else if (line.find('"') != std::string::npos && line.find("digraph") == std::string::npos) {
      ++c.vertices;
    }
  }
  return c;
}

}  // namespace aus
