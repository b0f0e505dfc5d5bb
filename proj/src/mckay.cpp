#include "aus/mckay.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "aus/errors.hpp"
#include "aus/poly.hpp"

namespace aus {

namespace {

const Field kQ = Field::Q();

const Poly& phi_poly(int n) {
  static std::map<int, Poly> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly q(cyclotomic_polynomial(d));
    p = poly_divmod(kQ, p, q).first;
  }
  return cache.emplace(n, poly_trim(kQ, p)).first->second;
}

std::vector<Scalar> reduce_mod_phi(int n, Poly p) {
  const Poly& m = phi_poly(n);
  const std::size_t deg = m.size() - 1;
  p = poly_trim(kQ, std::move(p));
  if (p.size() > deg) p = poly_divmod(kQ, p, m).second;
  p.resize(deg);
  return p;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

void check_same(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) throw std::invalid_argument("cyclotomic numbers with different conductors");
}

int identity_class(const CharacterTable& t) {
  if (t.classes.empty() || t.classes[0].size != 1) throw std::invalid_argument("the first class must be the identity");
  return 0;
}

}  // namespace

std::vector<Scalar> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  return phi_poly(n);
}

Cyclotomic::Cyclotomic(int conductor, const Scalar& rational) : n_(conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  c_.assign(phi_poly(conductor).size() - 1, Scalar(0));
  c_[0] = rational;
}

Cyclotomic Cyclotomic::from_terms(int conductor, const std::vector<std::pair<Scalar, int>>& terms) {
  Cyclotomic z(conductor);
  Poly p(conductor);
  for (auto& [c, e] : terms) p[mod(e, conductor)] += c;
  z.c_ = reduce_mod_phi(conductor, p);
  return z;
}

Cyclotomic Cyclotomic::root(int conductor, int exponent) { return from_terms(conductor, {{Scalar(1), exponent}}); }

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Scalar Cyclotomic::rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + str());
  return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<std::pair<Scalar, int>> terms;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) terms.push_back({c_[k], -static_cast<int>(k)});
  return from_terms(n_, terms);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same(*this, o);
  Cyclotomic z = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] += o.c_[i];
  return z;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + o.scaled(-1); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same(*this, o);
  Cyclotomic z = *this;
  z.c_ = reduce_mod_phi(n_, poly_mul(kQ, c_, o.c_));
  return z;
}

Cyclotomic Cyclotomic::scaled(const Scalar& s) const {
  Cyclotomic z = *this;
  for (auto& x : z.c_) x *= s;
  return z;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) os << (sgn(c_[k]) > 0 ? "+" : "");
    os << c_[k].get_str();
    if (k > 0) os << "*E(" << n_ << ")^" << k;
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

Scalar inner_product(const Character& chi, const Character& psi, const CharacterTable& t) {
  if (chi.size() != t.classes.size() || psi.size() != t.classes.size())
    throw std::invalid_argument("character does not conform to the table");
  Cyclotomic s(t.conductor);
  for (std::size_t c = 0; c < chi.size(); ++c) s = s + (chi[c] * psi[c].conj()).scaled(t.classes[c].size);
  s = s.scaled(Scalar(1, t.order));
  if (!s.is_rational()) throw NonIntegerMultiplicity("inner product is not rational: " + s.str());
  return s.rational();
}

Character char_mul(const Character& a, const Character& b) {
  if (a.size() != b.size()) throw std::invalid_argument("characters of different lengths");
  Character out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

void CharacterTable::validate() const {
  long total = 0;
  for (auto& c : classes) total += c.size;
  if (total != order) throw std::invalid_argument("class sizes do not sum to the group order");
  identity_class(*this);
  if (irr.size() != classes.size()) throw std::invalid_argument("table is not square");
  bool trivial = false;
  for (auto& row : irr) {
    bool ones = true;
    for (auto& v : row) ones = ones && v == Cyclotomic(conductor, 1);
    trivial = trivial || ones;
  }
  if (!trivial) throw std::invalid_argument("no trivial character");
  for (std::size_t i = 0; i < irr.size(); ++i)
    for (std::size_t j = 0; j < irr.size(); ++j)
      if (inner_product(irr[i], irr[j], *this) != (i == j ? 1 : 0))
        throw std::invalid_argument("irreducible characters are not orthonormal");
}

std::vector<int> decompose_character(const Character& chi, const CharacterTable& t) {
  std::vector<int> out;
  for (auto& row : t.irr) {
    Scalar m = inner_product(chi, row, t);
    if (m.get_den() != 1 || sgn(m) < 0) throw NonIntegerMultiplicity("multiplicity " + m.get_str());
    out.push_back(static_cast<int>(m.get_num().get_si()));
  }
  return out;
}

Character exterior_power(const Character& chi, int d, const CharacterTable& t) {
  for (auto& c : t.classes)
    if (static_cast<int>(c.power.size()) <= d) throw MissingPowerMaps("power maps up to exponent " + std::to_string(d));
  Character out;
  for (std::size_t g = 0; g < t.classes.size(); ++g) {
    // e_m = (1/m) Σ_{k=1}^{m} (-1)^{k-1} e_{m-k} p_k with p_k = χ(g^k).
    std::vector<Cyclotomic> e{Cyclotomic(t.conductor, 1)};
    for (int m = 1; m <= d; ++m) {
      Cyclotomic s(t.conductor);
      for (int k = 1; k <= m; ++k) {
        Cyclotomic term = e[m - k] * chi[t.classes[g].power[k]];
        s = (k % 2 == 1) ? s + term : s - term;
      }
      e.push_back(s.scaled(Scalar(1, m)));
    }
    out.push_back(e[d]);
  }
  return out;
}

QuiverGraph mckay_quiver(const CharacterTable& t, const Character& chi_v, int d, const std::optional<Character>& chi_s) {
  if (d < 2) throw std::invalid_argument("mckay_quiver needs d >= 2");
  int one = identity_class(t);
  if (!(chi_v.at(one) == Cyclotomic(t.conductor, d)))
    throw PreconditionFailed("the character of V does not have degree " + std::to_string(d));
  QuiverGraph q;
  const int r = static_cast<int>(t.irr.size());
  q.vertices = t.labels;
  q.arrows.assign(r, std::vector<int>(r, 0));
  for (int y = 0; y < r; ++y) {
    auto m = decompose_character(char_mul(chi_v, t.irr[y]), t);
    for (int x = 0; x < r; ++x) q.arrows[x][y] = m[x];
  }
  Character s = chi_s ? *chi_s : exterior_power(chi_v, d, t);
  q.dotted.assign(r, -1);
  for (int x = 0; x < r; ++x) {
    Character sx = char_mul(s, t.irr[x]);
    for (int y = 0; y < r; ++y)
      if (sx == t.irr[y]) q.dotted[x] = y;
    if (q.dotted[x] < 0) throw NonIntegerMultiplicity("S ⊗ " + t.labels[x] + " is not irreducible");
  }
  return q;
}

CharacterTable trivial_table() {
  CharacterTable t;
  t.name = "trivial";
  t.classes = {{"1", 1, {0, 0, 0, 0}}};
  t.labels = {"chi0"};
  t.irr = {{Cyclotomic(1, 1)}};
  return t;
}

CharacterTable cyclic_table(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_table: n must be positive");
  CharacterTable t;
  t.name = "C" + std::to_string(n);
  t.conductor = n;
  t.order = n;
  for (int k = 0; k < n; ++k) {
    ConjugacyClass c{"g^" + std::to_string(k), 1, {}};
    for (int j = 0; j <= std::max(n, 3); ++j) c.power.push_back((k * j) % n);
    t.classes.push_back(c);
  }
  for (int j = 0; j < n; ++j) {
    t.labels.push_back("chi" + std::to_string(j));
    Character row;
    for (int k = 0; k < n; ++k) row.push_back(Cyclotomic::root(n, j * k));
    t.irr.push_back(row);
  }
  return t;
}

Character cyclic_sl2_character(int n) {
  Character v;
  for (int k = 0; k < n; ++k) v.push_back(Cyclotomic::from_terms(n, {{Scalar(1), k}, {Scalar(1), -k}}));
  return v;
}

}  // namespace aus
