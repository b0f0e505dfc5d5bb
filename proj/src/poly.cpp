#include "aus/poly.hpp"

#include <stdexcept>

namespace aus {

Poly poly_trim(Field f, Poly p) {
  for (auto& c : p) c = f.reduce(c);
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

Poly poly_mul(Field f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(f, std::move(r));
}

Poly poly_sub(Field f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_trim(f, std::move(r));
}

std::pair<Poly, Poly> poly_divmod(Field f, const Poly& a, const Poly& b) {
  Poly bb = poly_trim(f, b);
  if (bb.empty()) throw std::invalid_argument("polynomial division by zero");
  Poly r = poly_trim(f, a);
  if (r.size() < bb.size()) return {{}, r};
  Poly q(r.size() - bb.size() + 1);
  Scalar lead = f.inv(bb.back());
  while (!r.empty() && r.size() >= bb.size()) {
    std::size_t sh = r.size() - bb.size();
    Scalar c = f.reduce(r.back() * lead);
    q[sh] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) r[sh + i] = f.reduce(r[sh + i] - c * bb[i]);
    r = poly_trim(f, std::move(r));
  }
  return {poly_trim(f, std::move(q)), r};
}

ExtGcd poly_ext_gcd(Field f, const Poly& a, const Poly& b) {
  Poly r0 = poly_trim(f, a), r1 = poly_trim(f, b);
  Poly s0{Scalar(1)}, s1{}, t0{}, t1{Scalar(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(f, r0, r1);
    Poly s2 = poly_sub(f, s0, poly_mul(f, q, s1));
    Poly t2 = poly_sub(f, t0, poly_mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.empty()) {
    Scalar inv = f.inv(r0.back());
    for (auto* p : {&r0, &s0, &t0})
      for (auto& c : *p) c = f.reduce(c * inv);
  }
  return {r0, s0, t0};
}

std::optional<Poly> crt_idempotent(Field f, const Poly& m) {
  Poly mm = poly_trim(f, m);
  if (mm.size() <= 2) return std::nullopt;
  for (const Scalar& lam : poly_roots(f, mm)) {
    Poly lin{f.reduce(-lam), Scalar(1)};
    Poly pk{Scalar(1)}, rest = mm;
    for (;;) {
      auto [q, r] = poly_divmod(f, rest, lin);
      if (!r.empty()) break;
      rest = q;
      pk = poly_mul(f, pk, lin);
    }
    if (rest.size() <= 1) continue;  // m is a power of (t - lambda)
    // u = t_coef * rest with t_coef * rest = 1 mod pk.
    ExtGcd eg = poly_ext_gcd(f, rest, pk);
    Poly u = poly_divmod(f, poly_mul(f, eg.s, rest), mm).second;
    return u;
  }
  return std::nullopt;
}

}  // namespace aus
