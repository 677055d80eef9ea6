#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coframe/rational.hpp"

namespace coframe {

// Univariate polynomial in the deformation parameter over the rationals.
// Dense by degree, canonical (no trailing zero coefficients).
struct Poly {
  std::vector<Rat> c;  // c[i] is the coefficient of lambda^i

  Poly() = default;
  explicit Poly(const Rat& r) {
    if (r != 0) c.push_back(r);
  }
  static Poly lambda() {
    Poly p;
    p.c = {Rat(0), Rat(1)};
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const Rat& lead() const { return c.back(); }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const {  // for ordered containers
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    if (r.c.size() < o.c.size()) r.c.resize(o.c.size(), Rat(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
  }
  Poly operator*(const Rat& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.c) x *= s;
    return r;
  }
};

// Quotient and remainder over the rationals; b must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  Poly q, r = a;
  if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rat f = r.lead() / b.lead();
    int shift = r.degree() - b.degree();
    q.c[shift] += f;
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i + shift] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

inline bool poly_divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return poly_divmod(a, d).second.is_zero();
}

// Exact division; throws if the division leaves a remainder.
inline Poly poly_divexact(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

inline Poly poly_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rat(1) / p.lead());
}

// Monic greatest common divisor; gcd(0,0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  return poly_monic(a);
}

// gcd of the rational coefficients (gcd of numerators / lcm of denominators);
// 0 for the zero polynomial.
inline Rat poly_content(const Poly& p) {
  mpz_class num(0), den(1);
  for (const auto& x : p.c) {
    mpz_class xn = abs(x.get_num());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), xn.get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  }
  if (num == 0) return Rat(0);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Exactly the rational roots, via the rational-root test on the primitive
// integer form; multiplicities discarded.
inline std::set<Rat> rational_roots(const Poly& p0) {
  if (p0.is_zero()) throw ZeroPolynomial();
  std::set<Rat> roots;
  Poly p = p0;
  // strip lambda^k
  std::size_t k = 0;
  while (k < p.c.size() && p.c[k] == 0) ++k;
  if (k > 0) {
    roots.insert(Rat(0));
    p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(k));
  }
  if (p.degree() < 1) return roots;
  Rat cont = poly_content(p);
  Poly q = p * (Rat(1) / cont);  // primitive integer coefficients
  mpz_class a0 = q.c.front().get_num();
  mpz_class an = q.c.back().get_num();
  for (const auto& num : divisors(a0))
    for (const auto& den : divisors(an)) {
      Rat r(num, den);
      r.canonicalize();
      if (q.eval(r) == 0) roots.insert(r);
      if (q.eval(-r) == 0) roots.insert(-r);
    }
  return roots;
}

inline std::string poly_str(const Poly& p, const std::string& var = "lambda") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& a = p.c[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    Rat mag = a < 0 ? Rat(-a) : a;
    if (out.empty())
      out += a < 0 ? "-" : "";
    else
      out += a < 0 ? " - " : " + ";
    std::string mono;
    if (i == 0)
      mono = rat_str(mag);
    else {
      if (mag != 1) mono = rat_str(mag) + "*";
      mono += var;
      if (i > 1) mono += "^" + std::to_string(i);
    }
    out += mono;
  }
  return out;
}

// Rational function in the deformation parameter: numerator / monic
// denominator, fully reduced.
struct RatFun {
  Poly num, den;

  RatFun() : den(Poly(Rat(1))) {}
  explicit RatFun(const Rat& r) : num(Poly(r)), den(Poly(Rat(1))) {}
  explicit RatFun(const Poly& p) : num(p), den(Poly(Rat(1))) {}
  RatFun(const Poly& n, const Poly& d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den.is_zero()) throw Error("zero denominator");
    if (num.is_zero()) {
      den = Poly(Rat(1));
      return;
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = poly_divexact(num, g);
      den = poly_divexact(den, g);
    }
    Rat lead = den.lead();
    num = num * (Rat(1) / lead);
    den = den * (Rat(1) / lead);
  }

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  RatFun operator+(const RatFun& o) const {
    return RatFun(num * o.den + o.num * den, den * o.den);
  }
  RatFun operator-() const {
    RatFun r = *this;
    r.num = -r.num;
    return r;
  }
  RatFun operator-(const RatFun& o) const { return *this + (-o); }
  RatFun operator*(const RatFun& o) const {
    return RatFun(num * o.num, den * o.den);
  }
  RatFun inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return RatFun(den, num);
  }
  RatFun operator/(const RatFun& o) const { return *this * o.inverse(); }
};

}  // namespace coframe
