#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coframe/poly.hpp"

using namespace coframe;

namespace {

Poly poly(std::initializer_list<long> coeffs) {
  Poly p;
  for (long c : coeffs) p.c.push_back(rat(c));
  p.trim();
  return p;
}

Poly random_poly(std::mt19937_64& rng, int maxDeg) {
  std::uniform_int_distribution<int> deg(0, maxDeg), coeff(-6, 6);
  Poly p;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) p.c.push_back(rat(coeff(rng)));
  p.trim();
  return p;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("-3/4") == rat(-3, 4));
  CHECK(parse_rational("+2/6") == rat(1, 3));
  CHECK(parse_rational("0") == 0);
  CHECK_THROWS_AS(parse_rational("3/"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("3/-2"), Error);
  CHECK(rat_str(rat(6, -4)) == "-3/2");
}

TEST_CASE("poly_gcd basic identities") {
  Poly lin = poly({3, 1});  // lambda + 3
  CHECK(poly_gcd(lin, Poly()) == lin);
  CHECK(poly_gcd(Poly(), Poly()).is_zero());
  // (lambda+1)(lambda-1) vs (lambda+1)^2 -> lambda+1
  Poly a = poly({1, 1}) * poly({-1, 1});
  Poly b = poly({1, 1}) * poly({1, 1});
  CHECK(poly_gcd(a, b) == poly({1, 1}));
  // lambda^2-2 vs lambda+1 -> 1
  CHECK(poly_gcd(poly({-2, 0, 1}), poly({1, 1})) == Poly(Rat(1)));
}

TEST_CASE("poly_gcd divides both and is divided by common divisors") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng, 4), q = random_poly(rng, 4);
    Poly g = poly_gcd(p, q);
    if (g.is_zero()) {
      CHECK(p.is_zero());
      CHECK(q.is_zero());
      continue;
    }
    CHECK(poly_divides(g, p));
    CHECK(poly_divides(g, q));
    Poly d = random_poly(rng, 2);
    if (!d.is_zero()) CHECK(poly_divides(poly_gcd(d * p, d * q), d * p));
  }
}

TEST_CASE("rational_roots examples") {
  CHECK(rational_roots(poly({3, 1})) == std::set<Rat>{rat(-3)});
  // (2 lambda + 1)(lambda^2 + 1)
  CHECK(rational_roots(poly({1, 2}) * poly({1, 0, 1})) ==
        std::set<Rat>{rat(-1, 2)});
  CHECK(rational_roots(poly({-2, 0, 1})).empty());
  CHECK_THROWS_AS(rational_roots(Poly()), ZeroPolynomial);
}

TEST_CASE("rational_roots found roots evaluate to zero, missed candidates do not") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng, 4);
    if (p.is_zero()) continue;
    auto roots = rational_roots(p);
    for (const Rat& r : roots) CHECK(p.eval(r) == 0);
    // exhaustive small search: every rational root with small num/den found
    for (long n = -12; n <= 12; ++n)
      for (long d = 1; d <= 6; ++d)
        if (p.eval(rat(n, d)) == 0) CHECK(roots.count(rat(n, d)) == 1);
  }
}

TEST_CASE("rational function field axioms on random inputs") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    RatFun a(random_poly(rng, 3), poly({1, 1}));
    RatFun b(random_poly(rng, 3), poly({2, 0, 1}));
    RatFun c(random_poly(rng, 2), poly({5, 1}));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFun());
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFun(Rat(1)));
  }
}

TEST_CASE("poly_divexact rejects inexact division") {
  CHECK_THROWS_AS(poly_divexact(poly({1, 0, 1}), poly({1, 1})), Error);
  CHECK(poly_divexact(poly({1, 2, 1}), poly({1, 1})) == poly({1, 1}));
}
