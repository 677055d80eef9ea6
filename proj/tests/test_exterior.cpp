#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coframe/cohomology.hpp"
#include "coframe/fixtures.hpp"

using namespace coframe;

namespace {

KForm<Rat> b1(int n, int i) { return basis_form<Rat>(n, {i}); }

}  // namespace

TEST_CASE("wedge: annihilation, antisymmetry, bilinearity") {
  int n = 4;
  CHECK(wedge(b1(n, 0), b1(n, 0)).is_zero());
  KForm<Rat> ab = wedge(b1(n, 0), b1(n, 1));
  KForm<Rat> ba = wedge(b1(n, 1), b1(n, 0));
  CHECK(ab.terms.at({0, 1}) == 1);
  CHECK(ba.terms.at({0, 1}) == -1);
  KForm<Rat> sum = b1(n, 0) + b1(n, 1);
  KForm<Rat> w = wedge(sum, b1(n, 2));
  CHECK(w.terms.size() == 2);
  CHECK(w.terms.at({0, 2}) == 1);
  CHECK(w.terms.at({1, 2}) == 1);
}

TEST_CASE("add_scale edge cases") {
  int n = 3;
  KForm<Rat> a = wedge(b1(n, 0), b1(n, 1));
  CHECK(add_scale(a, Rat(0), a) == a);
  CHECK(add_scale(a, Rat(-1), a).is_zero());
  KForm<Rat> other(1, n);
  CHECK_THROWS_AS(add_scale(a, Rat(1), other), DegreeMismatch);
  KForm<Rat> foreign(2, n + 1);
  foreign.add_term({0, 1}, Rat(1));
  CHECK_THROWS_AS(add_scale(a, Rat(1), foreign), MixedPresentation);
}

TEST_CASE("exterior and deformed derivative on the solvable example") {
  AlgebraPresentation p = parse_presentation(fixture_text("h.alg"));
  int n = p.nsym();
  // d theta5 = theta2 ^ theta3
  KForm<Rat> d5 = exterior_derivative(b1(n, 4), p.table);
  CHECK(d5.terms.size() == 1);
  CHECK(d5.terms.at({1, 2}) == 1);
  // d(d theta_i) = 0 for every generator
  for (int i = 0; i < n; ++i)
    CHECK(exterior_derivative(exterior_derivative(b1(n, i), p.table), p.table)
              .is_zero());
  // deformed: d_{lambda theta1}(theta3 ^ theta4) = (3+lambda) theta1^theta3^theta4
  KForm<Poly> t34 = promote(wedge(b1(n, 2), b1(n, 3)));
  KForm<Poly> zeta = promote(p.closedMarks.at("zeta"));
  KForm<Poly> d = deformed_derivative(t34, Poly::lambda(), zeta, p.table);
  CHECK(d.terms.size() == 1);
  Poly expect;
  expect.c = {Rat(3), Rat(1)};
  CHECK(d.terms.at({0, 2, 3}) == expect);
  // at lambda = 0 the deformed derivative is the plain one
  KForm<Rat> t15 = wedge(b1(n, 0), b1(n, 4));
  KForm<Rat> zr = p.closedMarks.at("zeta");
  CHECK(deformed_derivative(t15, Rat(0), zr, p.table) ==
        exterior_derivative(t15, p.table));
}

TEST_CASE("deformed derivative rejects non-closed zeta") {
  AlgebraPresentation p = parse_presentation(fixture_text("h.alg"));
  KForm<Rat> theta2 = b1(p.nsym(), 1);  // d theta2 != 0
  KForm<Rat> x = b1(p.nsym(), 0);
  CHECK_THROWS_AS(deformed_derivative(x, Rat(1), theta2, p.table), NotClosed);
}

TEST_CASE("exterior derivative surfaces unknown differentials by name") {
  AlgebraPresentation p = parse_presentation(fixture_text("pkz.alg"));
  KForm<Rat> eta9 = b1(p.nsym(), p.byName.at("eta9"));
  try {
    exterior_derivative(eta9, p.table);
    CHECK(false);
  } catch (const UnknownDifferential& e) {
    CHECK(e.symbol == "eta9");
  }
}

TEST_CASE("rank_profile reference shapes") {
  Poly lam = Poly::lambda();
  {
    ColMat<Poly> m;
    m.nrows = 1;
    Poly p;
    p.c = {Rat(3), Rat(1)};
    m.cols.push_back({{0, p}});
    RankProfile r = rank_profile(m);
    CHECK(r.genericRank == 1);
    CHECK(r.pivotPolys.count(poly_monic(p)) == 1);
  }
  {
    ColMat<Poly> m;
    m.nrows = 2;
    m.cols.push_back({{0, Poly(Rat(1))}});
    m.cols.push_back({{1, Poly(Rat(1))}});
    RankProfile r = rank_profile(m);
    CHECK(r.genericRank == 2);
    CHECK(r.pivotPolys == std::set<Poly>{Poly(Rat(1))});
  }
  {
    // rows [[lambda, 1], [lambda^2, lambda]]: generic rank 1
    ColMat<Poly> m;
    m.nrows = 2;
    m.cols.push_back({{0, lam}, {1, lam * lam}});
    m.cols.push_back({{0, Poly(Rat(1))}, {1, lam}});
    RankProfile r = rank_profile(m);
    CHECK(r.genericRank == 1);
    CHECK(r.pivotPolys.count(lam) == 1);
  }
}

TEST_CASE("rank_profile generic rank matches random specializations") {
  AlgebraPresentation p = parse_presentation(fixture_text("h.alg"));
  DeformedComplex c(p, p.closedMarks.at("zeta"));
  for (int k = 1; k <= 2; ++k) {
    ColMat<Poly> m = c.matrix(k);
    RankProfile prof = rank_profile(m);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
    for (int i = 0; i < 10; ++i) {
      Rat x = rat(num(rng), den(rng));
      bool onRoot = false;
      for (const Poly& piv : prof.pivotPolys)
        if (!piv.is_zero() && piv.degree() > 0 && piv.eval(x) == 0)
          onRoot = true;
      if (onRoot) continue;
      CHECK(col_echelon(specialize(m, x)).first == prof.genericRank);
    }
  }
}

TEST_CASE("eliminator solve recovers combinations") {
  Eliminator<Rat> e;
  std::map<int, Rat> c0 = {{0, Rat(1)}, {2, Rat(2)}};
  std::map<int, Rat> c1 = {{1, Rat(1)}, {2, Rat(-1)}};
  CHECK(e.feed(c0));
  CHECK(e.feed(c1));
  std::map<int, Rat> target = {{0, Rat(2)}, {1, Rat(3)}, {2, Rat(1)}};
  auto sol = e.solve(target);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == 2);
  CHECK((*sol)[1] == 3);
  std::map<int, Rat> outside = {{3, Rat(1)}};
  CHECK(!e.solve(outside).has_value());
}
