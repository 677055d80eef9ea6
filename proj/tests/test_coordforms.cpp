#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coframe/coordform.hpp"
#include "coframe/fixtures.hpp"

using namespace coframe;

TEST_CASE("coordinate exterior derivative basics") {
  MCFixture fx = parse_mcf(fixture_text("pkz.mcf"));
  JetUniverse& u = fx.universe;
  // d(dt/a) = a^(-2) da ^ dt
  CoordForm xi1 = fx.mc.at("xi1");
  CoordForm d = coord_d(xi1);
  int a = u.resolve("a"), t = u.resolve("t");
  std::vector<int> key = {t, a};
  std::sort(key.begin(), key.end());
  REQUIRE(d.terms.size() == 1);
  JetExpr expect = parse_jet_expr("a^(-2)", u);
  if (key[0] == a)
    CHECK(d.terms.at(key) == -expect);  // stored as da ^ dt with a first
  else
    CHECK(d.terms.at(key) == expect);
  // d(u_yy dy) = du_yy ^ dy
  MCFixture bf = parse_mcf(fixture_text("bf.mcf"));
  CoordForm xi3 = bf.mc.at("xi3");
  CoordForm d3 = coord_d(xi3);
  CHECK(d3.terms.size() == 1);
}

TEST_CASE("d squared vanishes on random coordinate forms") {
  MCFixture fx = parse_mcf(fixture_text("bf.mcf"));
  JetUniverse& u = fx.universe;
  std::mt19937_64 rng(17);
  std::vector<std::string> exprs = {
      "u_yy^(-1)*exp(u_y - q_y)", "u_t*u_yy + ln(u_yy)", "q_y^3 - u_x",
      "exp(u_y)*u_yy^2",          "u_ty*u_yy^(-2)"};
  std::vector<std::string> atoms = {"t", "x", "y", "u_t", "u_y", "u_yy", "q_y"};
  std::uniform_int_distribution<std::size_t> pe(0, exprs.size() - 1),
      pa(0, atoms.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    CoordForm f(1);
    for (int k = 0; k < 3; ++k)
      f.add_term({u.resolve(atoms[pa(rng)])},
                 parse_jet_expr(exprs[pe(rng)], u));
    CHECK(coord_d(coord_d(f)).is_zero());
  }
}

TEST_CASE("structure equations hold for the printed forms") {
  {
    AlgebraPresentation p = parse_presentation(fixture_text("pkz.alg"));
    MCFixture fx = parse_mcf(fixture_text("pkz.mcf"));
    for (const char* sym : {"xi1", "xi2", "xi3"})
      CHECK(verify_structure_equation_in_coords(fx, p, sym).is_zero());
  }
  {
    AlgebraPresentation p = parse_presentation(fixture_text("bf.alg"));
    MCFixture fx = parse_mcf(fixture_text("bf.mcf"));
    for (const char* sym : {"xi1", "xi2", "xi3"})
      CHECK(verify_structure_equation_in_coords(fx, p, sym).is_zero());
  }
}

TEST_CASE("equations touching unprinted forms are NotVerifiable") {
  AlgebraPresentation p = parse_presentation(fixture_text("pkz.alg"));
  MCFixture fx = parse_mcf(fixture_text("pkz.mcf"));
  // d theta0 references theta0/theta1 with no printed coordinate forms
  CHECK_THROWS_AS(verify_structure_equation_in_coords(fx, p, "theta0"),
                  NotVerifiable);
}

TEST_CASE("zeta closed in coordinates, negative control fails") {
  AlgebraPresentation p1 = parse_presentation(fixture_text("pkz.alg"));
  MCFixture f1 = parse_mcf(fixture_text("pkz.mcf"));
  CHECK(verify_closed_in_coords(f1, p1, "zeta").is_zero());
  AlgebraPresentation p2 = parse_presentation(fixture_text("bf.alg"));
  MCFixture f2 = parse_mcf(fixture_text("bf.mcf"));
  CHECK(verify_closed_in_coords(f2, p2, "zeta").is_zero());
  // xi3 = u_yy dy is not closed
  CoordForm dxi3 = coord_d(expand_definitions(f2, f2.mc.at("xi3")));
  CHECK(!dxi3.is_zero());
}

TEST_CASE("extension solutions satisfy their deformed equations") {
  AlgebraPresentation p1 = parse_presentation(fixture_text("pkz.alg"));
  MCFixture f1 = parse_mcf(fixture_text("pkz.mcf"));
  CHECK(verify_extension_in_coords(f1, p1, "omega").is_zero());
  AlgebraPresentation p2 = parse_presentation(fixture_text("bf.alg"));
  MCFixture f2 = parse_mcf(fixture_text("bf.mcf"));
  CHECK(verify_extension_in_coords(f2, p2, "omega1").is_zero());
  CHECK(verify_extension_in_coords(f2, p2, "omega2").is_zero());
}

TEST_CASE("Wahlquist-Estabrook extraction recovers the covering systems") {
  {
    MCFixture fx = parse_mcf(fixture_text("pkz.mcf"));
    WEExtraction we =
        extract_wahlquist_estabrook(fx.extensions.at("omega").omega,
                                    fx.universe);
    PdeFixture pde = parse_pde(fixture_text("pkz_covering.pde"));
    CHECK(we.fiberName == "x");
    REQUIRE(we.spec.flatRelations.size() == 2);
    std::map<std::string, std::string> got, want;
    for (const auto& [d, T] : we.spec.flatRelations)
      got[fx.universe.indepNames[static_cast<std::size_t>(d)]] =
          jet_expr_str(T, fx.universe);
    for (const auto& [d, T] : pde.covering.flatRelations)
      want[pde.universe.indepNames[static_cast<std::size_t>(d)]] =
          jet_expr_str(T, pde.universe);
    CHECK(got == want);
  }
  {
    MCFixture fx = parse_mcf(fixture_text("bf.mcf"));
    WEExtraction we =
        extract_wahlquist_estabrook(fx.extensions.at("omega1").omega,
                                    fx.universe);
    CHECK(we.fiberName == "y");
    REQUIRE(we.spec.flatRelations.size() == 2);
  }
}

TEST_CASE("extraction rejects non-WE shapes") {
  MCFixture fx = parse_mcf(fixture_text("bf.mcf"));
  JetUniverse& u = fx.universe;
  // a surviving du_y differential is not WE-shaped
  CoordForm bad(1);
  bad.add_term({u.qjet(0)}, JetExpr(Rat(1)));
  bad.add_term({u.resolve("u_y")}, JetExpr(Rat(1)));
  CHECK_THROWS_AS(extract_wahlquist_estabrook(bad, u), NotWEShape);
  // pure fiber form: empty relations
  CoordForm pure(1);
  pure.add_term({u.qjet(0)}, parse_jet_expr("u_yy", u));
  WEExtraction we = extract_wahlquist_estabrook(pure, u);
  CHECK(we.spec.flatRelations.empty());
}

TEST_CASE("substitution reaches power and exponential positions together") {
  MCFixture fx = parse_mcf(fixture_text("bf.mcf"));
  JetUniverse u = fx.universe;
  int qy = u.resolve("q_y");
  JetExpr e = parse_jet_expr("q_y^2*exp(q_y)", u);
  JetExpr got = substitute_atom(e, qy, JetExpr::atom(u.resolve("u_y")));
  CHECK(got == parse_jet_expr("u_y^2*exp(u_y)", u));
}
