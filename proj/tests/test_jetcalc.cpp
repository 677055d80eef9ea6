#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coframe/fixtures.hpp"
#include "coframe/jetcalc.hpp"

using namespace coframe;

namespace {

JetUniverse pkz_universe() {
  JetUniverse u;
  for (const char* v : {"t", "x", "y"}) u.declare_independent(v);
  u.declare_dependent("u");
  u.declare_parameter("a");
  u.declare_nonlocal("q", "x");
  return u;
}

}  // namespace

TEST_CASE("normalization merges and cancels") {
  JetUniverse u = pkz_universe();
  JetExpr ux = JetExpr::atom(u.resolve("u_x"));
  CHECK(jet_expr_str(ux * ux, u) == "u_x^2");
  JetExpr e1 = parse_jet_expr("exp(u_y)", u);
  JetExpr e2 = parse_jet_expr("exp(-q)", u);
  CHECK(jet_expr_str(e1 * e2, u) == "exp(-q + u_y)");
  JetExpr h = parse_jet_expr("u_xxx^(1/2)", u);
  JetExpr f = JetExpr::atom(u.resolve("u_xxx"));
  CHECK(jet_expr_str(h * f, u) == "u_xxx^(3/2)");
  CHECK((parse_jet_expr("u_x + u_y", u) - parse_jet_expr("u_y + u_x", u))
            .is_zero());
}

TEST_CASE("jet names canonicalize by declaration order") {
  JetUniverse u = pkz_universe();
  CHECK(u.atom(u.resolve("u_tx")).name == "u_tx");
  CHECK_THROWS_AS(u.resolve("u_xt"), UndeclaredSymbol);
  CHECK_THROWS_AS(u.resolve("w"), UndeclaredSymbol);
  CHECK(u.atom(u.resolve("q_xx")).order == 2);
  CHECK_THROWS_AS(u.resolve("q_y"), UndeclaredSymbol);  // off-fiber jet
}

TEST_CASE("partial derivative rules") {
  JetUniverse u = pkz_universe();
  int uxxx = u.resolve("u_xxx");
  JetExpr half = parse_jet_expr("u_xxx^(1/2)", u);
  CHECK(jet_expr_str(partial_derivative(half, uxxx), u) == "1/2*u_xxx^(-1/2)");
  JetExpr ee = parse_jet_expr("exp(u_y - q)", u);
  CHECK(partial_derivative(ee, u.resolve("q")) == -ee);
  JetExpr lg = ln_expr(JetExpr::atom(uxxx));
  CHECK(jet_expr_str(partial_derivative(lg, uxxx), u) == "u_xxx^(-1)");
  // mixed partials commute
  JetExpr e = parse_jet_expr("u_x^3*exp(u_y)*u_xxx^(-1/2) + a*u_x", u);
  int b1 = u.resolve("u_x"), b2 = u.resolve("u_y");
  CHECK(partial_derivative(partial_derivative(e, b1), b2) ==
        partial_derivative(partial_derivative(e, b2), b1));
}

TEST_CASE("substitution expands polynomially and through functions") {
  JetUniverse u = pkz_universe();
  int qx = u.resolve("q_x");
  JetExpr value = parse_jet_expr("u_xxy*u_xxx^(-1) + a^(-1)*u_xxx^(-1/2)", u);
  JetExpr sq = parse_jet_expr("q_x^2", u);
  JetExpr out = substitute_atom(sq, qx, value);
  CHECK(out.t.size() == 3);
  CHECK(out == value * value);
  // untouched expressions pass through
  JetExpr untouched = parse_jet_expr("u_x + exp(u_y)", u);
  CHECK(substitute_atom(untouched, qx, value) == untouched);
  // exp positions need a linear substitute
  JetExpr eq = parse_jet_expr("exp(q_x)", u);
  CHECK_THROWS_AS(substitute_atom(eq, qx, value), UnsupportedShape);
  CHECK(substitute_atom(eq, qx, parse_jet_expr("u_x + u_y", u)) ==
        parse_jet_expr("exp(u_x + u_y)", u));
}

TEST_CASE("shape violations raise instead of degrading") {
  JetUniverse u = pkz_universe();
  CHECK_THROWS_AS(parse_jet_expr("exp(u_x*u_y)", u), UnsupportedShape);
  CHECK_THROWS_AS(parse_jet_expr("ln(u_x + u_y)", u), UnsupportedShape);
  CHECK_THROWS_AS(parse_jet_expr("(u_x + u_y)^(-1)", u), UnsupportedShape);
  CHECK_THROWS_AS(parse_jet_expr("(2*u_x)^(1/2)", u), UnsupportedShape);
  CHECK(parse_jet_expr("(u_x + u_y)^2", u) ==
        parse_jet_expr("u_x^2 + 2*u_x*u_y + u_y^2", u));
}

TEST_CASE("total derivatives: index shift and commutation") {
  PdeFixture fx = parse_pde(fixture_text("pkz_covering.pde"));
  JetUniverse& u = fx.universe;
  JetExpr ux = JetExpr::atom(u.resolve("u_x"));
  CHECK(total_derivative(ux, 1, u, nullptr, nullptr) ==
        JetExpr::atom(u.resolve("u_xx")));
  // [D_x, D_y] = 0 on pure jets
  JetExpr e = parse_jet_expr("u_x^2*u_ty + exp(u_y)", u);
  JetExpr xy = total_derivative(total_derivative(e, 1, u, nullptr, nullptr), 2,
                                u, nullptr, nullptr);
  JetExpr yx = total_derivative(total_derivative(e, 2, u, nullptr, nullptr), 1,
                                u, nullptr, nullptr);
  CHECK(xy == yx);
}

TEST_CASE("extended derivatives through the coverings") {
  PdeFixture pkz = parse_pde(fixture_text("pkz_covering.pde"));
  {
    JetUniverse& u = pkz.universe;
    JetExpr qy = parse_jet_expr("1/2*q_x^2 - u_x", u);  // = T_y
    // D_x of q_y uses the covering: q_x q_xx - u_xx
    JetExpr got = total_derivative(qy, 1, u, nullptr, &pkz.covering);
    CHECK(jet_expr_str(got, u) == "q_x*q_xx - u_xx");
    // a q-jet in a non-covered direction without a covering fails
    CHECK_THROWS_AS(
        total_derivative(JetExpr::atom(u.qjet(1)), 0, u, nullptr, nullptr),
        MissingCoveringRelation);
  }
  PdeFixture bf = parse_pde(fixture_text("bf_covering.pde"));
  {
    JetUniverse& u = bf.universe;
    JetExpr qx = parse_jet_expr("-exp(u_y - q_y)", u);  // = T_x
    JetExpr got = total_derivative(qx, 2, u, nullptr, &bf.covering);
    JetExpr expect = parse_jet_expr("-exp(u_y - q_y)*(u_yy - q_yy)", u);
    CHECK(got == expect);
  }
}

TEST_CASE("reduction to the equation submanifold") {
  PdeFixture pkz = parse_pde(fixture_text("pkz_covering.pde"));
  {
    JetUniverse& u = pkz.universe;
    JetExpr uyy = JetExpr::atom(u.resolve("u_yy"));
    CHECK(jet_expr_str(reduce_mod_equation(uyy, u, pkz.reduction), u) ==
          "u_tx + u_x*u_xx");
    JetExpr ux = JetExpr::atom(u.resolve("u_x"));
    CHECK(reduce_mod_equation(ux, u, pkz.reduction) == ux);
    // prolonged rewriting: u_yyy reduces to a y-free normal form
    JetExpr uyyy = JetExpr::atom(u.resolve("u_yyy"));
    JetExpr red = reduce_mod_equation(uyyy, u, pkz.reduction);
    for (int a : atoms_of(red)) {
      const JetAtom& at = u.atom(a);
      if (at.kind == JetAtom::Jet) CHECK(at.multiIndex[2] < 2);
    }
  }
  PdeFixture bf = parse_pde(fixture_text("bf_covering.pde"));
  {
    JetUniverse& u = bf.universe;
    JetExpr utx = JetExpr::atom(u.resolve("u_tx"));
    CHECK(reduce_mod_equation(utx, u, bf.reduction) ==
          parse_jet_expr("exp(u_y)*u_yy", u));
  }
}

TEST_CASE("covering compatibility residuals") {
  for (const std::string& name : {std::string("pkz_covering.pde"),
                                  std::string("bf_covering.pde")}) {
    PdeFixture fx = parse_pde(fixture_text(name));
    auto res =
        covering_compatibility_residual(fx.universe, fx.covering, fx.reduction);
    CHECK(res.size() == 3);  // one non-fiber pair + two fiber pairs
    for (const auto& r : res) CHECK(r.onShell.is_zero());
    CHECK(!res.front().offShell.is_zero());
  }
  PdeFixture broken = parse_pde(fixture_text("pkz_covering_broken.pde"));
  auto res = covering_compatibility_residual(broken.universe, broken.covering,
                                             broken.reduction);
  bool anyNonzero = false;
  for (const auto& r : res) anyNonzero = anyNonzero || !r.onShell.is_zero();
  CHECK(anyNonzero);
}

TEST_CASE("gradient covering is trivially flat") {
  PdeFixture fx = parse_pde(
      "pde grad\nindependent t x y\ndependent u\n"
      "solve u_yy = u_tx + u_x*u_xx\n"
      "covering q fiber x\nq_t = u_t\nq_y = u_y\n");
  auto res =
      covering_compatibility_residual(fx.universe, fx.covering, fx.reduction);
  for (const auto& r : res)
    if (r.dirB != "x")  // the non-fiber pair commutes on the nose
      CHECK(r.offShell.is_zero());
}

TEST_CASE("pde parser rejects malformed files") {
  CHECK_THROWS_AS(parse_pde("independent t x\n"), ParseError);
  CHECK_THROWS_AS(
      parse_pde("pde p\nindependent t x\ndependent u\n"
                "solve u_x = u_xx\n"),
      ParseError);  // right side not reduced
  CHECK_THROWS_AS(
      parse_pde("pde p\nindependent t x\ndependent u\nsolve u_xx = u_t\n"
                "covering q fiber x\n"),
      MissingCoveringRelation);
}
