#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coframe/fixtures.hpp"
#include "coframe/presentation.hpp"

using namespace coframe;

TEST_CASE("parse the solvable example") {
  AlgebraPresentation p = parse_presentation(fixture_text("h.alg"));
  CHECK(p.name == "h");
  CHECK(p.nsym() == 5);
  CHECK(p.knownSymbols().size() == 5);
  CHECK(p.idealGenerators.size() == 5);
  CHECK(p.closedMarks.count("zeta") == 1);
  CHECK(p.table.entries.at(0).is_zero());
  CHECK(p.table.entries.at(4).terms.at({1, 2}) == 1);
}

TEST_CASE("serialization round-trips") {
  for (const std::string& name :
       {std::string("h.alg"), std::string("pkz.alg"), std::string("bf.alg"),
        std::string("pkz_raw.alg"), std::string("bf_raw.alg")}) {
    AlgebraPresentation p = parse_presentation(fixture_text(name));
    AlgebraPresentation q = parse_presentation(serialize_presentation(p));
    CHECK(p == q);
  }
}

TEST_CASE("parse errors carry locations") {
  try {
    parse_presentation("algebra x\nform a b\nd a = a ^\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.expected == "identifier");
  }
  CHECK_THROWS_AS(parse_presentation("form a\n"), ParseError);  // no header
  CHECK_THROWS_AS(parse_presentation("algebra x\nform a a\n"),
                  DuplicateDeclaration);
  CHECK_THROWS_AS(parse_presentation("algebra x\nform a\nd b = 0\n"),
                  UndeclaredSymbol);
  CHECK_THROWS_AS(
      parse_presentation("algebra x\nform a\nd a = 0\nd a = 0\n"),
      DuplicateDeclaration);
  // differential of a prolongation symbol is rejected
  CHECK_THROWS_AS(parse_presentation("algebra x\nform a\nprolongation p\n"
                                     "d p = 0\n"),
                  Error);
}

TEST_CASE("negative and fractional coefficients parse") {
  AlgebraPresentation p = parse_presentation(
      "algebra x\nform a b c\nd a = -3/4 * b ^ c + a ^ b\nd b = 0\nd c = 0\n");
  CHECK(p.table.entries.at(0).terms.at({1, 2}) == rat(-3, 4));
  CHECK(p.table.entries.at(0).terms.at({0, 1}) == 1);
}

TEST_CASE("validation: curated fixtures pass, raw transcriptions fail") {
  for (const std::string& name :
       {std::string("h.alg"), std::string("pkz.alg"), std::string("bf.alg")}) {
    AlgebraPresentation p = parse_presentation(fixture_text(name));
    ValidationReport v = validate_presentation(p);
    CHECK(v.pass);
    for (const auto& [_, res] : v.compat.perGenerator) CHECK(res.is_zero());
    for (const auto& [_, res] : v.closedResiduals) CHECK(res.is_zero());
  }
  for (const std::string& name :
       {std::string("pkz_raw.alg"), std::string("bf_raw.alg")}) {
    AlgebraPresentation p = parse_presentation(fixture_text(name));
    CHECK(!validate_presentation(p).pass);
  }
}

TEST_CASE("compatibility solves for prolongation differentials") {
  // d c = a ^ p forces d p's a-component; existence must be found
  AlgebraPresentation p = parse_presentation(
      "algebra x\nform a b c\nprolongation p\n"
      "d a = 0\nd b = 0\nd c = a ^ p\n");
  ValidationReport v = validate_presentation(p);
  CHECK(v.pass);
  // the prolonged table contains some d p making d(d c) = 0
  KForm<Rat> ddc = exterior_derivative(p.table.entries.at(2),
                                       v.compat.prolonged);
  CHECK(ddc.is_zero());
}
