#pragma once

#include <stdexcept>
#include <string>

namespace coframe {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  int line;
  int column;
  std::string expected;
  ParseError(int line_, int column_, const std::string& expected_)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": expected " + expected_),
        line(line_), column(column_), expected(expected_) {}
};

struct UndeclaredSymbol : Error {
  std::string name;
  int line;
  explicit UndeclaredSymbol(const std::string& name_, int line_ = 0)
      : Error("undeclared symbol '" + name_ + "'" +
              (line_ ? " at line " + std::to_string(line_) : "")),
        name(name_), line(line_) {}
};

struct DuplicateDeclaration : Error {
  std::string name;
  explicit DuplicateDeclaration(const std::string& name_)
      : Error("duplicate declaration of '" + name_ + "'"), name(name_) {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct DegreeMismatch : Error {
  DegreeMismatch() : Error("form degrees do not match") {}
};

struct DegreeOutOfRange : Error {
  DegreeOutOfRange() : Error("degree outside the complex's range") {}
};

struct MixedPresentation : Error {
  MixedPresentation() : Error("forms belong to different symbol universes") {}
};

struct UnknownDifferential : Error {
  std::string symbol;
  explicit UnknownDifferential(const std::string& symbol_)
      : Error("differential of '" + symbol_ + "' is not known"),
        symbol(symbol_) {}
};

struct NotClosed : Error {
  std::string detail;
  explicit NotClosed(const std::string& detail_)
      : Error("1-form is not closed: " + detail_), detail(detail_) {}
};

struct UnsupportedShape : Error {
  explicit UnsupportedShape(const std::string& what_)
      : Error("expression leaves the closed class: " + what_) {}
};

struct MissingCoveringRelation : Error {
  explicit MissingCoveringRelation(const std::string& dir)
      : Error("no covering relation for direction '" + dir + "'") {}
};

struct NonTermination : Error {
  NonTermination() : Error("rewriting exceeded the bounded depth") {}
};

struct NotVerifiable : Error {
  std::string symbol;
  explicit NotVerifiable(const std::string& symbol_)
      : Error("'" + symbol_ + "' references coordinately unknown forms"),
        symbol(symbol_) {}
};

struct NotWEShape : Error {
  explicit NotWEShape(const std::string& what_)
      : Error("form is not of Wahlquist-Estabrook shape: " + what_) {}
};

}  // namespace coframe
