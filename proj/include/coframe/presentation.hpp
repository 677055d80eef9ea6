#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "coframe/compat.hpp"

namespace coframe {

struct AlgebraPresentation {
  std::string name;
  std::vector<FormSymbol> symbols;  // index order
  std::map<std::string, int> byName;
  StructureTable table;             // known-differential entries
  std::vector<int> idealGenerators;
  std::map<std::string, KForm<Rat>> closedMarks;

  int nsym() const { return static_cast<int>(symbols.size()); }
  std::vector<int> knownSymbols() const {
    std::vector<int> r;
    for (const auto& s : symbols)
      if (s.knownDifferential) r.push_back(s.index);
    return r;
  }
  std::vector<int> unknownSymbols() const {
    std::vector<int> r;
    for (const auto& s : symbols)
      if (!s.knownDifferential) r.push_back(s.index);
    return r;
  }
  bool operator==(const AlgebraPresentation& o) const {
    return name == o.name && symbols == o.symbols &&
           table.entries == o.table.entries &&
           idealGenerators == o.idealGenerators && closedMarks == o.closedMarks;
  }
};

struct ValidationReport {
  CompatibilityReport compat;
  std::map<std::string, KForm<Rat>> closedResiduals;
  bool pass = false;
};

namespace detail {

struct Token {
  enum Kind { Ident, Number, Punct, End } kind;
  std::string text;
  int column;
};

inline std::vector<Token> lex_line(const std::string& line, int lineNo) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    int col = static_cast<int>(i) + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) ||
              line[j] == '_'))
        ++j;
      out.push_back({Token::Ident, line.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
        ++j;
      if (j < line.size() && line[j] == '/') {
        ++j;
        if (j == line.size() || !std::isdigit(static_cast<unsigned char>(line[j])))
          throw ParseError(lineNo, static_cast<int>(j) + 1, "denominator");
        while (j < line.size() &&
               std::isdigit(static_cast<unsigned char>(line[j])))
          ++j;
      }
      out.push_back({Token::Number, line.substr(i, j - i), col});
      i = j;
    } else if (c == '+' || c == '-' || c == '*' || c == '^' || c == '=') {
      out.push_back({Token::Punct, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(lineNo, col, "token");
    }
  }
  out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

struct LineParser {
  const std::vector<Token>& t;
  std::size_t pos = 0;
  int lineNo;

  const Token& peek() const { return t[pos]; }
  const Token& take() { return t[pos++]; }
  bool at_end() const { return peek().kind == Token::End; }
  bool accept_punct(const std::string& p) {
    if (peek().kind == Token::Punct && peek().text == p) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect_punct(const std::string& p) {
    if (!accept_punct(p)) throw ParseError(lineNo, peek().column, "'" + p + "'");
  }
  std::string expect_ident() {
    if (peek().kind != Token::Ident)
      throw ParseError(lineNo, peek().column, "identifier");
    return take().text;
  }
};

}  // namespace detail

inline AlgebraPresentation parse_presentation(const std::string& text) {
  AlgebraPresentation p;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  bool haveHeader = false;

  auto symbol_index = [&](const std::string& name, int ln) {
    auto it = p.byName.find(name);
    if (it == p.byName.end()) throw UndeclaredSymbol(name, ln);
    return it->second;
  };
  auto declare = [&](const std::string& name, bool known) {
    if (p.byName.count(name)) throw DuplicateDeclaration(name);
    int ix = p.nsym();
    p.byName[name] = ix;
    p.symbols.push_back({name, ix, known});
  };

  // parse "[sign] [RATIONAL *] IDENT" returning (coefficient, symbol index)
  auto parse_scaled_ident = [&](detail::LineParser& lp,
                                bool negated) -> std::pair<Rat, int> {
    Rat c(negated ? -1 : 1);
    if (lp.accept_punct("-")) c = -c;
    else if (lp.accept_punct("+")) {
    }
    if (lp.peek().kind == detail::Token::Number) {
      c *= parse_rational(lp.take().text);
      lp.expect_punct("*");
    }
    int ix = symbol_index(lp.expect_ident(), lp.lineNo);
    return {c, ix};
  };

  while (std::getline(in, line)) {
    ++lineNo;
    auto toks = detail::lex_line(line, lineNo);
    detail::LineParser lp{toks, 0, lineNo};
    if (lp.at_end()) continue;
    std::string kw = lp.expect_ident();
    if (!haveHeader) {
      if (kw != "algebra") throw ParseError(lineNo, 1, "'algebra'");
      p.name = lp.expect_ident();
      if (!lp.at_end()) throw ParseError(lineNo, lp.peek().column, "end of line");
      haveHeader = true;
      continue;
    }
    if (kw == "form" || kw == "prolongation") {
      bool known = kw == "form";
      if (lp.peek().kind != detail::Token::Ident)
        throw ParseError(lineNo, lp.peek().column, "identifier");
      while (lp.peek().kind == detail::Token::Ident) declare(lp.take().text, known);
      if (!lp.at_end()) throw ParseError(lineNo, lp.peek().column, "identifier");
    } else if (kw == "ideal") {
      if (lp.peek().kind != detail::Token::Ident)
        throw ParseError(lineNo, lp.peek().column, "identifier");
      while (lp.peek().kind == detail::Token::Ident)
        p.idealGenerators.push_back(symbol_index(lp.take().text, lineNo));
      if (!lp.at_end()) throw ParseError(lineNo, lp.peek().column, "identifier");
    } else if (kw == "closed") {
      std::string name = lp.expect_ident();
      if (p.closedMarks.count(name)) throw DuplicateDeclaration(name);
      lp.expect_punct("=");
      KForm<Rat> f(1);
      bool first = true;
      for (;;) {
        bool neg = false;
        if (!first) {
          if (lp.accept_punct("+")) {
          } else if (lp.accept_punct("-")) {
            neg = true;
          } else {
            break;
          }
        }
        auto [c, ix] = parse_scaled_ident(lp, neg);
        f.add_term({ix}, c);
        first = false;
      }
      if (!lp.at_end()) throw ParseError(lineNo, lp.peek().column, "term");
      f.nsym = 0;  // fixed after the full parse
      p.closedMarks[name] = std::move(f);
    } else if (kw == "d") {
      std::string name = lp.expect_ident();
      int ix = symbol_index(name, lineNo);
      if (!p.symbols[static_cast<std::size_t>(ix)].knownDifferential)
        throw Error("differential declared for prolongation symbol '" + name +
                    "' at line " + std::to_string(lineNo));
      if (p.table.entries.count(ix)) throw DuplicateDeclaration(name);
      lp.expect_punct("=");
      KForm<Rat> f(2);
      if (lp.peek().kind == detail::Token::Number && lp.peek().text == "0") {
        lp.take();
      } else {
        bool first = true;
        for (;;) {
          bool neg = false;
          if (!first) {
            if (lp.accept_punct("+")) {
            } else if (lp.accept_punct("-")) {
              neg = true;
            } else {
              break;
            }
          }
          auto [c, a] = parse_scaled_ident(lp, neg);
          lp.expect_punct("^");
          int b = symbol_index(lp.expect_ident(), lineNo);
          f.add_term({a, b}, c);
          first = false;
        }
      }
      if (!lp.at_end()) throw ParseError(lineNo, lp.peek().column, "term");
      p.table.entries[ix] = std::move(f);
    } else {
      throw ParseError(lineNo, 1, "declaration keyword");
    }
  }
  if (!haveHeader) throw ParseError(1, 1, "'algebra'");

  int n = p.nsym();
  p.table.names.clear();
  for (const auto& s : p.symbols) p.table.names.push_back(s.name);
  for (auto& [_, f] : p.table.entries) f.nsym = n;
  for (auto& [_, f] : p.closedMarks) f.nsym = n;
  return p;
}

inline std::string form_str_dsl(const KForm<Rat>& f,
                                const std::vector<std::string>& names) {
  if (f.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : f.terms) {
    Rat mag = c < 0 ? Rat(-c) : c;
    std::string body;
    if (mag != 1) body = rat_str(mag) + " * ";
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) body += " ^ ";
      body += names[static_cast<std::size_t>(idx[i])];
    }
    if (first)
      out = (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

inline std::string serialize_presentation(const AlgebraPresentation& p) {
  std::string out = "algebra " + p.name + "\n";
  std::string forms, prols;
  for (const auto& s : p.symbols)
    (s.knownDifferential ? forms : prols) += " " + s.name;
  if (!forms.empty()) out += "form" + forms + "\n";
  if (!prols.empty()) out += "prolongation" + prols + "\n";
  if (!p.idealGenerators.empty()) {
    out += "ideal";
    for (int i : p.idealGenerators)
      out += " " + p.symbols[static_cast<std::size_t>(i)].name;
    out += "\n";
  }
  for (const auto& [name, f] : p.closedMarks)
    out += "closed " + name + " = " + form_str_dsl(f, p.table.names) + "\n";
  for (const auto& s : p.symbols) {
    auto it = p.table.entries.find(s.index);
    if (it == p.table.entries.end()) continue;
    out += "d " + s.name + " = " + form_str_dsl(it->second, p.table.names) + "\n";
  }
  return out;
}

inline ValidationReport validate_presentation(const AlgebraPresentation& p) {
  ValidationReport r;
  r.compat = check_compatibility(p.table, p.unknownSymbols(), p.nsym());
  r.pass = r.compat.pass;
  for (const auto& [name, f] : p.closedMarks) {
    KForm<Rat> res = exterior_derivative(f, r.compat.prolonged);
    if (!res.is_zero()) r.pass = false;
    r.closedResiduals[name] = std::move(res);
  }
  return r;
}

}  // namespace coframe
