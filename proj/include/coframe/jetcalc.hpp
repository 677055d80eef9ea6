#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coframe/jetexpr.hpp"

namespace coframe {

// Degree ≤ 1 coordinate expression value used by the shared parser: a
// scalar part plus Σ c1[atom]·d(atom). Products of two degree-1 values are
// rejected here; full wedge products live in the coordinate-form layer.
struct ExprValue {
  JetExpr c0;
  std::map<int, JetExpr> c1;

  bool scalar() const { return c1.empty(); }
};

namespace detail {

struct ExprParser {
  const std::string& s;
  JetUniverse& u;
  bool allowD;
  std::size_t i = 0;
  int lineNo;

  ExprParser(const std::string& text, JetUniverse& univ, bool allowDifferential,
             int line)
      : s(text), u(univ), allowD(allowDifferential), lineNo(line) {}

  void skip() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  }
  bool accept(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(lineNo, static_cast<int>(i) + 1,
                       "'" + std::string(1, c) + "'");
  }
  bool at_end() {
    skip();
    return i >= s.size();
  }

  std::string ident() {
    skip();
    std::size_t j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                            s[j] == '_'))
      ++j;
    if (j == i) throw ParseError(lineNo, static_cast<int>(i) + 1, "identifier");
    std::string r = s.substr(i, j - i);
    i = j;
    return r;
  }

  Rat number() {
    skip();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ParseError(lineNo, static_cast<int>(i) + 1, "number");
    if (j < s.size() && s[j] == '/') {
      ++j;
      std::size_t k = j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == k) throw ParseError(lineNo, static_cast<int>(j) + 1, "denominator");
    }
    Rat r = parse_rational(s.substr(i, j - i));
    i = j;
    return r;
  }

  Rat exponent() {
    if (accept('(')) {
      bool neg = accept('-');
      Rat r = number();
      expect(')');
      return neg ? Rat(-r) : r;
    }
    return number();
  }

  ExprValue primary() {
    skip();
    if (i >= s.size()) throw ParseError(lineNo, static_cast<int>(i) + 1, "operand");
    char c = s[i];
    if (c == '(') {
      ++i;
      ExprValue v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return {JetExpr(number()), {}};
    std::string name = ident();
    if ((name == "exp" || name == "ln") && accept('(')) {
      ExprValue inner = expr();
      expect(')');
      if (!inner.scalar())
        throw UnsupportedShape(name + " of a differential form");
      return {name == "exp" ? exp_expr(inner.c0) : ln_expr(inner.c0), {}};
    }
    if (name == "d" && accept('(')) {
      if (!allowD)
        throw ParseError(lineNo, static_cast<int>(i), "scalar expression");
      int a = u.resolve(ident());
      expect(')');
      ExprValue v;
      v.c1[a] = JetExpr(Rat(1));
      return v;
    }
    return {JetExpr::atom(u.resolve(name)), {}};
  }

  ExprValue power() {
    ExprValue base = primary();
    if (accept('^')) {
      if (!base.scalar()) throw UnsupportedShape("power of a differential form");
      return {pow_rat(base.c0, exponent()), {}};
    }
    return base;
  }

  ExprValue factor() {
    if (accept('-')) {
      ExprValue v = factor();
      v.c0 = -v.c0;
      for (auto& [_, e] : v.c1) e = -e;
      return v;
    }
    return power();
  }

  static ExprValue mul(const ExprValue& a, const ExprValue& b) {
    if (!a.scalar() && !b.scalar())
      throw UnsupportedShape("product of two differentials in a 1-form term");
    const ExprValue& sc = a.scalar() ? a : b;
    const ExprValue& other = a.scalar() ? b : a;
    ExprValue r;
    r.c0 = sc.c0 * other.c0;
    for (const auto& [atom, e] : other.c1) {
      JetExpr p = sc.c0 * e;
      if (!p.is_zero()) r.c1[atom] = std::move(p);
    }
    return r;
  }

  ExprValue term() {
    ExprValue v = factor();
    for (;;) {
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        v = mul(v, factor());
      } else {
        break;
      }
    }
    return v;
  }

  ExprValue expr() {
    ExprValue v = term();
    for (;;) {
      skip();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        bool neg = s[i] == '-';
        ++i;
        ExprValue w = term();
        if (neg) {
          w.c0 = -w.c0;
          for (auto& [_, e] : w.c1) e = -e;
        }
        v.c0 = v.c0 + w.c0;
        for (const auto& [atom, e] : w.c1) {
          auto it = v.c1.find(atom);
          if (it == v.c1.end()) {
            v.c1[atom] = e;
          } else {
            it->second = it->second + e;
            if (it->second.is_zero()) v.c1.erase(it);
          }
        }
      } else {
        break;
      }
    }
    return v;
  }
};

}  // namespace detail

inline JetExpr parse_jet_expr(const std::string& text, JetUniverse& u,
                              int lineNo = 0) {
  detail::ExprParser p(text, u, false, lineNo);
  ExprValue v = p.expr();
  if (!p.at_end())
    throw ParseError(lineNo, static_cast<int>(p.i) + 1, "end of expression");
  return v.c0;
}

inline ExprValue parse_coord_expr(const std::string& text, JetUniverse& u,
                                  int lineNo = 0) {
  detail::ExprParser p(text, u, true, lineNo);
  ExprValue v = p.expr();
  if (!p.at_end())
    throw ParseError(lineNo, static_cast<int>(p.i) + 1, "end of expression");
  return v;
}

// Rewriting rule "solve u_I = rhs": every jet whose multi-index dominates I
// componentwise is rewritten using the total-derivative prolongation of rhs.
struct EquationReduction {
  std::vector<int> solved;  // multi-index of the solved jet
  JetExpr rhs;

  bool matches(const std::vector<int>& mi) const {
    if (mi.size() != solved.size()) return false;
    for (std::size_t k = 0; k < mi.size(); ++k)
      if (mi[k] < solved[k]) return false;
    return true;
  }
};

// Single nonlocal tower covering: for every independent variable except the
// fiber direction, the order-1 fiber jet's derivative is given by a flat
// relation q_{x^k} = T_k. File order of the relations is preserved.
struct CoveringSpec {
  std::vector<std::pair<int, JetExpr>> flatRelations;  // (direction, T_k)

  const JetExpr* relation(int dir) const {
    for (const auto& [d, e] : flatRelations)
      if (d == dir) return &e;
    return nullptr;
  }
};

JetExpr total_derivative(const JetExpr& e, int dir, JetUniverse& u,
                         const EquationReduction* red, const CoveringSpec* cov);

inline JetExpr reduce_mod_equation(JetExpr e, JetUniverse& u,
                                   const EquationReduction& red,
                                   const CoveringSpec* cov = nullptr) {
  std::map<std::vector<int>, JetExpr> repl;
  for (int depth = 0; depth < 100; ++depth) {
    int hit = -1;
    for (int a : atoms_of(e)) {
      const JetAtom& at = u.atom(a);
      if (at.kind == JetAtom::Jet && red.matches(at.multiIndex)) {
        hit = a;
        break;
      }
    }
    if (hit < 0) return e;
    std::vector<int> mi = u.atom(hit).multiIndex;
    auto it = repl.find(mi);
    if (it == repl.end()) {
      JetExpr r = red.rhs;
      for (std::size_t k = 0; k < mi.size(); ++k)
        for (int c = red.solved[k]; c < mi[k]; ++c)
          r = total_derivative(r, static_cast<int>(k), u, nullptr, cov);
      it = repl.emplace(mi, std::move(r)).first;
    }
    e = substitute_atom(e, hit, it->second);
  }
  throw NonTermination();
}

inline JetExpr total_derivative(const JetExpr& e, int dir, JetUniverse& u,
                                const EquationReduction* red,
                                const CoveringSpec* cov) {
  JetExpr out;
  for (int a : atoms_of(e)) {
    JetExpr de = partial_derivative(e, a);
    if (de.is_zero()) continue;
    const JetAtom& at = u.atom(a);
    JetExpr da;
    switch (at.kind) {
      case JetAtom::Independent:
        if (at.indep == dir) da = JetExpr(Rat(1));
        break;
      case JetAtom::Jet: {
        std::vector<int> mi = at.multiIndex;
        ++mi[static_cast<std::size_t>(dir)];
        da = JetExpr::atom(u.jet(mi));
        break;
      }
      case JetAtom::Parameter:
        break;
      case JetAtom::Nonlocal: {
        if (dir == u.fiber) {
          da = JetExpr::atom(u.qjet(at.order + 1));
        } else {
          if (!cov)
            throw MissingCoveringRelation(
                u.indepNames[static_cast<std::size_t>(dir)]);
          const JetExpr* T = cov->relation(dir);
          if (!T)
            throw MissingCoveringRelation(
                u.indepNames[static_cast<std::size_t>(dir)]);
          da = *T;
          for (int k = 0; k < at.order; ++k)
            da = total_derivative(da, u.fiber, u, nullptr, cov);
        }
        break;
      }
    }
    if (!da.is_zero()) out = out + de * da;
  }
  if (red) out = reduce_mod_equation(std::move(out), u, *red, cov);
  return out;
}

struct PairResidual {
  std::string dirA, dirB;  // differentiation happens along dirB then dirA
  JetExpr offShell, onShell;
};

// Commutator residuals of the extended total derivatives applied to the
// nonlocal variable. Convention: for relations in file order (primary
// before secondary), offShell = D_secondary(T_primary) - D_primary(T_secondary);
// fiber pairs compare D_fiber(T_k) with D_k of the order-1 fiber jet.
inline std::vector<PairResidual> covering_compatibility_residual(
    JetUniverse& u, const CoveringSpec& cov, const EquationReduction& red) {
  std::vector<PairResidual> out;
  auto dname = [&](int d) { return u.indepNames[static_cast<std::size_t>(d)]; };
  const auto& rel = cov.flatRelations;
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = i + 1; j < rel.size(); ++j) {
      PairResidual r;
      r.dirA = dname(rel[i].first);
      r.dirB = dname(rel[j].first);
      r.offShell = total_derivative(rel[i].second, rel[j].first, u, nullptr, &cov) -
                   total_derivative(rel[j].second, rel[i].first, u, nullptr, &cov);
      r.onShell = reduce_mod_equation(r.offShell, u, red, &cov);
      out.push_back(std::move(r));
    }
  for (const auto& [d, T] : rel) {
    PairResidual r;
    r.dirA = dname(d);
    r.dirB = dname(u.fiber);
    r.offShell = total_derivative(T, u.fiber, u, nullptr, &cov) -
                 total_derivative(JetExpr::atom(u.qjet(1)), d, u, nullptr, &cov);
    r.onShell = reduce_mod_equation(r.offShell, u, red, &cov);
    out.push_back(std::move(r));
  }
  return out;
}

struct PdeFixture {
  std::string name;
  JetUniverse universe;
  EquationReduction reduction;
  CoveringSpec covering;
};

inline PdeFixture parse_pde(const std::string& text) {
  PdeFixture fx;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  bool header = false, haveSolve = false, haveCovering = false;

  auto fields = [](const std::string& l) {
    std::vector<std::string> out;
    std::istringstream ls(l);
    std::string w;
    while (ls >> w) out.push_back(w);
    return out;
  };

  while (std::getline(in, line)) {
    ++lineNo;
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    auto fs = fields(line);
    if (fs.empty()) continue;
    if (!header) {
      if (fs[0] != "pde" || fs.size() != 2) throw ParseError(lineNo, 1, "'pde'");
      fx.name = fs[1];
      header = true;
      continue;
    }
    if (fs[0] == "independent") {
      for (std::size_t k = 1; k < fs.size(); ++k)
        fx.universe.declare_independent(fs[k]);
    } else if (fs[0] == "dependent") {
      if (fs.size() != 2) throw ParseError(lineNo, 1, "dependent variable");
      fx.universe.declare_dependent(fs[1]);
    } else if (fs[0] == "solve") {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError(lineNo, 1, "'='");
      auto lhsf = fields(line.substr(0, eq));
      if (lhsf.size() != 2) throw ParseError(lineNo, 1, "solved jet");
      int a = fx.universe.resolve(lhsf[1]);
      if (fx.universe.atom(a).kind != JetAtom::Jet)
        throw ParseError(lineNo, 1, "jet coordinate");
      fx.reduction.solved = fx.universe.atom(a).multiIndex;
      fx.reduction.rhs =
          parse_jet_expr(line.substr(eq + 1), fx.universe, lineNo);
      for (int b : atoms_of(fx.reduction.rhs)) {
        const JetAtom& at = fx.universe.atom(b);
        if (at.kind == JetAtom::Jet && fx.reduction.matches(at.multiIndex))
          throw ParseError(lineNo, 1, "reduced right-hand side");
      }
      haveSolve = true;
    } else if (fs[0] == "covering") {
      if (fs.size() != 4 || fs[2] != "fiber")
        throw ParseError(lineNo, 1, "'covering NAME fiber VAR'");
      fx.universe.declare_nonlocal(fs[1], fs[3]);
      haveCovering = true;
    } else if (haveCovering && line.find('=') != std::string::npos) {
      auto eq = line.find('=');
      auto lhsf = fields(line.substr(0, eq));
      if (lhsf.size() != 1) throw ParseError(lineNo, 1, "relation name");
      const std::string& lhs = lhsf[0];
      auto us = lhs.find('_');
      if (us == std::string::npos ||
          lhs.substr(0, us) != fx.universe.nonlocalName)
        throw ParseError(lineNo, 1, "nonlocal jet on the left");
      std::string dirName = lhs.substr(us + 1);
      auto it = std::find(fx.universe.indepNames.begin(),
                          fx.universe.indepNames.end(), dirName);
      if (it == fx.universe.indepNames.end()) throw UndeclaredSymbol(dirName);
      int dir = static_cast<int>(it - fx.universe.indepNames.begin());
      if (dir == fx.universe.fiber)
        throw ParseError(lineNo, 1, "non-fiber direction");
      if (fx.covering.relation(dir)) throw DuplicateDeclaration(lhs);
      fx.covering.flatRelations.emplace_back(
          dir, parse_jet_expr(line.substr(eq + 1), fx.universe, lineNo));
    } else {
      throw ParseError(lineNo, 1, "declaration keyword");
    }
  }
  if (!header) throw ParseError(1, 1, "'pde'");
  if (!haveSolve) throw ParseError(lineNo, 1, "'solve' line");
  if (haveCovering) {
    for (std::size_t d = 0; d < fx.universe.indepNames.size(); ++d)
      if (static_cast<int>(d) != fx.universe.fiber &&
          !fx.covering.relation(static_cast<int>(d)))
        throw MissingCoveringRelation(fx.universe.indepNames[d]);
  }
  return fx;
}

}  // namespace coframe
