#pragma once

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "coframe/jetcalc.hpp"
#include "coframe/presentation.hpp"

namespace coframe {

// Differential form in jet-space coordinates: strictly increasing atom-id
// tuples with JetExpr coefficients.
struct CoordForm {
  int deg = 0;
  std::map<std::vector<int>, JetExpr> terms;

  CoordForm() = default;
  explicit CoordForm(int degree) : deg(degree) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(std::vector<int> idx, JetExpr coeff) {
    if (coeff.is_zero()) return;
    bool neg = false;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
        if (idx[j] > idx[j + 1]) {
          std::swap(idx[j], idx[j + 1]);
          neg = !neg;
        }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return;
    if (neg) coeff = -coeff;
    auto it = terms.find(idx);
    if (it == terms.end()) {
      terms.emplace(std::move(idx), std::move(coeff));
    } else {
      it->second = it->second + coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
};

inline CoordForm operator+(const CoordForm& a, const CoordForm& b) {
  if (a.deg != b.deg) throw DegreeMismatch();
  CoordForm r = a;
  for (const auto& [idx, c] : b.terms) r.add_term(idx, c);
  return r;
}

inline CoordForm operator-(const CoordForm& a, const CoordForm& b) {
  if (a.deg != b.deg) throw DegreeMismatch();
  CoordForm r = a;
  for (const auto& [idx, c] : b.terms) r.add_term(idx, -c);
  return r;
}

inline CoordForm cf_scale(const CoordForm& a, const JetExpr& s) {
  CoordForm r(a.deg);
  for (const auto& [idx, c] : a.terms) r.add_term(idx, c * s);
  return r;
}

inline CoordForm cf_wedge(const CoordForm& a, const CoordForm& b) {
  CoordForm r(a.deg + b.deg);
  for (const auto& [ia, ca] : a.terms)
    for (const auto& [ib, cb] : b.terms) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), ca * cb);
    }
  return r;
}

// Coordinate exterior derivative: d(e·da_1∧…∧da_k) = Σ_b ∂e/∂b db∧da_1∧…
inline CoordForm coord_d(const CoordForm& f) {
  CoordForm r(f.deg + 1);
  for (const auto& [idx, e] : f.terms)
    for (int b : atoms_of(e)) {
      JetExpr de = partial_derivative(e, b);
      if (de.is_zero()) continue;
      std::vector<int> full = {b};
      full.insert(full.end(), idx.begin(), idx.end());
      r.add_term(std::move(full), std::move(de));
    }
  return r;
}

struct CoordExtension {
  Rat lambda;
  std::string zetaName;
  std::string cocycleName;
  CoordForm omega;  // as printed, before definition expansion
};

// Coordinate dictionary for an algebra's printed Maurer-Cartan forms,
// the named 2-cocycles built from them, and extension solutions.
struct MCFixture {
  std::string name;
  std::string algebraName;
  JetUniverse universe;
  std::map<std::string, CoordForm> mc;
  std::vector<std::pair<int, JetExpr>> defines;  // applied in file order
  std::map<std::string, std::vector<std::tuple<Rat, std::string, std::string>>>
      cocycles;
  std::map<std::string, CoordExtension> extensions;
};

namespace detail {

inline CoordForm coord_1form(const ExprValue& v, int lineNo) {
  if (!v.c0.is_zero()) throw ParseError(lineNo, 1, "pure 1-form");
  CoordForm f(1);
  for (const auto& [a, e] : v.c1) f.add_term({a}, e);
  return f;
}

}  // namespace detail

inline MCFixture parse_mcf(const std::string& text) {
  MCFixture fx;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  bool header = false;

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
    auto eq = line.find('=');
    auto fs = fields(eq == std::string::npos ? line : line.substr(0, eq));
    if (fs.empty()) continue;
    if (!header) {
      if (fs[0] != "fixture" || fs.size() != 2)
        throw ParseError(lineNo, 1, "'fixture'");
      fx.name = fs[1];
      header = true;
      continue;
    }
    if (fs[0] == "algebra" && fs.size() == 2) {
      fx.algebraName = fs[1];
    } else if (fs[0] == "independent") {
      for (std::size_t k = 1; k < fs.size(); ++k)
        fx.universe.declare_independent(fs[k]);
    } else if (fs[0] == "dependent" && fs.size() == 2) {
      fx.universe.declare_dependent(fs[1]);
    } else if (fs[0] == "parameter") {
      for (std::size_t k = 1; k < fs.size(); ++k)
        fx.universe.declare_parameter(fs[k]);
    } else if (fs[0] == "nonlocal" && fs.size() == 4 && fs[2] == "fiber") {
      fx.universe.declare_nonlocal(fs[1], fs[3]);
    } else if (fs[0] == "define" && fs.size() == 2 &&
               eq != std::string::npos) {
      int a = fx.universe.resolve(fs[1]);
      fx.defines.emplace_back(
          a, parse_jet_expr(line.substr(eq + 1), fx.universe, lineNo));
    } else if (fs[0] == "mc" && fs.size() == 2 && eq != std::string::npos) {
      if (fx.mc.count(fs[1])) throw DuplicateDeclaration(fs[1]);
      ExprValue v = parse_coord_expr(line.substr(eq + 1), fx.universe, lineNo);
      fx.mc[fs[1]] = detail::coord_1form(v, lineNo);
    } else if (fs[0] == "cocycle" && fs.size() == 2 &&
               eq != std::string::npos) {
      if (fx.cocycles.count(fs[1])) throw DuplicateDeclaration(fs[1]);
      auto toks = detail::lex_line(line.substr(eq + 1), lineNo);
      detail::LineParser lp{toks, 0, lineNo};
      std::vector<std::tuple<Rat, std::string, std::string>> terms;
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
        } else if (lp.accept_punct("-")) {
          neg = true;
        }
        Rat c(neg ? -1 : 1);
        if (lp.peek().kind == detail::Token::Number) {
          c *= parse_rational(lp.take().text);
          lp.expect_punct("*");
        }
        std::string a = lp.expect_ident();
        lp.expect_punct("^");
        std::string b = lp.expect_ident();
        terms.emplace_back(c, a, b);
        first = false;
      }
      if (!lp.at_end()) throw ParseError(lineNo, lp.peek().column, "term");
      fx.cocycles[fs[1]] = std::move(terms);
    } else if (fs[0] == "extension" && fs.size() == 8 &&
               eq != std::string::npos && fs[2] == "lambda" &&
               fs[4] == "zeta" && fs[6] == "cocycle") {
      if (fx.extensions.count(fs[1])) throw DuplicateDeclaration(fs[1]);
      CoordExtension ext;
      ext.lambda = parse_rational(fs[3]);
      ext.zetaName = fs[5];
      ext.cocycleName = fs[7];
      ExprValue v = parse_coord_expr(line.substr(eq + 1), fx.universe, lineNo);
      ext.omega = detail::coord_1form(v, lineNo);
      fx.extensions[fs[1]] = std::move(ext);
    } else {
      throw ParseError(lineNo, 1, "declaration keyword");
    }
  }
  if (!header) throw ParseError(1, 1, "'fixture'");
  return fx;
}

// Apply the fixture's definitions: defined atoms disappear from coefficients
// (substitution) and from differentials (d(a) = Σ_b ∂v/∂b db).
inline CoordForm expand_definitions(const MCFixture& fx, CoordForm f) {
  for (const auto& [a, v] : fx.defines) {
    CoordForm out(f.deg);
    for (const auto& [idx, e] : f.terms) {
      JetExpr se = substitute_atom(e, a, v);
      auto pos = std::find(idx.begin(), idx.end(), a);
      if (pos == idx.end()) {
        out.add_term(idx, std::move(se));
        continue;
      }
      std::vector<int> rest;
      for (int x : idx)
        if (x != a) rest.push_back(x);
      std::size_t slot = static_cast<std::size_t>(pos - idx.begin());
      for (int b : atoms_of(v)) {
        JetExpr dv = partial_derivative(v, b);
        if (dv.is_zero()) continue;
        std::vector<int> nidx = rest;
        nidx.insert(nidx.begin() + static_cast<long>(slot), b);
        out.add_term(std::move(nidx), se * dv);
      }
    }
    f = std::move(out);
  }
  return f;
}

// Coordinate value of a degree-1 abstract cochain (rational combination of
// algebra symbols); symbols without a printed coordinate form are the
// NotVerifiable case.
inline CoordForm eval_abstract_1form(const MCFixture& fx, const KForm<Rat>& f,
                                     const std::vector<std::string>& names) {
  CoordForm r(1);
  for (const auto& [idx, c] : f.terms) {
    const std::string& n = names[static_cast<std::size_t>(idx[0])];
    auto it = fx.mc.find(n);
    if (it == fx.mc.end()) throw NotVerifiable(n);
    r = r + cf_scale(expand_definitions(fx, it->second), JetExpr(c));
  }
  return r;
}

inline CoordForm eval_cocycle(const MCFixture& fx, const std::string& name) {
  auto it = fx.cocycles.find(name);
  if (it == fx.cocycles.end()) throw NotVerifiable(name);
  CoordForm r(2);
  for (const auto& [c, a, b] : it->second) {
    auto ia = fx.mc.find(a), ib = fx.mc.find(b);
    if (ia == fx.mc.end()) throw NotVerifiable(a);
    if (ib == fx.mc.end()) throw NotVerifiable(b);
    r = r + cf_scale(cf_wedge(expand_definitions(fx, ia->second),
                              expand_definitions(fx, ib->second)),
                     JetExpr(c));
  }
  return r;
}

// residual = d(coordinate form of `symbol`) - structure-table right side
// evaluated in coordinates; zero exactly when the printed forms satisfy the
// structure equation.
inline CoordForm verify_structure_equation_in_coords(
    const MCFixture& fx, const AlgebraPresentation& p,
    const std::string& symbol) {
  auto self = fx.mc.find(symbol);
  if (self == fx.mc.end()) throw NotVerifiable(symbol);
  auto sit = p.byName.find(symbol);
  if (sit == p.byName.end()) throw UndeclaredSymbol(symbol);
  auto tit = p.table.entries.find(sit->second);
  if (tit == p.table.entries.end()) throw UnknownDifferential(symbol);
  CoordForm rhs(2);
  for (const auto& [idx, c] : tit->second.terms) {
    const std::string& na = p.table.names[static_cast<std::size_t>(idx[0])];
    const std::string& nb = p.table.names[static_cast<std::size_t>(idx[1])];
    auto ia = fx.mc.find(na), ib = fx.mc.find(nb);
    if (ia == fx.mc.end()) throw NotVerifiable(na);
    if (ib == fx.mc.end()) throw NotVerifiable(nb);
    rhs = rhs + cf_scale(cf_wedge(expand_definitions(fx, ia->second),
                                  expand_definitions(fx, ib->second)),
                         JetExpr(c));
  }
  return coord_d(expand_definitions(fx, self->second)) - rhs;
}

inline CoordForm verify_closed_in_coords(const MCFixture& fx,
                                         const AlgebraPresentation& p,
                                         const std::string& zetaName) {
  auto it = p.closedMarks.find(zetaName);
  if (it == p.closedMarks.end()) throw UndeclaredSymbol(zetaName);
  return coord_d(eval_abstract_1form(fx, it->second, p.table.names));
}

// residual of d(omega) + lambda·zeta∧omega - Omega in coordinates.
inline CoordForm verify_extension_in_coords(const MCFixture& fx,
                                            const AlgebraPresentation& p,
                                            const std::string& extName) {
  auto it = fx.extensions.find(extName);
  if (it == fx.extensions.end()) throw UndeclaredSymbol(extName);
  const CoordExtension& ext = it->second;
  auto zit = p.closedMarks.find(ext.zetaName);
  if (zit == p.closedMarks.end()) throw UndeclaredSymbol(ext.zetaName);
  CoordForm omega = expand_definitions(fx, ext.omega);
  CoordForm zeta = eval_abstract_1form(fx, zit->second, p.table.names);
  CoordForm lhs =
      coord_d(omega) + cf_scale(cf_wedge(zeta, omega), JetExpr(ext.lambda));
  return lhs - eval_cocycle(fx, ext.cocycleName);
}

struct WEExtraction {
  std::string fiberName;
  CoveringSpec spec;  // directions in declaration order
};

// Read a covering system off a Wahlquist-Estabrook-shaped 1-form: divide by
// the (single-monomial) dq coefficient; each independent-variable
// differential contributes q_{x^k} = T_k; a direction whose T equals the
// order-1 fiber jet is the fiber itself and is omitted.
inline WEExtraction extract_wahlquist_estabrook(const CoordForm& omega,
                                                JetUniverse& u) {
  if (omega.deg != 1) throw NotWEShape("degree != 1");
  int q = u.qjet(0);
  auto qit = omega.terms.find({q});
  if (qit == omega.terms.end() || qit->second.t.size() != 1)
    throw NotWEShape("dq coefficient must be a single nonzero monomial");
  JetExpr muInv = pow_rat(qit->second, Rat(-1));
  WEExtraction out;
  out.fiberName = u.indepNames[static_cast<std::size_t>(u.fiber)];
  JetExpr q1 = JetExpr::atom(u.qjet(1));
  std::vector<std::pair<int, JetExpr>> rels;
  for (const auto& [idx, c] : omega.terms) {
    int a = idx[0];
    if (a == q) continue;
    const JetAtom& at = u.atom(a);
    if (at.kind != JetAtom::Independent)
      throw NotWEShape("differential of '" + at.name + "' survives");
    JetExpr T = -(c * muInv);
    if (T == q1) {
      out.fiberName = at.name;
      continue;
    }
    rels.emplace_back(at.indep, std::move(T));
  }
  out.spec.flatRelations = std::move(rels);
  return out;
}

}  // namespace coframe
