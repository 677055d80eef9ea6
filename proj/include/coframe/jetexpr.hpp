#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coframe/rational.hpp"

namespace coframe {

// Atom universe for jet-space expressions: independent variables, jets of
// the dependent variable (created on demand by multi-index), a single
// nonlocal tower along one fiber direction, and free parameters.
struct JetAtom {
  enum Kind { Independent, Jet, Nonlocal, Parameter } kind;
  std::string name;
  int id = 0;
  int indep = -1;               // Independent: position among declared vars
  std::vector<int> multiIndex;  // Jet: derivative counts per independent var
  int order = 0;                // Nonlocal: number of fiber derivatives
};

struct JetUniverse {
  std::vector<std::string> indepNames;
  std::string dependent;
  std::string nonlocalName;  // empty if none
  int fiber = -1;            // index into indepNames
  std::vector<JetAtom> atoms;
  std::map<std::string, int> byName;

  int add_atom(JetAtom a) {
    a.id = static_cast<int>(atoms.size());
    byName[a.name] = a.id;
    atoms.push_back(std::move(a));
    return static_cast<int>(atoms.size()) - 1;
  }

  int declare_independent(const std::string& n) {
    if (byName.count(n)) throw DuplicateDeclaration(n);
    JetAtom a;
    a.kind = JetAtom::Independent;
    a.name = n;
    a.indep = static_cast<int>(indepNames.size());
    indepNames.push_back(n);
    return add_atom(std::move(a));
  }
  void declare_dependent(const std::string& n) {
    if (!dependent.empty()) throw DuplicateDeclaration(n);
    dependent = n;
  }
  int declare_parameter(const std::string& n) {
    if (byName.count(n)) throw DuplicateDeclaration(n);
    JetAtom a;
    a.kind = JetAtom::Parameter;
    a.name = n;
    return add_atom(std::move(a));
  }
  void declare_nonlocal(const std::string& n, const std::string& fiberVar) {
    if (!nonlocalName.empty()) throw DuplicateDeclaration(n);
    nonlocalName = n;
    auto it = std::find(indepNames.begin(), indepNames.end(), fiberVar);
    if (it == indepNames.end()) throw UndeclaredSymbol(fiberVar);
    fiber = static_cast<int>(it - indepNames.begin());
  }

  std::string jet_name(const std::vector<int>& mi) const {
    std::string suffix;
    for (std::size_t i = 0; i < mi.size(); ++i)
      for (int k = 0; k < mi[i]; ++k) suffix += indepNames[i];
    return suffix.empty() ? dependent : dependent + "_" + suffix;
  }

  int jet(const std::vector<int>& mi) {
    if (dependent.empty()) throw UndeclaredSymbol("<dependent>");
    std::string n = jet_name(mi);
    auto it = byName.find(n);
    if (it != byName.end()) return it->second;
    JetAtom a;
    a.kind = JetAtom::Jet;
    a.name = n;
    a.multiIndex = mi;
    return add_atom(std::move(a));
  }

  int qjet(int order) {
    if (nonlocalName.empty()) throw UndeclaredSymbol("<nonlocal>");
    std::string n = nonlocalName;
    if (order > 0) {
      n += "_";
      for (int k = 0; k < order; ++k) n += indepNames[static_cast<std::size_t>(fiber)];
    }
    auto it = byName.find(n);
    if (it != byName.end()) return it->second;
    JetAtom a;
    a.kind = JetAtom::Nonlocal;
    a.name = n;
    a.order = order;
    return add_atom(std::move(a));
  }

  // Resolve an identifier; jets and nonlocal fiber jets come into existence
  // on demand (canonical spelling only), everything else must be declared.
  int resolve(const std::string& n) {
    auto it = byName.find(n);
    if (it != byName.end()) return it->second;
    auto us = n.find('_');
    std::string head = n.substr(0, us == std::string::npos ? n.size() : us);
    std::string tail = us == std::string::npos ? "" : n.substr(us + 1);
    if (head == dependent && !dependent.empty()) {
      std::vector<int> mi(indepNames.size(), 0);
      std::string canon;
      for (char ch : tail) {
        auto vit = std::find_if(indepNames.begin(), indepNames.end(),
                                [&](const std::string& v) {
                                  return v.size() == 1 && v[0] == ch;
                                });
        if (vit == indepNames.end()) throw UndeclaredSymbol(n);
        ++mi[static_cast<std::size_t>(vit - indepNames.begin())];
      }
      if (jet_name(mi) != n) throw UndeclaredSymbol(n);
      return jet(mi);
    }
    if (head == nonlocalName && !nonlocalName.empty()) {
      const std::string& f = indepNames[static_cast<std::size_t>(fiber)];
      for (char ch : tail)
        if (f.size() != 1 || ch != f[0]) throw UndeclaredSymbol(n);
      return qjet(static_cast<int>(tail.size()));
    }
    throw UndeclaredSymbol(n);
  }

  const JetAtom& atom(int id) const {
    return atoms[static_cast<std::size_t>(id)];
  }
};

// One monomial: rational powers of atoms × integer powers of ln(atom) ×
// exp(rational-linear combination of atoms). No zero exponents stored.
struct Mono {
  std::map<int, Rat> pw;
  std::map<int, int> lg;
  std::map<int, Rat> ex;

  bool operator<(const Mono& o) const {
    if (pw != o.pw) return pw < o.pw;
    if (lg != o.lg) return lg < o.lg;
    return ex < o.ex;
  }
  bool operator==(const Mono& o) const {
    return pw == o.pw && lg == o.lg && ex == o.ex;
  }
};

// Canonical sum of monomials with rational coefficients; the closed
// expression class for every coordinate formula handled by the tool.
struct JetExpr {
  std::map<Mono, Rat> t;

  JetExpr() = default;
  explicit JetExpr(const Rat& c) {
    if (c != 0) t[Mono{}] = c;
  }
  static JetExpr atom(int id) {
    JetExpr e;
    Mono m;
    m.pw[id] = Rat(1);
    e.t[m] = Rat(1);
    return e;
  }

  bool is_zero() const { return t.empty(); }
  bool operator==(const JetExpr& o) const { return t == o.t; }
  bool operator!=(const JetExpr& o) const { return !(*this == o); }

  void add_mono(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto& cell = t[m];
    cell += c;
    if (cell == 0) t.erase(m);
  }
};

inline JetExpr operator+(const JetExpr& a, const JetExpr& b) {
  JetExpr r = a;
  for (const auto& [m, c] : b.t) r.add_mono(m, c);
  return r;
}
inline JetExpr operator-(const JetExpr& a) {
  JetExpr r;
  for (const auto& [m, c] : a.t) r.t[m] = -c;
  return r;
}
inline JetExpr operator-(const JetExpr& a, const JetExpr& b) {
  return a + (-b);
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r = a;
  for (const auto& [id, p] : b.pw) {
    auto& cell = r.pw[id];
    cell += p;
    if (cell == 0) r.pw.erase(id);
  }
  for (const auto& [id, k] : b.lg) {
    auto& cell = r.lg[id];
    cell += k;
    if (cell == 0) r.lg.erase(id);
  }
  for (const auto& [id, c] : b.ex) {
    auto& cell = r.ex[id];
    cell += c;
    if (cell == 0) r.ex.erase(id);
  }
  return r;
}

inline JetExpr operator*(const JetExpr& a, const JetExpr& b) {
  JetExpr r;
  for (const auto& [ma, ca] : a.t)
    for (const auto& [mb, cb] : b.t) r.add_mono(mono_mul(ma, mb), ca * cb);
  return r;
}

inline JetExpr scale(const JetExpr& a, const Rat& s) {
  JetExpr r;
  if (s == 0) return r;
  for (const auto& [m, c] : a.t) r.t[m] = c * s;
  return r;
}

namespace detail {
inline Rat rat_pow_int(const Rat& base, long n) {
  if (n == 0) return Rat(1);
  bool inv = n < 0;
  unsigned long k = static_cast<unsigned long>(inv ? -n : n);
  Rat acc(1), b = base;
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (inv) {
    if (acc == 0) throw UnsupportedShape("inverse of zero");
    acc = Rat(1) / acc;
  }
  return acc;
}
}  // namespace detail

// e^p for rational p. Non-negative integer p works on any expression;
// otherwise the expression must be a single monomial whose coefficient
// stays rational under the power (coefficient ±1 or integer exponent).
inline JetExpr pow_rat(const JetExpr& e, const Rat& p) {
  if (p == 0) return JetExpr(Rat(1));
  if (is_integer(p) && p > 0 && e.t.size() != 1) {
    JetExpr acc(Rat(1));
    long n = p.get_num().get_si();
    for (long i = 0; i < n; ++i) acc = acc * e;
    return acc;
  }
  if (e.t.size() != 1)
    throw UnsupportedShape("non-monomial base under a non-polynomial power");
  const auto& [m, c] = *e.t.begin();
  Rat nc;
  if (is_integer(p)) {
    nc = detail::rat_pow_int(c, p.get_num().get_si());
  } else if (c == 1) {
    nc = Rat(1);
  } else {
    throw UnsupportedShape("fractional power of a non-unit coefficient");
  }
  Mono r;
  for (const auto& [id, q] : m.pw) r.pw[id] = q * p;
  for (const auto& [id, k] : m.lg) {
    Rat nk = Rat(k) * p;
    if (!is_integer(nk))
      throw UnsupportedShape("fractional power of a logarithm");
    r.lg[id] = static_cast<int>(nk.get_num().get_si());
  }
  for (const auto& [id, q] : m.ex) r.ex[id] = q * p;
  JetExpr out;
  out.add_mono(r, nc);
  return out;
}

// ln(e): e must be a single monomial with coefficient 1 and no logarithm
// part; yields sum of p·ln(atom) plus the exponent's linear combination.
inline JetExpr ln_expr(const JetExpr& e) {
  if (e.t.size() != 1) throw UnsupportedShape("ln of a sum");
  const auto& [m, c] = *e.t.begin();
  if (c != 1) throw UnsupportedShape("ln of a non-unit coefficient");
  if (!m.lg.empty()) throw UnsupportedShape("ln of a logarithm");
  JetExpr r;
  for (const auto& [id, p] : m.pw) {
    Mono lm;
    lm.lg[id] = 1;
    r.add_mono(lm, p);
  }
  for (const auto& [id, q] : m.ex) {
    Mono am;
    am.pw[id] = Rat(1);
    r.add_mono(am, q);
  }
  return r;
}

// exp(e): e must be a rational-linear combination of atoms (no constant
// term, no logs, no exponentials, no higher powers).
inline JetExpr exp_expr(const JetExpr& e) {
  Mono r;
  for (const auto& [m, c] : e.t) {
    if (!m.lg.empty() || !m.ex.empty() || m.pw.size() != 1 ||
        m.pw.begin()->second != 1)
      throw UnsupportedShape("exp of a non-linear expression");
    r.ex[m.pw.begin()->first] = c;
  }
  JetExpr out;
  out.add_mono(r, Rat(1));
  return out;
}

inline JetExpr partial_derivative(const JetExpr& e, int a) {
  JetExpr r;
  for (const auto& [m, c] : e.t) {
    auto pit = m.pw.find(a);
    if (pit != m.pw.end()) {
      Mono n = m;
      if (pit->second == 1)
        n.pw.erase(a);
      else
        n.pw[a] = pit->second - 1;
      r.add_mono(n, c * pit->second);
    }
    auto lit = m.lg.find(a);
    if (lit != m.lg.end()) {
      Mono n = m;
      if (lit->second == 1)
        n.lg.erase(a);
      else
        n.lg[a] = lit->second - 1;
      auto& cell = n.pw[a];
      cell -= 1;
      if (cell == 0) n.pw.erase(a);
      r.add_mono(n, c * lit->second);
    }
    auto eit = m.ex.find(a);
    if (eit != m.ex.end()) r.add_mono(m, c * eit->second);
  }
  return r;
}

// Replace every occurrence of atom a by `value`, expanding polynomial
// occurrences multinomially; power/log/exp occurrences require `value` of
// the matching admissible shape (errors propagate from pow_rat/ln/exp).
inline JetExpr substitute_atom(const JetExpr& e, int a, const JetExpr& value) {
  JetExpr r;
  for (const auto& [m, c] : e.t) {
    Mono base = m;
    JetExpr factor(Rat(1));
    auto pit = base.pw.find(a);
    if (pit != base.pw.end()) {
      Rat p = pit->second;
      base.pw.erase(a);
      factor = factor * pow_rat(value, p);
    }
    auto lit = base.lg.find(a);
    if (lit != base.lg.end()) {
      int k = lit->second;
      base.lg.erase(a);
      if (k < 0) throw UnsupportedShape("negative logarithm power");
      JetExpr L = ln_expr(value);
      for (int i = 0; i < k; ++i) factor = factor * L;
    }
    auto eit = base.ex.find(a);
    if (eit != base.ex.end()) {
      Rat q = eit->second;
      base.ex.erase(a);
      factor = factor * exp_expr(scale(value, q));
    }
    JetExpr term;
    term.add_mono(base, c);
    r = r + term * factor;
  }
  return r;
}

inline std::vector<int> atoms_of(const JetExpr& e) {
  std::set<int> s;
  for (const auto& [m, _] : e.t) {
    for (const auto& [id, __] : m.pw) s.insert(id);
    for (const auto& [id, __] : m.lg) s.insert(id);
    for (const auto& [id, __] : m.ex) s.insert(id);
  }
  return {s.begin(), s.end()};
}

// Canonical name-based rendering; identical expressions in different atom
// universes render identically, so string equality is cross-universe
// expression equality.
inline std::string jet_expr_str(const JetExpr& e, const JetUniverse& u) {
  if (e.is_zero()) return "0";
  auto mono_body = [&](const Mono& m) {
    std::vector<std::string> parts;
    std::map<std::string, Rat> pw;
    for (const auto& [id, p] : m.pw) pw[u.atom(id).name] = p;
    for (const auto& [name, p] : pw) {
      std::string s = name;
      if (p != 1) {
        std::string ps = rat_str(p);
        s += "^" + (ps.find('-') != std::string::npos ||
                            ps.find('/') != std::string::npos
                        ? "(" + ps + ")"
                        : ps);
      }
      parts.push_back(s);
    }
    std::map<std::string, int> lg;
    for (const auto& [id, k] : m.lg) lg[u.atom(id).name] = k;
    for (const auto& [name, k] : lg) {
      std::string s = "ln(" + name + ")";
      if (k != 1) s += "^" + std::to_string(k);
      parts.push_back(s);
    }
    if (!m.ex.empty()) {
      std::map<std::string, Rat> ex;
      for (const auto& [id, q] : m.ex) ex[u.atom(id).name] = q;
      std::string body;
      bool first = true;
      for (const auto& [name, q] : ex) {
        Rat mag = q < 0 ? Rat(-q) : q;
        std::string piece = (mag == 1 ? "" : rat_str(mag) + "*") + name;
        if (first)
          body = (q < 0 ? "-" : "") + piece;
        else
          body += (q < 0 ? " - " : " + ") + piece;
        first = false;
      }
      parts.push_back("exp(" + body + ")");
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
      out += (i ? "*" : "") + parts[i];
    return out;
  };
  std::vector<std::pair<std::string, Rat>> terms;
  for (const auto& [m, c] : e.t) terms.emplace_back(mono_body(m), c);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  bool first = true;
  for (const auto& [body, c] : terms) {
    Rat mag = c < 0 ? Rat(-c) : c;
    std::string piece;
    if (body.empty())
      piece = rat_str(mag);
    else
      piece = (mag == 1 ? "" : rat_str(mag) + "*") + body;
    if (first)
      out = (c < 0 ? "-" : "") + piece;
    else
      out += (c < 0 ? " - " : " + ") + piece;
    first = false;
  }
  return out;
}

}  // namespace coframe
