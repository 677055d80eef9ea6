#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coframe/poly.hpp"

namespace coframe {

// Scalar tower glue: uniform zero/promotion helpers for Rat, Poly, RatFun.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
  static Rat zero() { return Rat(0); }
  static bool is_zero(const Rat& s) { return s == 0; }
  static Rat from_rat(const Rat& r) { return r; }
};

template <>
struct ScalarOps<Poly> {
  static Poly zero() { return Poly(); }
  static bool is_zero(const Poly& s) { return s.is_zero(); }
  static Poly from_rat(const Rat& r) { return Poly(r); }
};

template <>
struct ScalarOps<RatFun> {
  static RatFun zero() { return RatFun(); }
  static bool is_zero(const RatFun& s) { return s.is_zero(); }
  static RatFun from_rat(const Rat& r) { return RatFun(r); }
};

using Tuple = std::vector<int>;

struct FormSymbol {
  std::string name;
  int index = 0;
  bool knownDifferential = true;
  bool operator==(const FormSymbol& o) const {
    return name == o.name && index == o.index &&
           knownDifferential == o.knownDifferential;
  }
};

// Sparse element of the degree-k exterior power over the coframe.
// Keys are strictly increasing index tuples; no zero coefficients stored.
// nsym identifies the symbol universe (0 = unconstrained scratch form).
template <class S>
struct KForm {
  int deg = 0;
  int nsym = 0;
  std::map<Tuple, S> terms;

  KForm() = default;
  explicit KForm(int degree, int nsym_ = 0) : deg(degree), nsym(nsym_) {}

  bool is_zero() const { return terms.empty(); }

  // Insert with canonical reordering (sort indices, track sign parity;
  // repeated indices annihilate).
  void add_term(Tuple idx, S coeff) {
    if (ScalarOps<S>::is_zero(coeff)) return;
    bool neg = false;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
        if (idx[j] > idx[j + 1]) {
          std::swap(idx[j], idx[j + 1]);
          neg = !neg;
        }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] == idx[i + 1]) return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
      terms.emplace(std::move(idx), neg ? neg_s(coeff) : coeff);
    } else {
      it->second = neg ? sub_s(it->second, coeff) : add_s(it->second, coeff);
      if (ScalarOps<S>::is_zero(it->second)) terms.erase(it);
    }
  }

  bool operator==(const KForm& o) const {
    return deg == o.deg && terms == o.terms;
  }
  bool operator!=(const KForm& o) const { return !(*this == o); }

 private:
  static S add_s(const S& a, const S& b) { return a + b; }
  static S sub_s(const S& a, const S& b) { return a - b; }
  static S neg_s(const S& a) { return -a; }
};

template <class S>
void check_same_universe(const KForm<S>& a, const KForm<S>& b) {
  if (a.nsym && b.nsym && a.nsym != b.nsym) throw MixedPresentation();
}

template <class S>
KForm<S> scale(const KForm<S>& a, const S& c) {
  KForm<S> r(a.deg, a.nsym);
  for (const auto& [idx, v] : a.terms) r.add_term(idx, v * c);
  return r;
}

// a + c*b
template <class S>
KForm<S> add_scale(const KForm<S>& a, const S& c, const KForm<S>& b) {
  if (a.deg != b.deg) throw DegreeMismatch();
  check_same_universe(a, b);
  KForm<S> r = a;
  if (!r.nsym) r.nsym = b.nsym;
  for (const auto& [idx, v] : b.terms) r.add_term(idx, v * c);
  return r;
}

template <class S>
KForm<S> operator+(const KForm<S>& a, const KForm<S>& b) {
  return add_scale(a, ScalarOps<S>::from_rat(Rat(1)), b);
}

template <class S>
KForm<S> operator-(const KForm<S>& a, const KForm<S>& b) {
  return add_scale(a, ScalarOps<S>::from_rat(Rat(-1)), b);
}

template <class S>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b) {
  check_same_universe(a, b);
  KForm<S> r(a.deg + b.deg, a.nsym ? a.nsym : b.nsym);
  for (const auto& [ia, ca] : a.terms)
    for (const auto& [ib, cb] : b.terms) {
      Tuple idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), ca * cb);
    }
  return r;
}

template <class S>
KForm<S> basis_form(int nsym, const Tuple& idx) {
  KForm<S> r(static_cast<int>(idx.size()), nsym);
  r.add_term(idx, ScalarOps<S>::from_rat(Rat(1)));
  return r;
}

inline KForm<Poly> promote(const KForm<Rat>& a) {
  KForm<Poly> r(a.deg, a.nsym);
  for (const auto& [idx, c] : a.terms) r.add_term(idx, Poly(c));
  return r;
}

inline KForm<Rat> eval_lambda(const KForm<Poly>& a, const Rat& x) {
  KForm<Rat> r(a.deg, a.nsym);
  for (const auto& [idx, c] : a.terms) r.add_term(idx, c.eval(x));
  return r;
}

// Structure table: differential of each known generator as a 2-form over the
// coframe. Carries the symbol names so errors can be reported by name.
struct StructureTable {
  std::map<int, KForm<Rat>> entries;
  std::vector<std::string> names;

  std::string name_of(int i) const {
    if (i >= 0 && i < static_cast<int>(names.size())) return names[i];
    return "#" + std::to_string(i);
  }
};

// Antiderivation extension of the structure table to arbitrary degree.
// Scalar coefficients are constants (their differential vanishes).
template <class S>
KForm<S> exterior_derivative(const KForm<S>& a, const StructureTable& t) {
  KForm<S> r(a.deg + 1, a.nsym);
  for (const auto& [idx, c] : a.terms) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      auto it = t.entries.find(idx[pos]);
      if (it == t.entries.end()) throw UnknownDifferential(t.name_of(idx[pos]));
      bool neg = pos % 2 == 1;
      Tuple rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (j != pos) rest.push_back(idx[j]);
      for (const auto& [didx, dc] : it->second.terms) {
        Tuple full = didx;
        full.insert(full.end(), rest.begin(), rest.end());
        S coeff = c * ScalarOps<S>::from_rat(neg ? Rat(-dc) : dc);
        r.add_term(std::move(full), std::move(coeff));
      }
    }
  }
  return r;
}

// d_{lambda zeta} a = d a + lambda * zeta ^ a, applied to the cochain as a
// whole (not distributed over wedge factors).
template <class S>
KForm<S> deformed_derivative(const KForm<S>& a, const S& lambda,
                             const KForm<S>& zeta, const StructureTable& t) {
  if (zeta.deg != 1) throw DegreeMismatch();
  KForm<S> dz = exterior_derivative(zeta, t);
  if (!dz.is_zero()) throw NotClosed("d(zeta) != 0");
  KForm<S> r = exterior_derivative(a, t);
  return add_scale(r, lambda, wedge(zeta, a));
}

}  // namespace coframe
