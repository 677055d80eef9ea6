#pragma once

#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "coframe/exterior.hpp"

namespace coframe {

// Report of the d(d omega_i) = 0 check. For presentations with prolongation
// (unknown-differential) symbols the check asserts EXISTENCE of 2-form
// differentials for those symbols making every d(d omega_i) vanish: the
// conditions form a sparse linear system over the rationals. `prolonged` is
// the structure table augmented with the deterministic particular solution
// (free variables zero); residuals are d(d omega_i) evaluated against it, so
// they vanish exactly when the generator's conditions are resolvable.
struct CompatibilityReport {
  std::map<int, KForm<Rat>> perGenerator;  // residual 3-forms, known generators
  bool pass = false;
  StructureTable prolonged;
};

namespace detail {

inline std::optional<std::pair<Tuple, int>> canon_tuple(Tuple idx) {
  int sign = 1;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1]) return std::nullopt;
  return std::make_pair(std::move(idx), sign);
}

}  // namespace detail

inline CompatibilityReport check_compatibility(
    const StructureTable& table, const std::vector<int>& unknownSymbols,
    int nsym) {
  using Var = std::tuple<int, int, int>;  // (unknown symbol, a, b) with a < b
  std::set<int> unknown(unknownSymbols.begin(), unknownSymbols.end());

  // Assemble d(d omega_g) = K + L.x per generator, keyed by 3-tuples.
  std::map<int, std::map<Tuple, Rat>> K;
  std::map<int, std::map<Tuple, std::map<Var, Rat>>> L;
  for (const auto& [g, F] : table.entries) {
    auto& Kg = K[g];
    auto& Lg = L[g];
    for (const auto& [idx, c] : F.terms) {
      for (std::size_t pos = 0; pos < idx.size(); ++pos) {
        int gen = idx[pos];
        Rat sc = pos % 2 ? Rat(-c) : c;
        Tuple rest;
        for (std::size_t j = 0; j < idx.size(); ++j)
          if (j != pos) rest.push_back(idx[j]);
        if (unknown.count(gen)) {
          for (int a = 0; a < nsym; ++a)
            for (int b = a + 1; b < nsym; ++b) {
              Tuple full = {a, b};
              full.insert(full.end(), rest.begin(), rest.end());
              auto cn = detail::canon_tuple(std::move(full));
              if (!cn) continue;
              Rat v = cn->second == 1 ? sc : Rat(-sc);
              auto& cell = Lg[cn->first][Var(gen, a, b)];
              cell += v;
              if (cell == 0) Lg[cn->first].erase(Var(gen, a, b));
            }
        } else {
          auto it = table.entries.find(gen);
          if (it == table.entries.end())
            throw UnknownDifferential(table.name_of(gen));
          for (const auto& [didx, dc] : it->second.terms) {
            Tuple full = didx;
            full.insert(full.end(), rest.begin(), rest.end());
            auto cn = detail::canon_tuple(std::move(full));
            if (!cn) continue;
            Rat v = sc * dc * cn->second;
            auto& cell = Kg[cn->first];
            cell += v;
            if (cell == 0) Kg.erase(cn->first);
          }
        }
      }
    }
  }

  // Solve L.x = -K by deterministic sparse elimination; free variables zero.
  std::map<Var, std::pair<std::map<Var, Rat>, Rat>> pivots;
  for (const auto& [g, Lg] : L) {
    std::set<Tuple> keys;
    for (const auto& [t, _] : Lg) keys.insert(t);
    for (const auto& [t, _] : K[g]) keys.insert(t);
    for (const auto& t : keys) {
      std::map<Var, Rat> row;
      auto lit = Lg.find(t);
      if (lit != Lg.end()) row = lit->second;
      Rat rhs(0);
      auto kit = K[g].find(t);
      if (kit != K[g].end()) rhs = -kit->second;
      // reduce against existing pivots
      for (;;) {
        auto hit = row.end();
        for (auto it = row.begin(); it != row.end(); ++it)
          if (pivots.count(it->first)) {
            hit = it;
            break;
          }
        if (hit == row.end()) break;
        Rat f = hit->second;
        const auto& [prow, prhs] = pivots.at(hit->first);
        row.erase(hit);
        for (const auto& [v, c] : prow) {
          auto& cell = row[v];
          cell -= f * c;
          if (cell == 0) row.erase(v);
        }
        rhs -= f * prhs;
      }
      if (row.empty()) continue;  // rhs != 0 -> inconsistent; shows in residual
      Var pv = row.begin()->first;
      Rat pc = row.begin()->second;
      row.erase(row.begin());
      std::map<Var, Rat> nrow;
      for (const auto& [v, c] : row) nrow[v] = c / pc;
      pivots[pv] = {std::move(nrow), rhs / pc};
    }
  }

  // Back-substitute (free variables zero).
  std::map<Var, Rat> value;
  std::function<Rat(const Var&)> val = [&](const Var& v) -> Rat {
    auto it = value.find(v);
    if (it != value.end()) return it->second;
    auto pit = pivots.find(v);
    if (pit == pivots.end()) return value[v] = Rat(0);
    Rat acc = pit->second.second;
    for (const auto& [w, c] : pit->second.first) acc -= c * val(w);
    return value[v] = acc;
  };

  CompatibilityReport rep;
  rep.prolonged = table;
  for (int u : unknownSymbols) rep.prolonged.entries[u] = KForm<Rat>(2, nsym);
  for (const auto& [v, _] : pivots) {
    Rat x = val(v);
    if (x == 0) continue;
    auto [u, a, b] = v;
    rep.prolonged.entries[u].add_term({a, b}, x);
  }

  rep.pass = true;
  for (const auto& [g, F] : table.entries) {
    // F is d(omega_g); the residual d(d omega_g) = d(F).
    KForm<Rat> res = exterior_derivative(F, rep.prolonged);
    if (!res.is_zero()) rep.pass = false;
    rep.perGenerator[g] = std::move(res);
  }
  return rep;
}

}  // namespace coframe
