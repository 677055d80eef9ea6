#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "coframe/poly.hpp"

namespace coframe {

// Sparse matrix stored by columns: cols[j] maps row index -> entry.
template <class F>
struct ColMat {
  int nrows = 0;
  std::vector<std::map<int, F>> cols;
  int ncols() const { return static_cast<int>(cols.size()); }
};

// Incremental column eliminator over an exact field with combination
// tracking: each accepted pivot column is stored reduced, together with its
// expression in terms of the columns fed in. Deterministic pivoting: the
// pivot row of a column is its smallest-index nonzero row.
template <class F>
struct Eliminator {
  struct PivCol {
    std::map<int, F> col;    // reduced column
    std::map<int, F> combo;  // combination of input columns producing it
    int pivRow;
  };
  std::vector<PivCol> pivots;
  std::map<int, int> pivRowToIdx;
  int fed = 0;

  // Reduce (col, combo) in place against the accepted pivots.
  void reduce(std::map<int, F>& col, std::map<int, F>& combo) const {
    while (!col.empty()) {
      int r = col.begin()->first;
      auto it = pivRowToIdx.find(r);
      if (it == pivRowToIdx.end()) return;
      const PivCol& p = pivots[static_cast<std::size_t>(it->second)];
      F f = col.begin()->second / p.col.at(r);
      for (const auto& [rr, v] : p.col) {
        auto cit = col.find(rr);
        F nv = (cit == col.end() ? F(Rat(0)) : cit->second) - f * v;
        if (is_zero_f(nv))
          col.erase(rr);
        else
          col[rr] = nv;
      }
      for (const auto& [jj, v] : p.combo) {
        auto cit = combo.find(jj);
        F nv = (cit == combo.end() ? F(Rat(0)) : cit->second) - f * v;
        if (is_zero_f(nv))
          combo.erase(jj);
        else
          combo[jj] = nv;
      }
    }
  }

  // Feed a column; returns true if it was independent (became a pivot).
  // If dependent, `kernelCombo` (when non-null) receives the combination of
  // previously fed columns equal to this column.
  bool feed(std::map<int, F> col, std::map<int, F>* kernelCombo = nullptr) {
    int j = fed++;
    std::map<int, F> combo;
    combo[j] = F(Rat(1));
    reduce(col, combo);
    if (col.empty()) {
      if (kernelCombo) *kernelCombo = std::move(combo);
      return false;
    }
    int pr = col.begin()->first;
    pivRowToIdx[pr] = static_cast<int>(pivots.size());
    pivots.push_back({std::move(col), std::move(combo), pr});
    return true;
  }

  int rank() const { return static_cast<int>(pivots.size()); }

  // Solve span(previously fed columns) ∋ target; returns the coefficient
  // combination if solvable.
  std::optional<std::map<int, F>> solve(std::map<int, F> target) const {
    std::map<int, F> combo;
    reduce(target, combo);
    if (!target.empty()) return std::nullopt;
    // combo currently expresses 0 = target - sum c_j col_j  (no own index
    // since target was not fed); so target = -combo over fed columns.
    std::map<int, F> out;
    for (const auto& [j, c] : combo) out[j] = -c;
    return out;
  }

 private:
  static bool is_zero_f(const F& v) { return v == F(Rat(0)); }
};

// Rank and a kernel basis (combinations over column indices).
template <class F>
std::pair<int, std::vector<std::map<int, F>>> col_echelon(const ColMat<F>& m) {
  Eliminator<F> e;
  std::vector<std::map<int, F>> kernel;
  for (const auto& col : m.cols) {
    std::map<int, F> kc;
    if (!e.feed(col, &kc)) kernel.push_back(std::move(kc));
  }
  return {e.rank(), std::move(kernel)};
}

struct RankProfile {
  int genericRank = 0;
  std::set<Poly> pivotPolys;
};

// Fraction-free elimination over Q[lambda]: rows are cross-multiplied by the
// pivot entry and rescaled by their rational content; extracted polynomial
// row contents join the pivot set (their roots are candidate rank-drop
// points too). genericRank is the rank over the fraction field; the rank at
// a specialization can only drop at a rational root of some recorded pivot.
inline RankProfile rank_profile(const ColMat<Poly>& m) {
  RankProfile out;
  // row-major copy
  std::map<int, std::map<int, Poly>> rows;
  for (int j = 0; j < m.ncols(); ++j)
    for (const auto& [r, v] : m.cols[static_cast<std::size_t>(j)])
      if (!v.is_zero()) rows[r][j] = v;

  auto strip_content = [&out](std::map<int, Poly>& row) {
    if (row.empty()) return;
    Poly pc;
    for (const auto& [_, v] : row) pc = poly_gcd(pc, v);
    if (pc.degree() > 0) {
      out.pivotPolys.insert(poly_monic(pc));
      for (auto& [_, v] : row) v = poly_divexact(v, pc);
    }
    Rat c(0);
    mpz_class num(0), den(1);
    for (const auto& [_, v] : row)
      for (const auto& x : v.c) {
        mpz_class xn = abs(x.get_num());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), xn.get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
      }
    if (num != 0) {
      Rat cont(num, den);
      cont.canonicalize();
      if (cont != 1)
        for (auto& [_, v] : row) v = v * (Rat(1) / cont);
    }
  };
  for (auto& [_, row] : rows) strip_content(row);

  std::set<int> active;
  for (const auto& [r, _] : rows) active.insert(r);
  for (int j = 0; j < m.ncols(); ++j) {
    // first active row (in row order) with a nonzero entry in column j
    int prow = -1;
    for (int r : active) {
      auto it = rows[r].find(j);
      if (it != rows[r].end() && !it->second.is_zero()) {
        prow = r;
        break;
      }
    }
    if (prow < 0) continue;
    active.erase(prow);
    const Poly piv = rows[prow].at(j);
    out.pivotPolys.insert(poly_monic(piv));
    ++out.genericRank;
    std::vector<int> touch;
    for (int r : active)
      if (rows[r].count(j)) touch.push_back(r);
    for (int r : touch) {
      auto& row = rows[r];
      Poly f = row.at(j);
      std::map<int, Poly> nrow;
      for (const auto& [c, v] : row) {
        Poly nv = piv * v;
        auto pit = rows[prow].find(c);
        if (pit != rows[prow].end()) nv = nv - f * pit->second;
        if (!nv.is_zero()) nrow[c] = std::move(nv);
      }
      nrow.erase(j);
      strip_content(nrow);
      row = std::move(nrow);
    }
  }
  // normalize the pivot set: drop nonzero constants except keep a single 1
  // marker when the matrix had pivots at all
  std::set<Poly> polys;
  bool hadConstant = false;
  for (const auto& p : out.pivotPolys) {
    if (p.degree() <= 0)
      hadConstant = true;
    else
      polys.insert(p);
  }
  if (hadConstant || (out.genericRank > 0 && polys.empty()))
    polys.insert(Poly(Rat(1)));
  out.pivotPolys = std::move(polys);
  return out;
}

inline ColMat<Rat> specialize(const ColMat<Poly>& m, const Rat& x) {
  ColMat<Rat> r;
  r.nrows = m.nrows;
  r.cols.resize(m.cols.size());
  for (std::size_t j = 0; j < m.cols.size(); ++j)
    for (const auto& [row, v] : m.cols[j]) {
      Rat val = v.eval(x);
      if (val != 0) r.cols[j][row] = val;
    }
  return r;
}

}  // namespace coframe
