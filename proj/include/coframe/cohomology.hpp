#pragma once

#include <random>
#include <set>
#include <vector>

#include "coframe/linalg.hpp"
#include "coframe/presentation.hpp"

namespace coframe {

inline std::vector<Tuple> combinations(const std::vector<int>& pool, int k) {
  std::vector<Tuple> out;
  if (k < 0 || k > static_cast<int>(pool.size())) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  int n = static_cast<int>(pool.size());
  for (;;) {
    Tuple t;
    for (int i : idx) t.push_back(pool[static_cast<std::size_t>(i)]);
    out.push_back(std::move(t));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Ordered tuple basis of the degree-k cochain space, lexicographic over the
// selected symbol set.
inline std::vector<Tuple> cochain_basis(const AlgebraPresentation& p, int k,
                                        bool restrictToKnown) {
  if (k < 1) throw DegreeOutOfRange();
  std::vector<int> pool;
  if (restrictToKnown)
    pool = p.knownSymbols();
  else
    for (int i = 0; i < p.nsym(); ++i) pool.push_back(i);
  return combinations(pool, k);
}

// The computable deformed complex: cochains over the known-differential
// symbols, targets over the full coframe.
struct DeformedComplex {
  AlgebraPresentation pres;
  KForm<Rat> zeta;
  int kmin = 1, kmax = 0;

  DeformedComplex(AlgebraPresentation p, KForm<Rat> z)
      : pres(std::move(p)), zeta(std::move(z)) {
    kmax = static_cast<int>(pres.knownSymbols().size());
    KForm<Rat> dz = exterior_derivative(zeta, pres.table);
    if (!dz.is_zero())
      throw NotClosed(form_str_dsl(dz, pres.table.names));
  }

  std::vector<Tuple> basis(int k) const { return cochain_basis(pres, k, true); }

  std::vector<Tuple> target_basis(int k) const {
    return cochain_basis(pres, k + 1, false);
  }

  // Matrix of d_{lambda zeta}: columns over the restricted degree-k basis,
  // rows over ALL degree-(k+1) tuples; entries affine in lambda.
  ColMat<Poly> matrix(int k) const {
    if (k < kmin || k > kmax) throw DegreeOutOfRange();
    auto cols = basis(k);
    auto rows = target_basis(k);
    std::map<Tuple, int> rowIx;
    for (std::size_t i = 0; i < rows.size(); ++i)
      rowIx[rows[i]] = static_cast<int>(i);
    ColMat<Poly> m;
    m.nrows = static_cast<int>(rows.size());
    KForm<Poly> zl = promote(zeta);
    for (const auto& t : cols) {
      KForm<Poly> img = deformed_derivative(basis_form<Poly>(pres.nsym(), t),
                                            Poly::lambda(), zl, pres.table);
      std::map<int, Poly> col;
      for (const auto& [idx, c] : img.terms) col[rowIx.at(idx)] = c;
      m.cols.push_back(std::move(col));
    }
    return m;
  }
};

inline ColMat<Poly> differential_matrix(const DeformedComplex& c, int k) {
  return c.matrix(k);
}

struct CohomologyReport {
  int degree = 0;
  bool generic = false;
  Rat lambda;
  int dimension = 0;
  std::vector<KForm<Rat>> representatives;
};

namespace detail {

struct QuotientData {
  std::vector<Tuple> basisK;         // restricted degree-k basis
  int dimKer = 0;                    // dim ker d^(k) at lambda
  std::vector<std::map<int, Rat>> kernel;  // over basisK positions
  Eliminator<Rat> image;             // spanned by im d^(k-1) ∩ restricted
  int dimImR = 0;
};

// Kernel of d^(k) and a basis of im d^(k-1) ∩ (restricted k-cochain space),
// all in coordinates over the restricted degree-k tuple basis.
inline QuotientData quotient_data(const DeformedComplex& c, int k,
                                  const Rat& lambda) {
  QuotientData qd;
  qd.basisK = c.basis(k);
  ColMat<Rat> m2 = specialize(c.matrix(k), lambda);
  auto [rank2, ker2] = col_echelon(m2);
  qd.dimKer = static_cast<int>(qd.basisK.size()) - rank2;
  qd.kernel = std::move(ker2);
  if (k > c.kmin) {
    ColMat<Poly> m1p = c.matrix(k - 1);
    ColMat<Rat> m1 = specialize(m1p, lambda);
    // positions of restricted k-tuples among all k-tuples (the rows of m1)
    auto allK = c.target_basis(k - 1);
    std::map<Tuple, int> allIx;
    for (std::size_t i = 0; i < allK.size(); ++i)
      allIx[allK[i]] = static_cast<int>(i);
    std::map<int, int> globalToRestricted;
    for (std::size_t i = 0; i < qd.basisK.size(); ++i)
      globalToRestricted[allIx.at(qd.basisK[i])] = static_cast<int>(i);
    ColMat<Rat> mq;
    mq.nrows = m1.nrows;
    for (const auto& col : m1.cols) {
      std::map<int, Rat> qcol;
      for (const auto& [r, v] : col)
        if (!globalToRestricted.count(r)) qcol[r] = v;
      mq.cols.push_back(std::move(qcol));
    }
    auto [rankQ, kerQ] = col_echelon(mq);
    (void)rankQ;
    for (const auto& kv : kerQ) {
      std::map<int, Rat> img;
      for (const auto& [j, cf] : kv)
        for (const auto& [r, v] : m1.cols[static_cast<std::size_t>(j)]) {
          auto& cell = img[globalToRestricted.at(r)];
          cell += cf * v;
          if (cell == 0) img.erase(globalToRestricted.at(r));
        }
      qd.image.feed(std::move(img));
    }
    qd.dimImR = qd.image.rank();
  }
  return qd;
}

inline KForm<Rat> vec_to_form(const std::vector<Tuple>& basis,
                              const std::map<int, Rat>& v, int k, int nsym) {
  KForm<Rat> f(k, nsym);
  for (const auto& [pos, c] : v)
    f.add_term(basis[static_cast<std::size_t>(pos)], c);
  return f;
}

}  // namespace detail

// dim H = dim ker d^(k) - dim(im d^(k-1) ∩ restricted cochain space); the
// complex begins at degree 1, so k = 1 has no image term. Representatives:
// a kernel basis reduced modulo the image with deterministic pivoting.
inline CohomologyReport cohomology_dimension(const DeformedComplex& c, int k,
                                             const Rat& lambda) {
  auto qd = detail::quotient_data(c, k, lambda);
  CohomologyReport rep;
  rep.degree = k;
  rep.lambda = lambda;
  rep.dimension = qd.dimKer - qd.dimImR;
  Eliminator<Rat> red = qd.image;  // copy; feed kernel vectors on top
  for (const auto& kv : qd.kernel) {
    std::map<int, Rat> col = kv, combo;
    red.reduce(col, combo);
    if (col.empty()) continue;
    // accepted: normalize the reduced vector as the class representative
    Rat lead = col.begin()->second;
    std::map<int, Rat> norm;
    for (const auto& [r, v] : col) norm[r] = v / lead;
    red.feed(col);
    rep.representatives.push_back(
        detail::vec_to_form(qd.basisK, norm, k, c.pres.nsym()));
  }
  return rep;
}

enum class MembershipKind { NotCocycle, Exact, NontrivialClass };

struct MembershipResult {
  MembershipKind kind;
  std::vector<Rat> coordinates;  // in the computed representative basis
};

inline MembershipResult class_membership(const DeformedComplex& c, int k,
                                         const Rat& lambda,
                                         const KForm<Rat>& candidate) {
  if (candidate.deg != k) throw DegreeMismatch();
  KForm<Rat> zl = c.zeta;
  KForm<Rat> img = deformed_derivative(candidate, lambda, zl, c.pres.table);
  if (!img.is_zero()) return {MembershipKind::NotCocycle, {}};

  auto qd = detail::quotient_data(c, k, lambda);
  std::map<Tuple, int> pos;
  for (std::size_t i = 0; i < qd.basisK.size(); ++i)
    pos[qd.basisK[i]] = static_cast<int>(i);
  std::map<int, Rat> target;
  for (const auto& [idx, v] : candidate.terms) {
    auto it = pos.find(idx);
    if (it == pos.end()) throw DegreeOutOfRange();  // outside restricted space
    target[it->second] = v;
  }
  if (qd.image.solve(target)) return {MembershipKind::Exact, {}};

  // coordinates: solve target = image-combination + representative-combination
  Eliminator<Rat> full;
  int nimg = 0;
  for (const auto& p : qd.image.pivots) {
    full.feed(p.col);
    ++nimg;
  }
  std::vector<int> repCols;
  Eliminator<Rat> red = qd.image;
  for (const auto& kv : qd.kernel) {
    std::map<int, Rat> col = kv, combo;
    red.reduce(col, combo);
    if (col.empty()) continue;
    Rat lead = col.begin()->second;
    std::map<int, Rat> norm;
    for (const auto& [r, v] : col) norm[r] = v / lead;
    red.feed(col);
    repCols.push_back(full.fed);
    full.feed(norm);
  }
  auto sol = full.solve(target);
  if (!sol) throw Error("closed candidate outside kernel+image span");
  std::vector<Rat> coords;
  for (int j : repCols) {
    auto it = sol->find(j);
    coords.push_back(it == sol->end() ? Rat(0) : it->second);
  }
  return {MembershipKind::NontrivialClass, std::move(coords)};
}

struct ResonanceReport {
  int degree = 0;
  int genericDimension = 0;
  Rat probe;
  std::set<Rat> candidates;
  std::map<Rat, int> resonances;
  std::set<Poly> irrationalWitness;
};

inline ResonanceReport resonance_scan(const DeformedComplex& c, int k,
                                      std::uint64_t seed = 20240817) {
  ResonanceReport rep;
  rep.degree = k;
  std::vector<ColMat<Poly>> mats;
  mats.push_back(c.matrix(k));
  if (k > c.kmin) {
    ColMat<Poly> m1 = c.matrix(k - 1);
    mats.push_back(m1);
    // Q-filtered copy: the quotient term depends on rank(Q d^(k-1)) too
    auto allK = c.target_basis(k - 1);
    auto resK = c.basis(k);
    std::set<Tuple> restricted(resK.begin(), resK.end());
    std::map<int, bool> isRestrictedRow;
    for (std::size_t i = 0; i < allK.size(); ++i)
      isRestrictedRow[static_cast<int>(i)] = restricted.count(allK[i]) > 0;
    ColMat<Poly> mq;
    mq.nrows = m1.nrows;
    for (const auto& col : m1.cols) {
      std::map<int, Poly> qcol;
      for (const auto& [r, v] : col)
        if (!isRestrictedRow.at(r)) qcol[r] = v;
      mq.cols.push_back(std::move(qcol));
    }
    mats.push_back(std::move(mq));
  }
  for (const auto& m : mats) {
    RankProfile prof = rank_profile(m);
    for (const Poly& p : prof.pivotPolys) {
      if (p.degree() <= 0) continue;
      auto roots = rational_roots(p);
      rep.candidates.insert(roots.begin(), roots.end());
      Poly rem = p;
      for (const Rat& r : roots) {
        Poly lin;
        lin.c = {Rat(-r), Rat(1)};
        while (poly_divides(lin, rem)) rem = poly_divexact(rem, lin);
      }
      if (rem.degree() >= 1) rep.irrationalWitness.insert(poly_monic(rem));
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 40);
  Rat probe;
  for (;;) {
    probe = rat(num(rng), den(rng));
    if (!rep.candidates.count(probe)) break;
  }
  rep.probe = probe;
  rep.genericDimension = cohomology_dimension(c, k, probe).dimension;
  for (const Rat& cand : rep.candidates) {
    int dim = cohomology_dimension(c, k, cand).dimension;
    if (dim > rep.genericDimension) rep.resonances[cand] = dim;
  }
  return rep;
}

}  // namespace coframe
