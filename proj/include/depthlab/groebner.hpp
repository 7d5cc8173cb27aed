// Buchberger engine over S = k[x_1..x_n] and free modules S^m, plus the
// ideal/module primitives built on it: normal forms, syzygies via the graph
// (elimination) construction, kernels over quotient rings, colon ideals and
// annihilators, Krull dimension, Hilbert functions, radical membership.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "depthlab/poly.hpp"

namespace depthlab {

struct GroebnerBasis {
  std::vector<PolyVector> gens;
  bool reduced = false;
};

namespace gb {

inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.comp != b.comp) return false;
  for (size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

inline std::vector<int> expQuot(const Monomial& num, const Monomial& den) {
  std::vector<int> q(num.exp.size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = num.exp[i] - den.exp[i];
  return q;
}

inline Monomial lcmMono(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (size_t i = 0; i < m.exp.size(); ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
  return m;
}

// Full normal form: no term of the result is divisible by a leading term of
// the basis. Optionally tracks the quotients (ring elements) per basis entry.
inline PolyVector normalForm(const PolyRing& R, PolyVector v, const std::vector<PolyVector>& basis,
                             std::vector<PolyVector>* quots = nullptr) {
  if (quots) quots->assign(basis.size(), pv::zero(1));
  PolyVector rem{v.ambient, {}};
  while (!v.isZero()) {
    const Term& lt = v.lead();
    bool reducedStep = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].isZero()) continue;
      const Term& bt = basis[i].lead();
      if (!divides(bt.first, lt.first)) continue;
      FieldElem c = fe::div(lt.second, bt.second);
      auto q = expQuot(lt.first, bt.first);
      v = pv::sub(R, v, pv::mulTerm(basis[i], q, c));
      if (quots) {
        PolyVector qv = pv::monomial(R, q, 0, c);
        (*quots)[i] = pv::add(R, (*quots)[i], qv);
      }
      reducedStep = true;
      break;
    }
    if (!reducedStep) {
      rem.terms.push_back(v.terms.front());
      v.terms.erase(v.terms.begin());
    }
  }
  return rem;
}

namespace detail {

struct SPair {
  int i, j;
  Monomial lcm;
  int sugar;
};

inline bool coprimeLeads(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] > 0 && b.exp[i] > 0) return false;
  return true;
}

}  // namespace detail

// Reduced Groebner basis of the submodule generated by `gens`. Buchberger with
// the sugar selection strategy, the product criterion (ring case) and the
// chain criterion. Deterministic for fixed input and order.
inline GroebnerBasis buchberger(const PolyRing& R, std::vector<PolyVector> gens) {
  using detail::SPair;
  // canonical input order
  for (auto& g : gens) pv::normalize(R, g);
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const PolyVector& g) { return g.isZero(); }),
             gens.end());
  std::sort(gens.begin(), gens.end(),
            [&](const PolyVector& a, const PolyVector& b) { return pv::cmp(R, a, b) > 0; });
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [&](const PolyVector& a, const PolyVector& b) { return pv::eq(a, b); }),
             gens.end());

  std::vector<PolyVector> G;
  std::vector<int> sugar;
  std::vector<SPair> pairs;
  bool ringCase = gens.empty() || gens.front().ambient == 1;

  auto addElement = [&](PolyVector g, int sug) {
    int idx = int(G.size());
    const Monomial& lg = g.lead().first;
    for (int i = 0; i < idx; ++i) {
      if (G[i].lead().first.comp != lg.comp) continue;
      if (ringCase && detail::coprimeLeads(G[i].lead().first, lg)) continue;  // product criterion
      Monomial l = lcmMono(G[i].lead().first, lg);
      int s = std::max(sugar[i] + R.ord.wdeg(expQuot(l, G[i].lead().first)),
                       sug + R.ord.wdeg(expQuot(l, lg)));
      pairs.push_back({i, idx, std::move(l), s});
    }
    G.push_back(std::move(g));
    sugar.push_back(sug);
  };

  for (auto& g : gens) {
    int s = 0;
    for (const auto& t : g.terms) s = std::max(s, R.ord.wdeg(t.first.exp));
    addElement(std::move(g), s);
  }

  auto pairLess = [&](const SPair& a, const SPair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = R.ord.cmp(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  std::set<std::pair<int, int>> done;
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pairLess);
    SPair p = *it;
    pairs.erase(it);
    done.insert({p.i, p.j});

    // chain criterion
    bool skip = false;
    for (size_t k = 0; k < G.size() && !skip; ++k) {
      if (int(k) == p.i || int(k) == p.j) continue;
      if (!divides(G[k].lead().first, p.lcm)) continue;
      auto key1 = std::minmax(int(k), p.i);
      auto key2 = std::minmax(int(k), p.j);
      if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second})) skip = true;
    }
    if (skip) continue;

    const PolyVector &gi = G[p.i], &gj = G[p.j];
    PolyVector s = pv::sub(
        R, pv::mulTerm(gi, expQuot(p.lcm, gi.lead().first), fe::inv(gi.lead().second)),
        pv::mulTerm(gj, expQuot(p.lcm, gj.lead().first), fe::inv(gj.lead().second)));
    PolyVector r = normalForm(R, std::move(s), G);
    if (!r.isZero()) addElement(pv::monic(r), p.sugar);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<PolyVector> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(G[j].lead().first, G[i].lead().first)) {
        if (!divides(G[i].lead().first, G[j].lead().first))
          redundant = true;
        else if (j < i)  // equal leads: keep the first
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // tail-reduce to the unique reduced basis
  std::vector<PolyVector> out(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<PolyVector> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out[i] = pv::monic(normalForm(R, minimal[i], others));
  }
  std::sort(out.begin(), out.end(),
            [&](const PolyVector& a, const PolyVector& b) { return pv::cmp(R, a, b) > 0; });
  return {std::move(out), true};
}

// --- graph (elimination) construction ------------------------------------

// Groebner data for the graph module {(f_j, e_j)} in S^{m+s}; supports both
// syzygy extraction and explicit membership certificates.
struct GraphGB {
  PolyRing R2;  // same ring, POT order forced
  int topRank = 0;
  int count = 0;
  GroebnerBasis basis;
};

inline GraphGB graphBasis(const PolyRing& R, const std::vector<PolyVector>& cols, int rank) {
  GraphGB g;
  g.R2 = R;
  g.R2.ord.ext = ModuleExt::POT;
  g.topRank = rank;
  g.count = int(cols.size());
  int amb = rank + g.count;
  std::vector<PolyVector> gens;
  gens.reserve(cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    PolyVector v = pv::shiftComp(cols[j], 0, amb);
    v = pv::add(g.R2, v, pv::unitVector(g.R2, amb, rank + int(j)));
    gens.push_back(std::move(v));
  }
  g.basis = buchberger(g.R2, std::move(gens));
  return g;
}

// Generators of the syzygy module of the columns (inside S^count).
inline std::vector<PolyVector> syzygiesFromGraph(const GraphGB& g) {
  std::vector<PolyVector> out;
  for (const auto& b : g.basis.gens) {
    bool bottom = true;
    for (const auto& t : b.terms)
      if (t.first.comp < g.topRank) {
        bottom = false;
        break;
      }
    if (bottom) out.push_back(pv::sliceComp(g.R2, b, g.topRank, g.topRank + g.count));
  }
  return out;
}

inline std::vector<PolyVector> syzygies(const PolyRing& R, const std::vector<PolyVector>& cols,
                                        int rank) {
  return syzygiesFromGraph(graphBasis(R, cols, rank));
}

// Express v as an S-combination of the graph's columns; nullopt when v is not
// in their span. Returned coefficients are ring elements, one per column.
inline std::optional<std::vector<PolyVector>> expressFromGraph(const GraphGB& g,
                                                               const PolyVector& v) {
  int amb = g.topRank + g.count;
  PolyVector r = normalForm(g.R2, pv::shiftComp(v, 0, amb), g.basis.gens);
  PolyVector top = pv::sliceComp(g.R2, r, 0, g.topRank);
  if (!top.isZero()) return std::nullopt;
  std::vector<PolyVector> coeffs(g.count);
  PolyVector bottom = pv::sliceComp(g.R2, r, g.topRank, amb);
  for (int j = 0; j < g.count; ++j) coeffs[j] = pv::neg(pv::component(bottom, j));
  return coeffs;
}

inline std::optional<std::vector<PolyVector>> express(const PolyRing& R, const PolyVector& v,
                                                      const std::vector<PolyVector>& cols,
                                                      int rank) {
  return expressFromGraph(graphBasis(R, cols, rank), v);
}

// --- quotient-ring helpers ------------------------------------------------

// Append f*e_i for every ideal generator f and component i < rank.
inline std::vector<PolyVector> withIdeal(const PolyRing& R, std::vector<PolyVector> cols, int rank,
                                         const std::vector<PolyVector>& ideal) {
  for (const auto& f : ideal)
    for (int i = 0; i < rank; ++i) {
      PolyVector v = pv::mulRing(R, f, pv::unitVector(R, rank, i));
      cols.push_back(std::move(v));
    }
  return cols;
}

// Kernel generators of A: R^c -> R^r over R = S/I, where `cols` are the c
// columns of A inside S^r. Coordinates are reduced modulo the ideal basis.
inline std::vector<PolyVector> kernelOverQuotient(const PolyRing& R,
                                                  const std::vector<PolyVector>& cols, int rank,
                                                  const std::vector<PolyVector>& idealBasis) {
  auto aug = withIdeal(R, cols, rank, idealBasis);
  auto syz = syzygies(R, aug, rank);
  int c = int(cols.size());
  std::vector<PolyVector> out;
  for (const auto& s : syz) {
    PolyVector head = pv::sliceComp(R, s, 0, c);
    if (!idealBasis.empty()) {
      PolyVector red{c, {}};
      for (int j = 0; j < c; ++j) {
        PolyVector comp = normalForm(R, pv::component(head, j), idealBasis);
        red = pv::add(R, red, pv::shiftComp(comp, j, c));
      }
      head = std::move(red);
    }
    if (!head.isZero()) out.push_back(std::move(head));
  }
  std::sort(out.begin(), out.end(),
            [&](const PolyVector& a, const PolyVector& b) { return pv::cmp(R, a, b) > 0; });
  out.erase(std::unique(out.begin(), out.end(),
                        [&](const PolyVector& a, const PolyVector& b) { return pv::eq(a, b); }),
            out.end());
  return out;
}

// (U : f) = { r in S | r*f in U } for U spanned by `ugens` inside S^rank.
inline std::vector<PolyVector> colon(const PolyRing& R, const PolyVector& f,
                                     const std::vector<PolyVector>& ugens, int rank) {
  std::vector<PolyVector> cols;
  cols.push_back(f);
  for (const auto& u : ugens) cols.push_back(u);
  auto syz = syzygies(R, cols, rank);
  std::vector<PolyVector> out;
  for (const auto& s : syz) {
    PolyVector c0 = pv::component(s, 0);
    if (!c0.isZero()) out.push_back(std::move(c0));
  }
  return buchberger(R, std::move(out)).gens;
}

// Intersection of two ideals via the kernel of S -> S/J (+) S/K.
inline std::vector<PolyVector> idealIntersect(const PolyRing& R, const std::vector<PolyVector>& J,
                                              const std::vector<PolyVector>& K) {
  std::vector<PolyVector> cols;
  PolyVector diag = pv::add(R, pv::unitVector(R, 2, 0), pv::unitVector(R, 2, 1));
  cols.push_back(diag);
  for (const auto& j : J) cols.push_back(pv::shiftComp(j, 0, 2));
  for (const auto& k : K) cols.push_back(pv::shiftComp(k, 1, 2));
  auto syz = syzygies(R, cols, 2);
  std::vector<PolyVector> out;
  for (const auto& s : syz) {
    PolyVector c0 = pv::component(s, 0);
    if (!c0.isZero()) out.push_back(std::move(c0));
  }
  return buchberger(R, std::move(out)).gens;
}

inline bool containsUnit(const GroebnerBasis& g) {
  for (const auto& b : g.gens)
    if (!b.isZero() && b.lead().first.comp == 0 && b.lead().first.totalDeg() == 0) return true;
  return false;
}

// Krull dimension of S/I from the initial ideal: the largest independent set
// of variables touching no leading-term support. Returns -1 for the zero ring.
inline int krullDim(const PolyRing& R, const GroebnerBasis& idealGB) {
  if (containsUnit(idealGB)) return -1;
  int n = R.nvars();
  std::vector<unsigned> supports;
  for (const auto& g : idealGB.gens) {
    unsigned m = 0;
    const Monomial& lt = g.lead().first;
    for (int i = 0; i < n; ++i)
      if (lt.exp[i] > 0) m |= 1u << i;
    supports.push_back(m);
  }
  int best = 0;
  for (unsigned sub = 0; sub < (1u << n); ++sub) {
    bool ok = true;
    for (unsigned s : supports)
      if ((s & ~sub) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, __builtin_popcount(sub));
  }
  return best;
}

// All exponent vectors of the given weighted degree.
inline void enumerateMonomialsRec(const PolyRing& R, int var, int remaining, std::vector<int>& cur,
                                  std::vector<std::vector<int>>& out) {
  if (var == R.nvars()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  int d = R.degs[var];
  for (int e = 0; e * d <= remaining; ++e) {
    cur[var] = e;
    enumerateMonomialsRec(R, var + 1, remaining - e * d, cur, out);
  }
  cur[var] = 0;
}

inline std::vector<std::vector<int>> enumerateMonomials(const PolyRing& R, int deg) {
  std::vector<std::vector<int>> out;
  if (deg < 0) return out;
  std::vector<int> cur(R.nvars(), 0);
  enumerateMonomialsRec(R, 0, deg, cur, out);
  return out;
}

// Standard monomials (mono, comp) of degree `deg` of S^rank/in(GB), with
// generator shifts.
inline std::vector<Monomial> standardMonomials(const PolyRing& R, const GroebnerBasis& g, int rank,
                                               const std::vector<int>& shifts, int deg) {
  std::vector<Monomial> out;
  for (int c = 0; c < rank; ++c) {
    int target = deg - (c < int(shifts.size()) ? shifts[c] : 0);
    for (auto& e : enumerateMonomials(R, target)) {
      Monomial m{e, c};
      bool divisible = false;
      for (const auto& b : g.gens)
        if (divides(b.lead().first, m)) {
          divisible = true;
          break;
        }
      if (!divisible) out.push_back(std::move(m));
    }
  }
  return out;
}

// Exact k-dimensions of the graded pieces of S^rank/(span of GB) in degrees
// 0..maxDeg.
inline std::vector<long> hilbertFunction(const PolyRing& R, const GroebnerBasis& g, int rank,
                                         const std::vector<int>& shifts, int maxDeg) {
  std::vector<long> out;
  for (int d = 0; d <= maxDeg; ++d)
    out.push_back(long(standardMonomials(R, g, rank, shifts, d).size()));
  return out;
}

// f in sqrt(I), via the Rabinowitsch trick.
inline bool radicalMembership(const PolyRing& R, const PolyVector& f,
                              const std::vector<PolyVector>& ideal) {
  PolyRing R2(R.field, R.vars, R.degs, R.ord.base);
  R2.vars.push_back("@z");
  R2.degs.push_back(1);
  R2.ord.weights = R2.degs;
  auto lift = [&](const PolyVector& v) {
    PolyVector w = v;
    for (auto& t : w.terms) t.first.exp.push_back(0);
    return w;
  };
  std::vector<PolyVector> gens;
  for (const auto& p : ideal) gens.push_back(lift(p));
  PolyVector zf = lift(f);
  for (auto& t : zf.terms) t.first.exp.back() += 1;
  PolyVector one = pv::constant(R2, fe::one(R2.field));
  gens.push_back(pv::sub(R2, one, zf));
  return containsUnit(buchberger(R2, std::move(gens)));
}

// coker(cols) over R = S/I is the zero module iff every basis vector lies in
// the span of the columns plus the ideal relations.
inline bool isZeroModule(const PolyRing& R, const std::vector<PolyVector>& cols, int rank,
                         const std::vector<PolyVector>& idealBasis) {
  if (rank == 0) return true;
  auto aug = withIdeal(R, cols, rank, idealBasis);
  GroebnerBasis g = buchberger(R, std::move(aug));
  for (int i = 0; i < rank; ++i)
    if (!normalForm(R, pv::unitVector(R, rank, i), g.gens).isZero()) return false;
  return true;
}

}  // namespace gb

}  // namespace depthlab
