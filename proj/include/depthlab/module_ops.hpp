// Higher module constructions on presented modules: subquotient presentation,
// Tor and Ext (via resolutions and block matrices), the canonical module and
// canonical dual, the tilde cut-down, the pushforward, the non-free locus,
// and constant rank via Fitting ideals.
#pragma once

#include <optional>

#include "depthlab/ring.hpp"

namespace depthlab {

namespace rg {

// (span(Z) + span(B)) / span(B) inside R^rank, as a presented module.
inline PresentedModule presentSubquotient(RingPtr R, int rank,
                                          const std::vector<int>& ambShifts,
                                          const std::vector<PolyVector>& Zin,
                                          const std::vector<PolyVector>& Bin) {
  const PolyRing& S = R->S;
  std::vector<PolyVector> Z;
  for (const auto& z : Zin) {
    PolyVector v = nfVec(*R, z);
    if (!v.isZero()) Z.push_back(std::move(v));
  }
  if (Z.empty()) return freeModule(std::move(R), {});
  int z = int(Z.size());
  std::vector<PolyVector> cols = Z;
  for (const auto& b : Bin) cols.push_back(b);
  cols = gb::withIdeal(S, std::move(cols), rank, R->gb.gens);
  auto syz = gb::syzygies(S, cols, rank);
  std::vector<PolyVector> rels;
  for (const auto& s : syz) {
    PolyVector head = pv::sliceComp(S, s, 0, z);
    if (!head.isZero()) rels.push_back(std::move(head));
  }
  std::vector<int> shifts(z);
  for (int k = 0; k < z; ++k) shifts[k] = pv::degree(S, Z[k], ambShifts);
  PresentedModule Mz;
  Mz.R = std::move(R);
  Mz.gens = z;
  Mz.shifts = std::move(shifts);
  for (auto& r : rels) {
    PolyVector v = nfVec(*Mz.R, r);
    if (!v.isZero()) Mz.rels.push_back(std::move(v));
  }
  return minimalize(Mz);
}

// Generators of the preimage {v in R^p : map(v) in span(target) over R},
// where mapCols are the p columns of the map into S^q.
inline std::vector<PolyVector> preimageGens(const PolyRing& S,
                                            const std::vector<PolyVector>& idealBasis,
                                            const std::vector<PolyVector>& mapCols, int p, int q,
                                            const std::vector<PolyVector>& target) {
  std::vector<PolyVector> cols = mapCols;
  for (const auto& t : target) cols.push_back(t);
  cols = gb::withIdeal(S, std::move(cols), q, idealBasis);
  auto syz = gb::syzygies(S, cols, q);
  std::vector<PolyVector> out;
  for (const auto& s : syz) {
    PolyVector head = pv::sliceComp(S, s, 0, p);
    if (!head.isZero()) out.push_back(std::move(head));
  }
  return out;
}

// --- block matrices for F (x) N and Hom(F, N) ------------------------------

// shifts of N^{beta} with copy-major layout (copy a of N-generator b at index
// a*t + b), tensor orientation: shift = fshift_a + nshift_b.
inline std::vector<int> blockShifts(const std::vector<int>& fshifts,
                                    const std::vector<int>& nshifts, bool dualizeF) {
  std::vector<int> out;
  out.reserve(fshifts.size() * nshifts.size());
  for (int a = 0; a < int(fshifts.size()); ++a)
    for (int b = 0; b < int(nshifts.size()); ++b)
      out.push_back((dualizeF ? -fshifts[a] : fshifts[a]) + nshifts[b]);
  return out;
}

// relation columns of N^{copies}: one copy of N.rels per block.
inline std::vector<PolyVector> blockRels(const PolyRing&, const PresentedModule& N,
                                         int copies) {
  std::vector<PolyVector> out;
  int t = N.gens, amb = copies * t;
  for (int a = 0; a < copies; ++a)
    for (const auto& w : N.rels) out.push_back(pv::shiftComp(w, a * t, amb));
  return out;
}

// columns of d (x) Id_N : N^{c1} -> N^{c0}, where dcols are columns of
// d: R^{c1} -> R^{c0}.
inline std::vector<PolyVector> tensorBlockCols(const PolyRing& S,
                                               const std::vector<PolyVector>& dcols, int c0,
                                               int t) {
  std::vector<PolyVector> out;
  int amb = c0 * t;
  for (const auto& col : dcols)
    for (int b = 0; b < t; ++b) {
      PolyVector v{amb, {}};
      for (int i = 0; i < c0; ++i) {
        PolyVector e = pv::component(col, i);
        if (!e.isZero()) v = pv::add(S, v, pv::shiftComp(e, i * t + b, amb));
      }
      out.push_back(std::move(v));
    }
  return out;
}

// columns of Hom(d, N): N^{c0} -> N^{c1} (precomposition with d), where dcols
// are columns of d: R^{c1} -> R^{c0}; input generator (i, b), i < c0.
inline std::vector<PolyVector> homBlockCols(const PolyRing& S,
                                            const std::vector<PolyVector>& dcols, int c0,
                                            int t) {
  std::vector<PolyVector> out;
  int c1 = int(dcols.size());
  int amb = std::max(c1 * t, 1);
  for (int i = 0; i < c0; ++i)
    for (int b = 0; b < t; ++b) {
      PolyVector v{amb, {}};
      for (int j = 0; j < c1; ++j) {
        PolyVector e = pv::component(dcols[j], i);
        if (!e.isZero()) v = pv::add(S, v, pv::shiftComp(e, j * t + b, amb));
      }
      out.push_back(std::move(v));
    }
  return out;
}

// --- Tor and Ext ----------------------------------------------------------

inline PresentedModule torFromResolution(const ResolutionWindow& F, const PresentedModule& Nmin,
                                         int i) {
  RingPtr R = F.R;
  const PolyRing& S = R->S;
  const PresentedModule& N = Nmin;
  int t = N.gens;
  if (t == 0 || i < 0) return freeModule(R, {});
  if (i >= int(F.betti.size()) - 1 || F.betti[i] == 0) return freeModule(R, {});
  int bi = F.betti[i];
  int ambI = bi * t;
  std::vector<int> shI = blockShifts(F.shifts[i], N.shifts, false);

  // kernel generators Z of bigD_i (all of T_i when i = 0)
  std::vector<PolyVector> Z;
  if (i == 0) {
    for (int a = 0; a < ambI; ++a) Z.push_back(pv::unitVector(S, ambI, a));
  } else {
    int bprev = F.betti[i - 1];
    auto bigD = tensorBlockCols(S, F.diff[i - 1], bprev, t);
    auto target = blockRels(S, N, bprev);
    Z = preimageGens(S, R->gb.gens, bigD, ambI, bprev * t, target);
  }
  // boundaries B = im(bigD_{i+1}) + relations of T_i
  std::vector<PolyVector> B = blockRels(S, N, bi);
  if (i < int(F.diff.size()) && !F.diff[i].empty())
    for (auto& c : tensorBlockCols(S, F.diff[i], bi, t)) B.push_back(std::move(c));
  return presentSubquotient(R, ambI, shI, Z, B);
}

inline PresentedModule torModule(const PresentedModule& M, const PresentedModule& N, int i) {
  if (i < 0) return freeModule(M.R, {});
  PresentedModule Nm = minimalize(N);
  ResolutionWindow F = minFreeResolution(M, i + 1);
  return torFromResolution(F, Nm, i);
}

inline PresentedModule extFromResolution(const ResolutionWindow& F, const PresentedModule& Nmin,
                                         int i) {
  RingPtr R = F.R;
  const PolyRing& S = R->S;
  const PresentedModule& N = Nmin;
  int t = N.gens;
  if (t == 0 || i < 0) return freeModule(R, {});
  if (i >= int(F.betti.size()) - 1 || F.betti[i] == 0) return freeModule(R, {});
  int bi = F.betti[i];
  int ambI = bi * t;
  std::vector<int> shI = blockShifts(F.shifts[i], N.shifts, true);

  // Z = kernel of D^{i+1}: Hom(F_i, N) -> Hom(F_{i+1}, N)
  std::vector<PolyVector> Z;
  int bnext = (i + 1 < int(F.betti.size())) ? F.betti[i + 1] : 0;
  if (bnext == 0) {
    for (int a = 0; a < ambI; ++a) Z.push_back(pv::unitVector(S, ambI, a));
  } else {
    auto bigD = homBlockCols(S, F.diff[i], bi, t);  // columns indexed by gens of Hom(F_i,N)
    auto target = blockRels(S, N, bnext);
    Z = preimageGens(S, R->gb.gens, bigD, ambI, bnext * t, target);
  }
  // B = im(D^i) + relations of Hom(F_i, N)
  std::vector<PolyVector> B = blockRels(S, N, bi);
  if (i > 0) {
    int bprev = F.betti[i - 1];
    auto im = homBlockCols(S, F.diff[i - 1], bprev, t);
    // these columns land in Hom(F_i, N): ambient bi * t
    for (auto& c : im) {
      c.ambient = ambI;
      B.push_back(std::move(c));
    }
  }
  return presentSubquotient(R, ambI, shI, Z, B);
}

inline PresentedModule extModule(const PresentedModule& M, const PresentedModule& N, int i) {
  if (i < 0) return freeModule(M.R, {});
  PresentedModule Nm = minimalize(N);
  ResolutionWindow F = minFreeResolution(M, i + 1);
  return extFromResolution(F, Nm, i);
}

inline PresentedModule homModule(const PresentedModule& M, const PresentedModule& N) {
  return extModule(M, N, 0);
}

// --- canonical module -----------------------------------------------------

// omega_R = Ext^{n-d}_S(R, omega_S) with omega_S = S(-sum deg x_i); for CM R
// the ambient resolution has length exactly n - d, so this is the cokernel of
// the transposed last differential.
inline PresentedModule canonicalModule(const RingPtr& R) {
  if (!R->isCM) throw std::invalid_argument("canonical module requested for a non-CM ring");
  const PolyRing& S = R->S;
  int n = S.nvars();
  int c = n - R->dim;
  int sigma = 0;
  for (int d : S.degs) sigma += d;
  ResolutionWindow W = resolveCols(R, true, 1, {0}, R->gb.gens, n + 1);
  if (!W.finite || W.pd != c)
    throw std::logic_error("ambient resolution length disagrees with codimension");
  if (c == 0) return freeModule(R, {sigma});  // R regular: omega = R(-sigma)
  int bc = W.betti[c];
  std::vector<int> shifts(bc);
  for (int j = 0; j < bc; ++j) shifts[j] = sigma - W.shifts[c][j];
  std::vector<PolyVector> rels;
  const auto& dcols = W.diff[c - 1];  // d_c: F_c -> F_{c-1}
  int bprev = W.betti[c - 1];
  for (int i = 0; i < bprev; ++i) {
    PolyVector col{bc, {}};
    for (int j = 0; j < bc; ++j) {
      PolyVector e = pv::component(dcols[j], i);
      if (!e.isZero()) col = pv::add(S, col, pv::shiftComp(e, j, bc));
    }
    if (!col.isZero()) rels.push_back(std::move(col));
  }
  PresentedModule W0;
  W0.R = R;
  W0.gens = bc;
  W0.shifts = std::move(shifts);
  for (auto& r : rels) {
    PolyVector v = nfVec(*R, r);
    if (!v.isZero()) W0.rels.push_back(std::move(v));
  }
  return minimalize(W0);
}

// Hom_R(M, omega_R)
inline PresentedModule dualCanonical(const PresentedModule& M, const PresentedModule& omega) {
  return homModule(M, omega);
}

// --- tilde cut-down -------------------------------------------------------

// Omega^{|xs|}_R(M / xs M) for a regular sequence xs on R.
inline PresentedModule cutDownTilde(const PresentedModule& M,
                                    const std::vector<PolyVector>& xs) {
  std::vector<PolyVector> checked;
  for (const auto& x : xs) {
    if (!isRegularOn(*M.R, checked, x))
      throw std::invalid_argument("cut-down sequence is not regular on the ring");
    checked.push_back(x);
  }
  PresentedModule Q = quotientBySequence(M, xs);
  return syzygyModule(Q, int(xs.size()));
}

// --- pushforward ----------------------------------------------------------

// The pushout L of Omega^1(M) -> F_0 along multiplication by x, presented on
// the generators of F_0 plus the generators of Omega^1(M).
inline PresentedModule pushforward(const PresentedModule& Min, const PolyVector& x) {
  const PresentedRing& R = *Min.R;
  const PolyRing& S = R.S;
  if (!isRegularOn(R, {}, x))
    throw std::invalid_argument("pushforward element is a zerodivisor on the ring");
  PresentedModule M = minimalize(Min);
  if (M.rels.empty()) return M;  // free module: Omega^1 = 0, L = M
  int g = M.gens;
  int c = int(M.rels.size());
  int dx = pv::degree(S, x, {0});
  std::vector<int> shifts = M.shifts;
  for (int k = 0; k < c; ++k) shifts.push_back(pv::degree(S, M.rels[k], M.shifts) - dx);
  int amb = g + c;
  std::vector<PolyVector> rels;
  for (int k = 0; k < c; ++k) {
    PolyVector col = pv::shiftComp(M.rels[k], 0, amb);
    PolyVector xe = pv::mulRing(S, x, pv::unitVector(S, amb, g + k));
    col = pv::sub(S, col, xe);
    rels.push_back(std::move(col));
  }
  auto d2 = syzygiesOverRing(S, R.gb.gens, M.rels, g);
  for (const auto& w : d2) rels.push_back(pv::shiftComp(w, g, amb));
  return minimalize(makeModule(M.R, std::move(shifts), std::move(rels)));
}

// --- non-free locus and constant rank ------------------------------------

// dim V(Ann Ext^1(M, Omega^1 M)); -1 when M is free.
inline int nonfreeLocusDim(const PresentedModule& Min) {
  PresentedModule M = minimalize(Min);
  if (M.rels.empty()) return -1;
  PresentedModule O1 = syzygyModule(M, 1);
  PresentedModule E = extModule(M, O1, 1);
  if (isZeroModule(E)) return -1;
  return measure(E).dim;
}

// determinant of a k x k matrix of ring elements by Laplace expansion
inline PolyVector ringDet(const PolyRing& S, const std::vector<std::vector<PolyVector>>& m) {
  int k = int(m.size());
  if (k == 0) return pv::constant(S, fe::one(S.field));
  if (k == 1) return m[0][0];
  PolyVector det = pv::zero(1);
  for (int i = 0; i < k; ++i) {
    if (m[i][0].isZero()) continue;
    std::vector<std::vector<PolyVector>> sub;
    for (int r = 0; r < k; ++r) {
      if (r == i) continue;
      std::vector<PolyVector> row(m[r].begin() + 1, m[r].end());
      sub.push_back(std::move(row));
    }
    PolyVector term = pv::mulRing(S, m[i][0], ringDet(S, sub));
    det = i % 2 == 0 ? pv::add(S, det, term) : pv::sub(S, det, term);
  }
  return det;
}

// generators of the ideal of k x k minors of the presentation matrix
inline std::vector<PolyVector> minorIdeal(const PolyRing& S,
                                          const std::vector<PolyVector>& cols, int rows, int k) {
  std::vector<PolyVector> out;
  int c = int(cols.size());
  if (k <= 0) return {pv::constant(S, fe::one(S.field))};
  if (k > rows || k > c) return {};
  std::vector<int> ri(k), ci(k);
  // iterate over k-subsets of rows and of columns
  std::vector<int> rsel(k), csel(k);
  for (int i = 0; i < k; ++i) rsel[i] = i;
  for (;;) {
    for (int i = 0; i < k; ++i) csel[i] = i;
    for (;;) {
      std::vector<std::vector<PolyVector>> m(k, std::vector<PolyVector>(k));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) m[a][b] = pv::component(cols[csel[b]], rsel[a]);
      PolyVector d = ringDet(S, m);
      if (!d.isZero()) out.push_back(std::move(d));
      // next column subset
      int i = k - 1;
      while (i >= 0 && csel[i] == c - k + i) --i;
      if (i < 0) break;
      ++csel[i];
      for (int j = i + 1; j < k; ++j) csel[j] = csel[j - 1] + 1;
    }
    int i = k - 1;
    while (i >= 0 && rsel[i] == rows - k + i) --i;
    if (i < 0) break;
    ++rsel[i];
    for (int j = i + 1; j < k; ++j) rsel[j] = rsel[j - 1] + 1;
  }
  return out;
}

// Constant rank r at the minimal primes, decided via Fitting ideals: the
// least r with Fitt_{r-1}(M) nilpotent and dim R/Fitt_r(M) < dim R.
inline std::optional<int> constantRank(const PresentedModule& Min) {
  PresentedModule M = minimalize(Min);
  const PresentedRing& R = *M.R;
  const PolyRing& S = R.S;
  int g = M.gens;
  for (int r = 0; r <= g; ++r) {
    // Fitt_{r-1} = ideal of (g-r+1)-minors
    auto fitPrev = minorIdeal(S, M.rels, g, g - r + 1);
    bool nilpotent = true;
    for (const auto& f : fitPrev)
      if (!gb::radicalMembership(S, f, R.ideal)) {
        nilpotent = false;
        break;
      }
    if (!nilpotent) break;  // Fitting ideals grow with r: nilpotency cannot recover
    auto fitR = minorIdeal(S, M.rels, g, g - r);
    std::vector<PolyVector> big = R.ideal;
    for (auto& f : fitR) big.push_back(std::move(f));
    int d = gb::krullDim(S, gb::buchberger(S, big));
    if (d < R.dim) return r;
  }
  return std::nullopt;
}

}  // namespace rg

}  // namespace depthlab
