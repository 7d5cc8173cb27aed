// Bounded complexes of free modules over a presented ring: Koszul complexes,
// tensor products, shifts/cones/brutal truncations, homology as presented
// modules, depth of complexes via the Koszul characterization, MCM detection,
// and windowed derived tensor products.
#pragma once

#include "depthlab/module_ops.hpp"

namespace depthlab {

// Chain complex ... -> C_{hi} -> ... -> C_{lo} -> 0, with C_i free of rank
// ranks[i - lo]; diff d_i: C_i -> C_{i-1} given by columns in S^{rank(i-1)}.
struct FreeComplex {
  RingPtr R;
  int lo = 0;
  int hi = -1;  // empty complex when hi < lo
  std::vector<int> ranks;
  std::vector<std::vector<int>> shifts;
  std::vector<std::vector<PolyVector>> dcols;  // dcols[j] = d_{lo+1+j}

  bool empty() const { return hi < lo; }
  int rank(int i) const { return (i < lo || i > hi) ? 0 : ranks[i - lo]; }
  const std::vector<int>& shiftsAt(int i) const {
    static const std::vector<int> none;
    return (i < lo || i > hi) ? none : shifts[i - lo];
  }
  // columns of d_i: C_i -> C_{i-1}; empty outside (lo, hi]
  const std::vector<PolyVector>& diff(int i) const {
    static const std::vector<PolyVector> none;
    return (i <= lo || i > hi) ? none : dcols[i - lo - 1];
  }
};

// A complex of copies of a presented module: represents F (x) M degreewise.
struct ModuleComplex {
  FreeComplex F;
  PresentedModule M;
};

struct DerivedTensorResult {
  FreeComplex C;       // truncated F_M (x) F_N
  int window = 0;      // resolution window w
  int validity = 0;    // homology trustworthy in degrees <= validity (= w - 1)
  bool exact_model = false;  // both resolutions finite inside the window: C is
                             // the full derived tensor, no truncation junk
};

namespace cx {

inline void checkComplex(const FreeComplex& C) {
  const PolyRing& S = C.R->S;
  for (int i = C.lo + 1; i <= C.hi; ++i) {
    const auto& d = C.diff(i);
    if (int(d.size()) != C.rank(i)) throw std::invalid_argument("differential size mismatch");
    for (int j = 0; j < C.rank(i); ++j) {
      if (!d[j].isZero() && !pv::isHomogeneous(S, d[j], C.shiftsAt(i - 1)))
        throw std::invalid_argument("differential entry not homogeneous");
    }
    if (i >= C.lo + 2) {
      const auto& dprev = C.diff(i - 1);
      for (const auto& col : d) {
        PolyVector acc{std::max(C.rank(i - 2), 1), {}};
        for (int r = 0; r < C.rank(i - 1); ++r) {
          PolyVector e = pv::component(col, r);
          if (!e.isZero()) acc = pv::add(S, acc, pv::mulRing(S, e, dprev[r]));
        }
        if (!rg::nfVec(*C.R, acc).isZero())
          throw std::invalid_argument("d^2 != 0 in free complex");
      }
    }
  }
}

inline FreeComplex zeroComplex(RingPtr R) {
  FreeComplex C;
  C.R = std::move(R);
  C.lo = 0;
  C.hi = -1;
  return C;
}

// the module M's free presentation does not appear here: a single free term
inline FreeComplex freeTerm(RingPtr R, std::vector<int> shifts, int degree = 0) {
  FreeComplex C;
  C.R = std::move(R);
  C.lo = degree;
  C.hi = degree;
  C.ranks = {int(shifts.size())};
  C.shifts = {std::move(shifts)};
  return C;
}

// minimal free resolution window as a complex in degrees [0, width]
inline FreeComplex resolutionComplex(const ResolutionWindow& W) {
  FreeComplex C;
  C.R = W.R;
  C.lo = 0;
  C.hi = W.width;
  C.ranks = W.betti;
  C.shifts = W.shifts;
  C.dcols = W.diff;
  // trim trailing zero terms
  while (C.hi > C.lo && C.rank(C.hi) == 0) {
    C.ranks.pop_back();
    C.shifts.pop_back();
    C.dcols.pop_back();
    --C.hi;
  }
  return C;
}

// --- Koszul complex -------------------------------------------------------

// K(xs; R): term i has basis e_T for |T| = i, T subsets of {0..m-1} in
// lexicographic order; d(e_T) = sum_t (-1)^{pos(t,T)} x_t e_{T \ t}.
inline FreeComplex koszulComplex(RingPtr R, const std::vector<PolyVector>& xs) {
  const PolyRing& S = R->S;
  int m = int(xs.size());
  std::vector<int> xdeg(m);
  for (int t = 0; t < m; ++t) xdeg[t] = pv::degree(S, xs[t], {0});
  // subsets of size i in lex order, per homological degree
  std::vector<std::vector<std::vector<int>>> subsets(m + 1);
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    subsets[cur.size()].push_back(cur);
    for (int t = start; t < m; ++t) {
      cur.push_back(t);
      self(self, t + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  for (auto& level : subsets)
    std::sort(level.begin(), level.end());

  FreeComplex K;
  K.R = R;
  K.lo = 0;
  K.hi = m;
  for (int i = 0; i <= m; ++i) {
    K.ranks.push_back(int(subsets[i].size()));
    std::vector<int> sh;
    for (const auto& T : subsets[i]) {
      int s = 0;
      for (int t : T) s += xdeg[t];
      sh.push_back(s);
    }
    K.shifts.push_back(std::move(sh));
  }
  for (int i = 1; i <= m; ++i) {
    std::vector<PolyVector> cols;
    int prevRank = K.ranks[i - 1];
    for (const auto& T : subsets[i]) {
      PolyVector col{std::max(prevRank, 1), {}};
      for (size_t pos = 0; pos < T.size(); ++pos) {
        std::vector<int> Tm = T;
        Tm.erase(Tm.begin() + pos);
        int idx = int(std::lower_bound(subsets[i - 1].begin(), subsets[i - 1].end(), Tm) -
                      subsets[i - 1].begin());
        PolyVector term = pv::mulRing(S, xs[T[pos]], pv::unitVector(S, std::max(prevRank, 1), idx));
        col = pos % 2 == 0 ? pv::add(S, col, term) : pv::sub(S, col, term);
      }
      cols.push_back(rg::nfVec(*R, col));
    }
    K.dcols.push_back(std::move(cols));
  }
  return K;
}

inline FreeComplex koszulOnVariables(const RingPtr& R) {
  std::vector<PolyVector> xs;
  for (int i = 0; i < R->S.nvars(); ++i) xs.push_back(rg::nfPoly(*R, pv::variable(R->S, i)));
  return koszulComplex(R, xs);
}

// --- tensor product -------------------------------------------------------

// block layout of (F (x) G)_n: blocks (i, n-i) for i descending from hi_F;
// within a block, index a * rankG + b.
inline FreeComplex tensorComplexes(const FreeComplex& F, const FreeComplex& G) {
  if (F.empty() || G.empty()) return zeroComplex(F.R);
  const PolyRing& S = F.R->S;
  if (F.R.get() != G.R.get()) throw std::invalid_argument("tensor of complexes over different rings");
  FreeComplex T;
  T.R = F.R;
  T.lo = F.lo + G.lo;
  T.hi = F.hi + G.hi;
  // offsets[n - T.lo][i - F.lo] = start of block (i, n-i) in T_n
  std::vector<std::vector<int>> offsets(T.hi - T.lo + 1);
  for (int n = T.lo; n <= T.hi; ++n) {
    int r = 0;
    std::vector<int> off(F.hi - F.lo + 1, -1);
    std::vector<int> sh;
    for (int i = F.hi; i >= F.lo; --i) {
      int j = n - i;
      if (j < G.lo || j > G.hi) continue;
      off[i - F.lo] = r;
      r += F.rank(i) * G.rank(j);
      for (int a = 0; a < F.rank(i); ++a)
        for (int b = 0; b < G.rank(j); ++b)
          sh.push_back(F.shiftsAt(i)[a] + G.shiftsAt(j)[b]);
    }
    offsets[n - T.lo] = std::move(off);
    T.ranks.push_back(r);
    T.shifts.push_back(std::move(sh));
  }
  for (int n = T.lo + 1; n <= T.hi; ++n) {
    int prevRank = std::max(T.rank(n - 1), 1);
    std::vector<PolyVector> cols;
    for (int i = F.hi; i >= F.lo; --i) {
      int j = n - i;
      if (j < G.lo || j > G.hi) continue;
      for (int a = 0; a < F.rank(i); ++a)
        for (int b = 0; b < G.rank(j); ++b) {
          PolyVector col{prevRank, {}};
          // dF (x) id: block (i-1, j) of T_{n-1}
          if (i > F.lo) {
            int off = offsets[n - 1 - T.lo][i - 1 - F.lo];
            const PolyVector& da = F.diff(i)[a];
            for (int r = 0; r < F.rank(i - 1); ++r) {
              PolyVector e = pv::component(da, r);
              if (!e.isZero())
                col = pv::add(S, col, pv::shiftComp(e, off + r * G.rank(j) + b, prevRank));
            }
          }
          // (-1)^i id (x) dG: block (i, j-1) of T_{n-1}
          if (j > G.lo) {
            int off = offsets[n - 1 - T.lo][i - F.lo];
            const PolyVector& db = G.diff(j)[b];
            for (int r = 0; r < G.rank(j - 1); ++r) {
              PolyVector e = pv::component(db, r);
              if (e.isZero()) continue;
              PolyVector term = pv::shiftComp(e, off + a * G.rank(j - 1) + r, prevRank);
              col = i % 2 == 0 ? pv::add(S, col, term) : pv::sub(S, col, term);
            }
          }
          cols.push_back(rg::nfVec(*T.R, col));
        }
    }
    T.dcols.push_back(std::move(cols));
  }
  return T;
}

// --- reshaping ------------------------------------------------------------

// (C[s])_i = C_{i-s}; differentials pick up the sign (-1)^s.
inline FreeComplex shift(FreeComplex C, int s) {
  C.lo += s;
  C.hi += s;
  if (s % 2 != 0)
    for (auto& cols : C.dcols)
      for (auto& c : cols) c = pv::neg(c);
  return C;
}

// brutal truncation tau_{>= i}: keep degrees >= i
inline FreeComplex truncateGe(const FreeComplex& C, int i) {
  if (i <= C.lo) return C;
  FreeComplex T;
  T.R = C.R;
  if (i > C.hi) return zeroComplex(C.R);
  T.lo = i;
  T.hi = C.hi;
  T.ranks.assign(C.ranks.begin() + (i - C.lo), C.ranks.end());
  T.shifts.assign(C.shifts.begin() + (i - C.lo), C.shifts.end());
  T.dcols.assign(C.dcols.begin() + (i - C.lo), C.dcols.end());
  return T;
}

// brutal truncation tau^{>= i}: keep cohomological degrees >= i, i.e.
// homological degrees <= -i
inline FreeComplex truncateCoGe(const FreeComplex& C, int i) {
  int cut = -i;  // keep homological degrees <= cut
  if (cut >= C.hi) return C;
  FreeComplex T;
  T.R = C.R;
  if (cut < C.lo) return zeroComplex(C.R);
  T.lo = C.lo;
  T.hi = cut;
  T.ranks.assign(C.ranks.begin(), C.ranks.begin() + (cut - C.lo + 1));
  T.shifts.assign(C.shifts.begin(), C.shifts.begin() + (cut - C.lo + 1));
  T.dcols.assign(C.dcols.begin(), C.dcols.begin() + (cut - C.lo));
  return T;
}

// Degreewise chain map phi: F -> G; mats[i - F.lo] = columns of phi_i in
// S^{G.rank(i)} (one column per generator of F_i).
struct ChainMap {
  FreeComplex F, G;
  std::vector<std::vector<PolyVector>> mats;

  const std::vector<PolyVector>& at(int i) const {
    static const std::vector<PolyVector> none;
    return (i < F.lo || i > F.hi) ? none : mats[i - F.lo];
  }
};

inline PolyVector applyCols(const PolyRing& S, const std::vector<PolyVector>& cols,
                            const PolyVector& v, int outRank) {
  PolyVector acc{std::max(outRank, 1), {}};
  for (size_t r = 0; r < cols.size(); ++r) {
    PolyVector e = pv::component(v, int(r));
    if (!e.isZero()) acc = pv::add(S, acc, pv::mulRing(S, e, cols[r]));
  }
  return acc;
}

inline void checkChainMap(const ChainMap& f) {
  const PolyRing& S = f.F.R->S;
  for (int i = f.F.lo + 1; i <= f.F.hi; ++i) {
    for (int a = 0; a < f.F.rank(i); ++a) {
      // phi_{i-1}(dF(e_a)) = dG(phi_i(e_a))
      PolyVector lhs = applyCols(S, f.at(i - 1), f.F.diff(i)[a], f.G.rank(i - 1));
      PolyVector rhs{std::max(f.G.rank(i - 1), 1), {}};
      if (i >= f.G.lo + 1 && i <= f.G.hi)
        rhs = applyCols(S, f.G.diff(i), f.at(i)[a], f.G.rank(i - 1));
      if (!rg::nfVec(*f.F.R, pv::sub(S, lhs, rhs)).isZero())
        throw std::invalid_argument("cone input is not a chain map");
    }
  }
}

// cone(phi)_n = F_{n-1} (+) G_n, d(f, g) = (-dF f, phi f + dG g).
inline FreeComplex cone(const ChainMap& f) {
  checkChainMap(f);
  const PolyRing& S = f.F.R->S;
  FreeComplex C;
  C.R = f.F.R;
  C.lo = std::min(f.F.lo + 1, f.G.lo);
  C.hi = std::max(f.F.hi + 1, f.G.hi);
  for (int n = C.lo; n <= C.hi; ++n) {
    int rf = f.F.rank(n - 1), rgk = f.G.rank(n);
    C.ranks.push_back(rf + rgk);
    std::vector<int> sh;
    for (int a = 0; a < rf; ++a) sh.push_back(f.F.shiftsAt(n - 1)[a]);
    for (int b = 0; b < rgk; ++b) sh.push_back(f.G.shiftsAt(n)[b]);
    C.shifts.push_back(std::move(sh));
  }
  for (int n = C.lo + 1; n <= C.hi; ++n) {
    int prevF = f.F.rank(n - 2), prevRank = std::max(C.rank(n - 1), 1);
    std::vector<PolyVector> cols;
    for (int a = 0; a < f.F.rank(n - 1); ++a) {
      PolyVector col{prevRank, {}};
      if (n - 1 > f.F.lo) {
        const PolyVector& d = f.F.diff(n - 1)[a];
        col = pv::sub(S, col, pv::shiftComp(d, 0, prevRank));
      }
      const auto& phi = f.at(n - 1);
      if (!phi.empty()) col = pv::add(S, col, pv::shiftComp(phi[a], prevF, prevRank));
      cols.push_back(rg::nfVec(*C.R, col));
    }
    for (int b = 0; b < f.G.rank(n); ++b) {
      PolyVector col{prevRank, {}};
      if (n > f.G.lo && n <= f.G.hi)
        col = pv::shiftComp(f.G.diff(n)[b], prevF, prevRank);
      cols.push_back(rg::nfVec(*C.R, col));
    }
    C.dcols.push_back(std::move(cols));
  }
  return C;
}

inline ChainMap identityMap(const FreeComplex& F) {
  ChainMap f;
  f.F = F;
  f.G = F;
  for (int i = F.lo; i <= F.hi; ++i) {
    std::vector<PolyVector> cols;
    for (int a = 0; a < F.rank(i); ++a) cols.push_back(pv::unitVector(F.R->S, F.rank(i), a));
    f.mats.push_back(std::move(cols));
  }
  return f;
}

// --- homology -------------------------------------------------------------

inline PresentedModule homology(const FreeComplex& C, int i) {
  RingPtr R = C.R;
  if (i < C.lo || i > C.hi) return rg::freeModule(R, {});
  const PolyRing& S = R->S;
  int ri = C.rank(i);
  if (ri == 0) return rg::freeModule(R, {});
  std::vector<PolyVector> Z;
  if (i == C.lo || C.diff(i).empty()) {
    for (int a = 0; a < ri; ++a) Z.push_back(pv::unitVector(S, ri, a));
  } else {
    int rprev = C.rank(i - 1);
    if (rprev == 0) {
      for (int a = 0; a < ri; ++a) Z.push_back(pv::unitVector(S, ri, a));
    } else {
      Z = rg::preimageGens(S, R->gb.gens, C.diff(i), ri, rprev, {});
    }
  }
  std::vector<PolyVector> B;
  for (const auto& c : C.diff(i + 1)) B.push_back(c);
  return rg::presentSubquotient(R, ri, C.shiftsAt(i), Z, B);
}

// H_i(F (x) M) for the module complex F (x) M.
inline PresentedModule homology(const ModuleComplex& MC, int i) {
  const FreeComplex& C = MC.F;
  RingPtr R = C.R;
  if (i < C.lo || i > C.hi) return rg::freeModule(R, {});
  const PolyRing& S = R->S;
  PresentedModule N = rg::minimalize(MC.M);
  int t = N.gens;
  int ri = C.rank(i);
  if (ri == 0 || t == 0) return rg::freeModule(R, {});
  int amb = ri * t;
  std::vector<int> sh = rg::blockShifts(C.shiftsAt(i), N.shifts, false);
  std::vector<PolyVector> Z;
  if (i == C.lo || C.rank(i - 1) == 0) {
    for (int a = 0; a < amb; ++a) Z.push_back(pv::unitVector(S, amb, a));
  } else {
    auto bigD = rg::tensorBlockCols(S, C.diff(i), C.rank(i - 1), t);
    auto target = rg::blockRels(S, N, C.rank(i - 1));
    Z = rg::preimageGens(S, R->gb.gens, bigD, amb, C.rank(i - 1) * t, target);
  }
  std::vector<PolyVector> B = rg::blockRels(S, N, ri);
  if (i + 1 <= C.hi && C.rank(i + 1) > 0)
    for (auto& c : rg::tensorBlockCols(S, C.diff(i + 1), ri, t)) B.push_back(std::move(c));
  return rg::presentSubquotient(R, amb, sh, Z, B);
}

inline ModuleComplex koszulComplexOnModule(const RingPtr& R, const std::vector<PolyVector>& xs,
                                           const PresentedModule& M) {
  return ModuleComplex{koszulComplex(R, xs), M};
}

// --- depth of complexes ---------------------------------------------------

// largest i in [C.lo, C.hi] with H_i != 0, or kDepthNegInf when exact
inline int supHomology(const FreeComplex& C) {
  for (int i = C.hi; i >= C.lo; --i)
    if (!rg::isZeroModule(homology(C, i))) return i;
  return kDepthNegInf;
}

inline int infHomology(const FreeComplex& C) {
  for (int i = C.lo; i <= C.hi; ++i)
    if (!rg::isZeroModule(homology(C, i))) return i;
  return kDepthInf;
}

// depth via the Koszul characterization: n - sup{ i : H_i(K(vars) (x) C) != 0 }
inline int depthComplex(const FreeComplex& C) {
  if (C.empty()) return kDepthInf;
  // Over an Artinian ring the section functor with support at the maximal
  // ideal is the identity, so depth is minus the top degree of homology.
  if (C.R->isArtinian) {
    int s = supHomology(C);
    return s == kDepthNegInf ? kDepthInf : -s;
  }
  FreeComplex K = koszulOnVariables(C.R);
  FreeComplex T = tensorComplexes(K, C);
  int s = supHomology(T);
  if (s == kDepthNegInf) return kDepthInf;  // exact complex
  return C.R->S.nvars() - s;
}

// Depth when the homology of C is known to vanish above supBound. The Koszul
// homology of K (x) C then vanishes above supBound + n, so the complex is
// brutally truncated at supBound + n + 1 (preserving homology up to
// supBound + n) and only Koszul degrees <= supBound + n are scanned; the
// truncation junk, concentrated in degree supBound + n + 1, cannot reach them.
inline int depthComplexBounded(const FreeComplex& C, int supBound) {
  if (C.empty()) return kDepthInf;
  // Over an Artinian ring the section functor with support at the maximal
  // ideal is the identity, so the depth of a complex is minus the top degree
  // of nonzero homology; no Koszul scan is needed.
  if (C.R->isArtinian) {
    for (int i = std::min(C.hi, supBound); i >= C.lo; --i)
      if (!rg::isZeroModule(homology(C, i))) return -i;
    return kDepthInf;
  }
  int n = C.R->S.nvars();
  FreeComplex body = truncateCoGe(C, -(supBound + n + 1));
  if (body.empty()) return kDepthInf;
  FreeComplex KT = tensorComplexes(koszulOnVariables(body.R), body);
  for (int i = std::min(KT.hi, supBound + n); i >= KT.lo; --i)
    if (!rg::isZeroModule(homology(KT, i))) return n - i;
  return kDepthInf;
}

struct McmVerdict {
  bool exact = false;      // no homology: MCM question meaningless
  int normalization = 0;   // inf of nonzero homology (shift applied)
  bool isMcm = false;
};

inline McmVerdict isMcmComplex(const FreeComplex& C) {
  McmVerdict v;
  int s = infHomology(C);
  if (s == kDepthInf) {
    v.exact = true;
    return v;
  }
  v.normalization = s;
  int d = depthComplex(C);
  // depth of the normalized complex C[-s] is depth(C) + s
  v.isMcm = (d == kDepthInf) || (d + s >= C.R->dim);
  return v;
}

// --- derived tensor products ----------------------------------------------

inline DerivedTensorResult derivedTensor(const PresentedModule& M, const PresentedModule& N,
                                         int w) {
  ResolutionWindow FM = rg::minFreeResolution(M, w);
  ResolutionWindow FN = rg::minFreeResolution(N, w);
  DerivedTensorResult out;
  out.window = w;
  out.validity = w - 1;
  out.exact_model = FM.finite && FN.finite && FM.pd + FN.pd < w;
  out.C = tensorComplexes(resolutionComplex(FM), resolutionComplex(FN));
  return out;
}

struct DepthReport {
  int depth = 0;
  bool certified = false;
  int homologySup = 0;       // detected sup of homology within validity
  bool zeroComplex = false;  // no homology found within the validity window
};

// Depth of a windowed derived tensor with the soundness bound
// w >= sup + n + 2 (truncation junk cannot reach the Koszul window).
inline DepthReport depthDerivedTensor(const DerivedTensorResult& D) {
  DepthReport rep;
  int n = D.C.R->S.nvars();
  // homology of the windowed tensor equals Tor in degrees <= validity
  int s = kDepthNegInf;
  int top = D.exact_model ? D.C.hi : std::min(D.C.hi, D.validity);
  for (int i = top; i >= D.C.lo; --i)
    if (!rg::isZeroModule(homology(D.C, i))) {
      s = i;
      break;
    }
  if (s == kDepthNegInf) {
    rep.zeroComplex = true;
    rep.depth = kDepthInf;
    rep.certified = D.exact_model;
    return rep;
  }
  rep.homologySup = s;
  rep.certified = D.exact_model || D.window >= s + n + 2;
  if (D.exact_model) {
    rep.depth = depthComplex(D.C);
    return rep;
  }
  // Koszul homology of K (x) C vanishes above s + n (spectral-sequence bound);
  // truncating C at s + n + 1 keeps every homology that can contribute while
  // cutting the junk degrees >= w of the window model.
  rep.depth = depthComplexBounded(D.C, s);
  return rep;
}

}  // namespace cx

}  // namespace depthlab
