// Lifting a free resolution over R/x to a complex of free R-modules via the
// degree -2 operator t^e (standard Eisenbud-operator construction), and the
// short exact sequence 0 -> (M (x)^L_{R/x} N)[1] -> M (x)^L_R N ->
// M (x)^L_{R/x} N -> 0 built from it (note: shifts here use the convention
// (C[s])_i = C_{i-s}, so the cited [-1] appears as [+1]).
#pragma once

#include "depthlab/complex.hpp"

namespace depthlab {

struct EisenbudLift {
  RingPtr R;                // the base ring (x not yet divided out)
  RingPtr Rbar;             // R/x
  PolyVector x;
  int xdeg = 0;
  FreeComplex Fbar;         // the input resolution over R/x
  FreeComplex G;            // lifted complex over R: G_m = F_{m-1}(+e) (+) F_m
  // lifted differentials and the operator, per degree of Fbar:
  std::vector<std::vector<PolyVector>> dhat;  // dhat[m - lo - 1] = lift of d_m
  std::vector<std::vector<PolyVector>> te;    // te[m - lo - 2] = t^e_m: F_m -> F_{m-2}
};

namespace cx {

// Reinterpret a complex over a smaller quotient ring (entries reduced there).
inline FreeComplex reduceComplex(const FreeComplex& C, RingPtr Rsmall) {
  FreeComplex out = C;
  out.R = std::move(Rsmall);
  for (auto& cols : out.dcols)
    for (auto& c : cols) c = rg::nfVec(*out.R, c);
  return out;
}

inline EisenbudLift liftResolutionEisenbud(const FreeComplex& Fbar, const RingPtr& R,
                                           const PolyVector& x, const RingPtr& Rbar) {
  const PolyRing& S = R->S;
  if (!rg::isRegularOn(*R, {}, x))
    throw std::invalid_argument("lift element is a zerodivisor on the base ring");
  EisenbudLift L;
  L.R = R;
  L.Rbar = Rbar;
  L.x = x;
  L.xdeg = pv::degree(S, x, {0});
  L.Fbar = Fbar;

  // entrywise lift: reduce the given representatives modulo I only
  for (int m = Fbar.lo + 1; m <= Fbar.hi; ++m) {
    std::vector<PolyVector> cols;
    for (const auto& c : Fbar.diff(m)) cols.push_back(rg::nfVec(*R, c));
    L.dhat.push_back(std::move(cols));
  }
  auto dhatAt = [&](int m) -> const std::vector<PolyVector>& {
    static const std::vector<PolyVector> none;
    return (m <= Fbar.lo || m > Fbar.hi) ? none : L.dhat[m - Fbar.lo - 1];
  };

  // t^e = -(dhat o dhat)/x, entrywise exact division modulo I
  std::vector<PolyVector> divisors = {x};
  for (const auto& g : R->gb.gens) divisors.push_back(g);
  gb::GraphGB divGraph = gb::graphBasis(S, divisors, 1);
  auto divideByX = [&](const PolyVector& h) {
    auto coeffs = gb::expressFromGraph(divGraph, h);
    if (!coeffs) throw std::logic_error("t^e division by x is not exact");
    return (*coeffs)[0];
  };
  for (int m = Fbar.lo + 2; m <= Fbar.hi; ++m) {
    int r2 = Fbar.rank(m - 2);
    std::vector<PolyVector> cols;
    for (const auto& cb : dhatAt(m)) {
      // dd = dhat_{m-1}(dhat_m(e_b)) in S^{r2}
      PolyVector dd = applyCols(S, dhatAt(m - 1), cb, r2);
      dd = rg::nfVec(*R, dd);
      PolyVector tcol{std::max(r2, 1), {}};
      for (int r = 0; r < r2; ++r) {
        PolyVector h = pv::component(dd, r);
        if (h.isZero()) continue;
        PolyVector q = divideByX(h);
        tcol = pv::sub(S, tcol, pv::shiftComp(q, r, std::max(r2, 1)));
      }
      cols.push_back(rg::nfVec(*R, tcol));
    }
    L.te.push_back(std::move(cols));
  }
  auto teAt = [&](int m) -> const std::vector<PolyVector>& {
    static const std::vector<PolyVector> none;
    return (m <= Fbar.lo + 1 || m > Fbar.hi) ? none : L.te[m - Fbar.lo - 2];
  };

  // assemble G: G_m = F_{m-1}(+e) (+) F_m for m in [lo, hi + 1]
  FreeComplex G;
  G.R = R;
  G.lo = Fbar.lo;
  G.hi = Fbar.hi + 1;
  for (int m = G.lo; m <= G.hi; ++m) {
    int r1 = Fbar.rank(m - 1), r2 = Fbar.rank(m);
    G.ranks.push_back(r1 + r2);
    std::vector<int> sh;
    for (int a = 0; a < r1; ++a) sh.push_back(Fbar.shiftsAt(m - 1)[a] + L.xdeg);
    for (int b = 0; b < r2; ++b) sh.push_back(Fbar.shiftsAt(m)[b]);
    G.shifts.push_back(std::move(sh));
  }
  for (int m = G.lo + 1; m <= G.hi; ++m) {
    int prevR = std::max(G.rank(m - 1), 1);
    int prevF = Fbar.rank(m - 2);  // size of first block of G_{m-1}
    std::vector<PolyVector> cols;
    // first block: u in F_{m-1} -> (dhat_{m-1} u, (-1)^{m-1} x u)
    for (int a = 0; a < Fbar.rank(m - 1); ++a) {
      PolyVector col{prevR, {}};
      if (m - 1 > Fbar.lo) col = pv::shiftComp(dhatAt(m - 1)[a], 0, prevR);
      PolyVector xe = pv::mulRing(S, x, pv::unitVector(S, prevR, prevF + a));
      col = (m - 1) % 2 == 0 ? pv::add(S, col, xe) : pv::sub(S, col, xe);
      cols.push_back(rg::nfVec(*R, col));
    }
    // second block: v in F_m -> ((-1)^m t^e v, dhat_m v)
    for (int b = 0; b < Fbar.rank(m); ++b) {
      PolyVector col{prevR, {}};
      if (m >= Fbar.lo + 2) {
        const auto& tcols = teAt(m);
        if (!tcols.empty() && !tcols[b].isZero()) {
          PolyVector t = pv::shiftComp(tcols[b], 0, prevR);
          col = m % 2 == 0 ? pv::add(S, col, t) : pv::sub(S, col, t);
        }
      }
      if (m <= Fbar.hi) col = pv::add(S, col, pv::shiftComp(dhatAt(m)[b], prevF, prevR));
      cols.push_back(rg::nfVec(*R, col));
    }
    G.dcols.push_back(std::move(cols));
  }
  checkComplex(G);  // asserts d^2 = 0 over R and homogeneity
  L.G = std::move(G);
  return L;
}

// the subcomplex of R/x (x) G formed by the first blocks: F^{R/x}[1] (with a
// degree twist by deg x and un-negated differentials)
inline FreeComplex liftSubcomplex(const EisenbudLift& L) {
  FreeComplex Sb;
  Sb.R = L.Rbar;
  Sb.lo = L.Fbar.lo + 1;
  Sb.hi = L.Fbar.hi + 1;
  for (int m = Sb.lo; m <= Sb.hi; ++m) {
    Sb.ranks.push_back(L.Fbar.rank(m - 1));
    std::vector<int> sh;
    for (int s : L.Fbar.shiftsAt(m - 1)) sh.push_back(s + L.xdeg);
    Sb.shifts.push_back(std::move(sh));
  }
  for (int m = Sb.lo + 1; m <= Sb.hi; ++m) {
    std::vector<PolyVector> cols;
    for (const auto& c : L.Fbar.diff(m - 1)) cols.push_back(rg::nfVec(*L.Rbar, c));
    Sb.dcols.push_back(std::move(cols));
  }
  return Sb;
}

// inclusion of the first blocks: liftSubcomplex -> R/x (x) G
inline ChainMap liftInclusion(const EisenbudLift& L, const FreeComplex& Gbar,
                              const FreeComplex& sub) {
  ChainMap f;
  f.F = sub;
  f.G = Gbar;
  const PolyRing& S = L.R->S;
  for (int m = sub.lo; m <= sub.hi; ++m) {
    std::vector<PolyVector> cols;
    for (int a = 0; a < sub.rank(m); ++a)
      cols.push_back(pv::unitVector(S, std::max(Gbar.rank(m), 1), a));
    f.mats.push_back(std::move(cols));
  }
  return f;
}

// projection onto the second blocks: R/x (x) G -> F^{R/x}
inline ChainMap liftProjection(const EisenbudLift& L, const FreeComplex& Gbar) {
  ChainMap f;
  f.F = Gbar;
  f.G = L.Fbar;
  const PolyRing& S = L.R->S;
  for (int m = Gbar.lo; m <= Gbar.hi; ++m) {
    std::vector<PolyVector> cols;
    int firstBlock = L.Fbar.rank(m - 1);
    int target = std::max(L.Fbar.rank(m), 1);
    for (int a = 0; a < Gbar.rank(m); ++a) {
      if (a < firstBlock)
        cols.push_back(pv::zero(target));
      else
        cols.push_back(pv::unitVector(S, target, a - firstBlock));
    }
    f.mats.push_back(std::move(cols));
  }
  return f;
}

// id_F (x) phi: F (x) phi.F -> F (x) phi.G, block layout as tensorComplexes.
inline ChainMap tensorIdWithMap(const FreeComplex& F, const ChainMap& phi,
                                const FreeComplex& srcT, const FreeComplex& dstT) {
  const PolyRing& S = F.R->S;
  ChainMap out;
  out.F = srcT;
  out.G = dstT;
  const FreeComplex& Gsrc = phi.F;
  const FreeComplex& Gdst = phi.G;
  for (int n = srcT.lo; n <= srcT.hi; ++n) {
    std::vector<PolyVector> cols;
    int dstRank = std::max(dstT.rank(n), 1);
    for (int i = F.hi; i >= F.lo; --i) {
      int j = n - i;
      if (j < Gsrc.lo || j > Gsrc.hi) continue;
      // offset of block (i, j) inside dstT_n
      for (int a = 0; a < F.rank(i); ++a)
        for (int b = 0; b < Gsrc.rank(j); ++b) {
          PolyVector col{dstRank, {}};
          if (j >= Gdst.lo && j <= Gdst.hi && !phi.at(j).empty()) {
            // compute offset of block (i, j) in dstT_n
            int off = 0;
            for (int i2 = F.hi; i2 > i; --i2) {
              int j2 = n - i2;
              if (j2 >= Gdst.lo && j2 <= Gdst.hi) off += F.rank(i2) * Gdst.rank(j2);
            }
            const PolyVector& pc = phi.at(j)[b];
            for (int r = 0; r < Gdst.rank(j); ++r) {
              PolyVector e = pv::component(pc, r);
              if (!e.isZero())
                col = pv::add(S, col, pv::shiftComp(e, off + a * Gdst.rank(j) + r, dstRank));
            }
          }
          cols.push_back(rg::nfVec(*F.R, col));
        }
    }
    out.mats.push_back(std::move(cols));
  }
  return out;
}

struct SesResult {
  EisenbudLift lift;
  FreeComplex left, middle, right;  // tensored with F_M over R/x
  ChainMap incl, proj;              // left -> middle -> right
  int window = 0;
  int validity = 0;
};

// The short exact sequence of complexes realizing
// 0 -> (M (x)^L_{R/x} N)[1] -> M (x)^L_R N -> M (x)^L_{R/x} N -> 0.
inline SesResult sesDerivedTensor(const RingPtr& R, const PolyVector& x, const RingPtr& Rbar,
                                  const PresentedModule& M, const PresentedModule& N, int w) {
  SesResult out;
  out.window = w;
  out.validity = w - 1;
  ResolutionWindow FN = rg::minFreeResolution(N, w);
  FreeComplex Fbar = resolutionComplex(FN);
  out.lift = liftResolutionEisenbud(Fbar, R, x, Rbar);
  FreeComplex Gbar = reduceComplex(out.lift.G, Rbar);
  FreeComplex sub = liftSubcomplex(out.lift);
  ChainMap incl0 = liftInclusion(out.lift, Gbar, sub);
  ChainMap proj0 = liftProjection(out.lift, Gbar);
  checkChainMap(incl0);
  checkChainMap(proj0);

  FreeComplex FM = resolutionComplex(rg::minFreeResolution(M, w));
  out.left = tensorComplexes(FM, sub);
  out.middle = tensorComplexes(FM, Gbar);
  out.right = tensorComplexes(FM, out.lift.Fbar);
  out.incl = tensorIdWithMap(FM, incl0, out.left, out.middle);
  out.proj = tensorIdWithMap(FM, proj0, out.middle, out.right);
  checkChainMap(out.incl);
  checkChainMap(out.proj);
  return out;
}

}  // namespace cx

}  // namespace depthlab
