// Homology with explicit cycle generators, maps induced on homology by chain
// maps, the connecting map of a degreewise-split short exact sequence of
// complexes, and exactness checks for the resulting long exact sequence.
#pragma once

#include "depthlab/eisenbud.hpp"

namespace depthlab {

namespace cx {

// H_i(C) presented on an explicit cycle generating set, with the graph basis
// of [Z | B | I e] retained so that arbitrary cycles can be expressed in the
// chosen generators.
struct HomologyData {
  RingPtr R;
  int ambient = 0;             // rank of C_i
  std::vector<int> shifts;     // ambient grading shifts
  std::vector<PolyVector> Z;   // cycle generators (vectors in S^ambient)
  std::vector<PolyVector> B;   // boundaries + ideal columns span the denominator
  PresentedModule H;           // presented on Z (not minimalized)
  gb::GraphGB graph;           // graph basis of [Z | B | I e]
};

inline HomologyData homologyData(const FreeComplex& C, int i) {
  const RingPtr& R = C.R;
  const PolyRing& S = R->S;
  HomologyData hd;
  hd.R = R;
  hd.ambient = C.rank(i);
  hd.shifts = C.shiftsAt(i);
  hd.H = rg::freeModule(R, {});
  if (hd.ambient == 0) return hd;
  std::vector<PolyVector> Z;
  if (i == C.lo || C.rank(i - 1) == 0) {
    for (int a = 0; a < hd.ambient; ++a) Z.push_back(pv::unitVector(S, hd.ambient, a));
  } else {
    Z = rg::preimageGens(S, R->gb.gens, C.diff(i), hd.ambient, C.rank(i - 1), {});
  }
  for (const auto& z : Z) {
    PolyVector v = rg::nfVec(*R, z);
    if (!v.isZero()) hd.Z.push_back(std::move(v));
  }
  if (hd.Z.empty()) return hd;
  for (const auto& c : C.diff(i + 1)) hd.B.push_back(c);

  int z = int(hd.Z.size());
  std::vector<PolyVector> cols = hd.Z;
  for (const auto& b : hd.B) cols.push_back(b);
  cols = gb::withIdeal(S, std::move(cols), hd.ambient, R->gb.gens);
  hd.graph = gb::graphBasis(S, cols, hd.ambient);
  auto syz = gb::syzygiesFromGraph(hd.graph);
  PresentedModule H;
  H.R = R;
  H.gens = z;
  for (int k = 0; k < z; ++k) H.shifts.push_back(pv::degree(S, hd.Z[k], hd.shifts));
  for (const auto& s : syz) {
    PolyVector head = pv::sliceComp(S, s, 0, z);
    head = rg::nfVec(*R, head);
    if (!head.isZero()) H.rels.push_back(std::move(head));
  }
  hd.H = std::move(H);
  return hd;
}

// coordinates of a cycle v in the chosen homology generators (throws when v
// does not lie in span(Z) + span(B))
inline PolyVector expressCycle(const HomologyData& hd, const PolyVector& v) {
  int z = int(hd.Z.size());
  PolyVector out{std::max(z, 1), {}};
  PolyVector r = rg::nfVec(*hd.R, v);
  if (r.isZero()) return out;
  if (z == 0) throw std::logic_error("cycle expression failed: homology has no generators");
  auto coeffs = gb::expressFromGraph(hd.graph, r);
  if (!coeffs) throw std::logic_error("cycle expression failed: vector outside subquotient");
  const PolyRing& S = hd.R->S;
  for (int k = 0; k < z; ++k)
    if (!(*coeffs)[k].isZero())
      out = pv::add(S, out, pv::shiftComp((*coeffs)[k], k, std::max(z, 1)));
  return rg::nfVec(*hd.R, out);
}

// A map of presented modules recorded on generators: cols[a] is the image of
// the a-th generator of src, as a vector in S^{dst.gens}.
struct ModuleMapData {
  int srcGens = 0, dstGens = 0;
  std::vector<PolyVector> cols;
};

// map induced on homology by a chain map, in homological degree i
inline ModuleMapData inducedOnHomology(const ChainMap& f, const HomologyData& src,
                                       const HomologyData& dst, int i) {
  const PolyRing& S = f.F.R->S;
  ModuleMapData m;
  m.srcGens = int(src.Z.size());
  m.dstGens = int(dst.Z.size());
  for (const auto& z : src.Z) {
    PolyVector img = applyCols(S, f.at(i), z, dst.ambient);
    m.cols.push_back(expressCycle(dst, img));
  }
  return m;
}

// exactness of A --f--> B --g--> C at B, as presented modules over the ring
inline bool exactAt(const RingPtr& R, const ModuleMapData& f, const PresentedModule& B,
                    const ModuleMapData& g, const PresentedModule& C) {
  const PolyRing& S = R->S;
  int p = B.gens, q = std::max(C.gens, 1);
  // g o f = 0 in C
  std::vector<PolyVector> relC = gb::withIdeal(S, C.rels, q, R->gb.gens);
  GroebnerBasis gc = gb::buchberger(S, relC);
  for (const auto& a : f.cols) {
    PolyVector v = applyCols(S, g.cols, a, C.gens);
    if (!gb::normalForm(S, v, gc.gens).isZero()) return false;
  }
  // ker(g) subset im(f) + rels(B)
  std::vector<PolyVector> K =
      rg::preimageGens(S, R->gb.gens, g.cols, p, q, C.rels);
  std::vector<PolyVector> span = f.cols;
  for (const auto& r : B.rels) span.push_back(r);
  span = gb::withIdeal(S, std::move(span), std::max(p, 1), R->gb.gens);
  GroebnerBasis gs = gb::buchberger(S, span);
  for (const auto& k : K)
    if (!gb::normalForm(S, k, gs.gens).isZero()) return false;
  return true;
}

// --- the long exact sequence of a degreewise-split SES of complexes --------

// Verify the long exact homology sequence of the sequence left -> middle ->
// right (degreewise split via unit-column inclusion/projection), for all
// homological degrees <= maxDeg. Returns true when every node is exact.
inline bool lesExact(const SesResult& ses, int maxDeg) {
  const RingPtr& R = ses.middle.R;
  const PolyRing& S = R->S;
  int lo = std::min({ses.left.lo, ses.middle.lo, ses.right.lo});
  int hi = std::min(maxDeg, std::max({ses.left.hi, ses.middle.hi, ses.right.hi}));

  // section of proj and retraction onto incl, per degree, from unit columns
  auto sectionOf = [&](int i) {
    std::vector<int> sec(std::max(ses.right.rank(i), 0), -1);
    const auto& cols = ses.proj.at(i);
    for (int a = 0; a < int(cols.size()); ++a)
      for (int b = 0; b < ses.right.rank(i); ++b)
        if (pv::eq(cols[a], pv::unitVector(S, std::max(ses.right.rank(i), 1), b)) &&
            sec[b] < 0)
          sec[b] = a;
    return sec;
  };
  auto inclPosOf = [&](int i) {
    std::vector<int> pos(std::max(ses.left.rank(i), 0), -1);
    const auto& cols = ses.incl.at(i);
    for (int b = 0; b < int(cols.size()); ++b)
      for (const auto& t : cols[b].terms) pos[b] = t.first.comp;
    return pos;
  };

  std::vector<HomologyData> HL(hi - lo + 2), HM(hi - lo + 2), HR(hi - lo + 2);
  for (int i = lo; i <= hi + 1; ++i) {
    int top = std::max({ses.left.hi, ses.middle.hi, ses.right.hi});
    if (i > top) break;
    HL[i - lo] = homologyData(ses.left, i);
    HM[i - lo] = homologyData(ses.middle, i);
    HR[i - lo] = homologyData(ses.right, i);
  }
  auto hl = [&](int i) -> HomologyData& { return HL[i - lo]; };
  auto hm = [&](int i) -> HomologyData& { return HM[i - lo]; };
  auto hr = [&](int i) -> HomologyData& { return HR[i - lo]; };

  // induced maps f_i: H_i(L) -> H_i(M), g_i: H_i(M) -> H_i(R), and the
  // connecting map delta_i: H_i(R) -> H_{i-1}(L)
  auto connecting = [&](int i) {
    ModuleMapData d;
    d.srcGens = int(hr(i).Z.size());
    d.dstGens = (i - 1 >= lo) ? int(hl(i - 1).Z.size()) : 0;
    std::vector<int> sec = sectionOf(i);
    std::vector<int> pos = inclPosOf(i - 1);
    int midPrev = std::max(ses.middle.rank(i - 1), 1);
    for (const auto& z : hr(i).Z) {
      // lift z along the splitting, push down, pull back along the inclusion
      PolyVector u{std::max(ses.middle.rank(i), 1), {}};
      for (int b = 0; b < ses.right.rank(i); ++b) {
        PolyVector e = pv::component(z, b);
        if (e.isZero()) continue;
        if (sec[b] < 0) throw std::logic_error("projection has no section column");
        u = pv::add(S, u, pv::shiftComp(e, sec[b], std::max(ses.middle.rank(i), 1)));
      }
      PolyVector w{midPrev, {}};
      if (i > ses.middle.lo && i <= ses.middle.hi)
        w = applyCols(S, ses.middle.diff(i), u, ses.middle.rank(i - 1));
      // w lies in the image of the inclusion: read off preimage coordinates
      PolyVector v{std::max(ses.left.rank(i - 1), 1), {}};
      PolyVector resid = rg::nfVec(*R, w);
      for (int b = 0; b < ses.left.rank(i - 1); ++b) {
        if (pos[b] < 0) continue;
        PolyVector e = pv::component(resid, pos[b]);
        if (e.isZero()) continue;
        v = pv::add(S, v, pv::shiftComp(e, b, std::max(ses.left.rank(i - 1), 1)));
        resid = pv::sub(S, resid, pv::shiftComp(e, pos[b], midPrev));
      }
      if (!rg::nfVec(*R, resid).isZero())
        throw std::logic_error("boundary of lifted cycle escapes the subcomplex");
      d.cols.push_back(i - 1 >= lo ? expressCycle(hl(i - 1), v)
                                   : pv::zero(1));
    }
    return d;
  };

  for (int i = lo; i <= hi; ++i) {
    ModuleMapData f = inducedOnHomology(ses.incl, hl(i), hm(i), i);
    ModuleMapData g = inducedOnHomology(ses.proj, hm(i), hr(i), i);
    ModuleMapData del = connecting(i);
    // exactness at H_i(M)
    if (!exactAt(R, f, hm(i).H, g, hr(i).H)) return false;
    // exactness at H_i(R): g_i then delta_i
    PresentedModule tgt = (i - 1 >= lo) ? hl(i - 1).H : rg::freeModule(R, {});
    if (!exactAt(R, g, hr(i).H, del, tgt)) return false;
    // exactness at H_{i-1}(L): delta_i then f_{i-1}
    if (i - 1 >= lo) {
      ModuleMapData fprev = inducedOnHomology(ses.incl, hl(i - 1), hm(i - 1), i - 1);
      if (!exactAt(R, del, hl(i - 1).H, fprev, hm(i - 1).H)) return false;
    }
  }
  return true;
}

// Present a module over R/J as a module over the base ring R (same generators,
// relations pulled back plus J times each generator).
inline PresentedModule restrictToBase(const PresentedModule& M, const RingPtr& R,
                                      const std::vector<PolyVector>& extra) {
  const PolyRing& S = R->S;
  std::vector<PolyVector> rels;
  for (const auto& r : M.rels) rels.push_back(r);
  int g = std::max(M.gens, 1);
  for (const auto& x : extra)
    for (int j = 0; j < M.gens; ++j)
      rels.push_back(pv::mulRing(S, x, pv::unitVector(S, g, j)));
  return rg::makeModule(R, M.shifts, std::move(rels));
}

}  // namespace cx

}  // namespace depthlab
