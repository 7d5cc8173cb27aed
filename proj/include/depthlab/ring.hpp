// Presented graded rings R = S/I (graded-local model: positively graded
// connected k-algebras, with maximal ideal the positive-degree part) and
// finitely presented graded R-modules, with minimal free resolutions,
// syzygies, depth/dimension measurement, transpose, ring-dual, and regular
// sequences.
#pragma once

#include <climits>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "depthlab/groebner.hpp"
#include "depthlab/parse.hpp"

namespace depthlab {

// depth of the zero module / codepth sentinels
inline constexpr int kDepthInf = INT_MAX / 4;
inline constexpr int kDepthNegInf = -kDepthInf;

struct PresentedRing;
using RingPtr = std::shared_ptr<const PresentedRing>;

struct PresentedRing {
  PolyRing S;                     // ambient polynomial ring
  std::vector<PolyVector> ideal;  // defining ideal generators
  GroebnerBasis gb;               // reduced Groebner basis of the ideal
  int dim = 0;
  int depth = 0;
  bool isCM = false;
  bool isArtinian = false;
  bool isZeroRing = false;
};

// A graded module coker(rels: (+) R(-colDeg) -> (+) R(-shifts_i)); rels are
// columns in S^gens with entries reduced mod I. The ideal relations I*e_i are
// implicit (the cokernel is taken over R).
struct PresentedModule {
  RingPtr R;
  int gens = 0;
  std::vector<int> shifts;
  std::vector<PolyVector> rels;
  bool minimal = false;
};

struct ModuleMeasure {
  int depth = 0;
  int dim = 0;
  int codepth = 0;
  bool isCM = false;
  bool isMCM = false;
  bool isZero = false;
};

struct ResolutionWindow {
  RingPtr R;
  bool overAmbient = false;  // resolution over S instead of R
  int width = 0;
  std::vector<int> betti;                   // beta_0..beta_width
  std::vector<std::vector<int>> shifts;     // grading shifts per homological degree
  std::vector<std::vector<PolyVector>> diff;  // diff[i] = columns of d_{i+1}
  bool minimal = true;
  bool finite = false;  // some beta_i = 0 inside the window: pd detected
  int pd = -1;          // valid when finite
};

namespace rg {

// --- ring construction ----------------------------------------------------

inline PolyVector nfPoly(const PresentedRing& R, const PolyVector& f) {
  return gb::normalForm(R.S, f, R.gb.gens);
}

// coordinatewise reduction of a module vector mod I
inline PolyVector nfVec(const PresentedRing& R, const PolyVector& v) {
  if (R.gb.gens.empty()) return v;
  PolyVector out{v.ambient, {}};
  for (int c = 0; c < v.ambient; ++c) {
    PolyVector r = gb::normalForm(R.S, pv::component(v, c), R.gb.gens);
    out = pv::add(R.S, out, pv::shiftComp(r, c, v.ambient));
  }
  return out;
}

int depthOfAmbientModule(const PolyRing& S, const std::vector<PolyVector>& cols, int rank,
                         const std::vector<int>& shifts);  // defined below

inline RingPtr makeRing(const Field& k, std::vector<std::string> vars, std::vector<int> degs,
                        const std::vector<std::string>& idealStrs,
                        BaseOrder base = BaseOrder::GrevLex) {
  auto R = std::make_shared<PresentedRing>();
  R->S = PolyRing(k, std::move(vars), std::move(degs), base);
  for (const auto& s : idealStrs) {
    PolyVector f = parse::poly(R->S, s);
    if (!pv::isHomogeneous(R->S, f, {0}))
      throw std::invalid_argument("ideal generator not homogeneous: " + s);
    if (!f.isZero()) R->ideal.push_back(std::move(f));
  }
  R->gb = gb::buchberger(R->S, R->ideal);
  R->dim = gb::krullDim(R->S, R->gb);
  R->isZeroRing = R->dim < 0;
  if (R->isZeroRing) {
    R->depth = kDepthInf;
    R->isCM = false;
    R->isArtinian = false;
    return R;
  }
  R->depth = depthOfAmbientModule(R->S, R->gb.gens, 1, {0});
  R->isCM = R->depth == R->dim;
  R->isArtinian = R->dim == 0;
  return R;
}

inline RingPtr regularRing(const Field& k, std::vector<std::string> vars,
                           std::vector<int> degs = {}) {
  return makeRing(k, std::move(vars), std::move(degs), {});
}

// --- module construction --------------------------------------------------

inline PresentedModule makeModule(RingPtr R, std::vector<int> shifts,
                                  std::vector<PolyVector> relCols) {
  PresentedModule M;
  M.R = std::move(R);
  M.gens = int(shifts.size());
  M.shifts = std::move(shifts);
  for (auto& c : relCols) {
    c.ambient = std::max(c.ambient, std::max(M.gens, 1));
    PolyVector r = nfVec(*M.R, c);
    if (!pv::isHomogeneous(M.R->S, r, M.shifts))
      throw std::invalid_argument("presentation column not homogeneous");
    if (!r.isZero()) M.rels.push_back(std::move(r));
  }
  return M;
}

inline PresentedModule freeModule(RingPtr R, std::vector<int> shifts) {
  PresentedModule M;
  M.R = std::move(R);
  M.gens = int(shifts.size());
  M.shifts = std::move(shifts);
  M.minimal = true;
  return M;
}

inline PresentedModule ringAsModule(RingPtr R) { return freeModule(std::move(R), {0}); }

inline PresentedModule residueField(RingPtr R) {
  std::vector<PolyVector> rels;
  for (int i = 0; i < R->S.nvars(); ++i) rels.push_back(nfPoly(*R, pv::variable(R->S, i)));
  return makeModule(std::move(R), {0}, std::move(rels));
}

inline PresentedModule cyclicModule(RingPtr R, const std::vector<std::string>& gens) {
  auto rels = parse::polys(R->S, gens);
  return makeModule(std::move(R), {0}, std::move(rels));
}

inline bool isZeroModule(const PresentedModule& M) {
  if (M.gens == 0) return true;
  if (M.R->isZeroRing) return true;
  return gb::isZeroModule(M.R->S, M.rels, M.gens, M.R->gb.gens);
}

// exact k-dimensions of the graded pieces of M in degrees 0..maxDeg
inline std::vector<long> moduleHilbert(const PresentedModule& M, int maxDeg) {
  if (M.gens == 0) return std::vector<long>(maxDeg + 1, 0);
  const PolyRing& S = M.R->S;
  auto cols = gb::withIdeal(S, M.rels, M.gens, M.R->gb.gens);
  GroebnerBasis g = gb::buchberger(S, std::move(cols));
  return gb::hilbertFunction(S, g, M.gens, M.shifts, maxDeg);
}

// M(-s): add s to every generator shift
inline PresentedModule twist(PresentedModule M, int s) {
  for (auto& sh : M.shifts) sh += s;
  return M;
}

inline PresentedModule directSum(const PresentedModule& A, const PresentedModule& B) {
  PresentedModule C;
  C.R = A.R;
  C.gens = A.gens + B.gens;
  C.shifts = A.shifts;
  C.shifts.insert(C.shifts.end(), B.shifts.begin(), B.shifts.end());
  for (const auto& r : A.rels) C.rels.push_back(pv::shiftComp(r, 0, C.gens));
  for (const auto& r : B.rels) C.rels.push_back(pv::shiftComp(r, A.gens, C.gens));
  return C;
}

// --- minimal generators and minimal presentations -------------------------

// Prune a homogeneous generating set of a submodule of R^rank down to a
// minimal one (graded Nakayama: process by ascending degree, drop anything in
// the span of what is kept).
inline std::vector<PolyVector> minimalGenerators(const PolyRing& S,
                                                 const std::vector<PolyVector>& idealBasis,
                                                 std::vector<PolyVector> cols, int rank,
                                                 const std::vector<int>& shifts) {
  std::vector<PolyVector> in;
  for (auto& c : cols)
    if (!c.isZero()) in.push_back(std::move(c));
  std::sort(in.begin(), in.end(), [&](const PolyVector& a, const PolyVector& b) {
    int da = pv::degree(S, a, shifts), db = pv::degree(S, b, shifts);
    if (da != db) return da < db;
    return pv::cmp(S, a, b) > 0;
  });
  std::vector<PolyVector> kept;
  GroebnerBasis span = gb::buchberger(S, gb::withIdeal(S, {}, rank, idealBasis));
  for (auto& c : in) {
    if (gb::normalForm(S, c, span.gens).isZero()) continue;
    kept.push_back(c);
    auto gens = gb::withIdeal(S, kept, rank, idealBasis);
    span = gb::buchberger(S, std::move(gens));
  }
  return kept;
}

// Split off unit entries of a homogeneous presentation: each degree-0 entry
// removes one generator and one relation without changing the module.
inline void minimalizePresentation(const PolyRing& S, int& gens, std::vector<int>& shifts,
                                   std::vector<PolyVector>& rels) {
  for (;;) {
    int ui = -1, uj = -1;
    FieldElem uc;
    for (size_t j = 0; j < rels.size() && ui < 0; ++j)
      for (int i = 0; i < gens; ++i) {
        PolyVector e = pv::component(rels[j], i);
        if (e.isZero()) continue;
        if (e.terms.size() == 1 && e.lead().first.totalDeg() == 0) {
          ui = i;
          uj = int(j);
          uc = e.lead().second;
          break;
        }
      }
    if (ui < 0) return;
    // normalize the pivot column so the unit entry is 1
    PolyVector piv = pv::scale(rels[uj], fe::inv(uc));
    // clear row ui from every other column
    for (size_t j = 0; j < rels.size(); ++j) {
      if (int(j) == uj) continue;
      PolyVector e = pv::component(rels[j], ui);
      if (!e.isZero()) rels[j] = pv::sub(S, rels[j], pv::mulRing(S, e, piv));
    }
    // delete generator ui and column uj
    std::vector<PolyVector> next;
    for (size_t j = 0; j < rels.size(); ++j) {
      if (int(j) == uj) continue;
      PolyVector v{gens - 1, {}};
      for (const auto& t : rels[j].terms) {
        if (t.first.comp == ui) continue;
        Term u = t;
        if (u.first.comp > ui) --u.first.comp;
        v.terms.push_back(std::move(u));
      }
      pv::normalize(S, v);
      if (!v.isZero()) next.push_back(std::move(v));
    }
    rels = std::move(next);
    shifts.erase(shifts.begin() + ui);
    --gens;
  }
}

inline PresentedModule minimalize(const PresentedModule& Min) {
  if (Min.minimal) return Min;
  PresentedModule M = Min;
  for (auto& c : M.rels) c = nfVec(*M.R, c);
  minimalizePresentation(M.R->S, M.gens, M.shifts, M.rels);
  for (auto& c : M.rels) c = nfVec(*M.R, c);
  M.rels = minimalGenerators(M.R->S, M.R->gb.gens, M.rels, std::max(M.gens, 1), M.shifts);
  M.minimal = true;
  return M;
}

// --- minimal free resolutions --------------------------------------------

// Syzygies of the given columns over R = S/I (generators, coordinates reduced
// mod I).
inline std::vector<PolyVector> syzygiesOverRing(const PolyRing& S,
                                                const std::vector<PolyVector>& idealBasis,
                                                const std::vector<PolyVector>& cols, int rank) {
  return gb::kernelOverQuotient(S, cols, rank, idealBasis);
}

// Minimal free resolution of coker(cols) as a module over S (idealBasis
// empty) or over R = S/I. Stops early when a zero syzygy module is reached.
inline ResolutionWindow resolveCols(RingPtr R, bool overAmbient, int gens,
                                    std::vector<int> shifts, std::vector<PolyVector> cols,
                                    int width) {
  const PolyRing& S = R->S;
  const std::vector<PolyVector> noIdeal;
  const std::vector<PolyVector>& ideal = overAmbient ? noIdeal : R->gb.gens;

  ResolutionWindow W;
  W.R = std::move(R);
  W.overAmbient = overAmbient;
  W.width = width;

  minimalizePresentation(S, gens, shifts, cols);
  cols = minimalGenerators(S, ideal, cols, std::max(gens, 1), shifts);
  W.betti.push_back(gens);
  W.shifts.push_back(shifts);
  if (gens == 0) {
    W.finite = true;
    W.pd = -1;  // zero module
    for (int i = 1; i <= width; ++i) {
      W.betti.push_back(0);
      W.shifts.push_back({});
      W.diff.push_back({});
    }
    return W;
  }
  for (int i = 1; i <= width; ++i) {
    int prevRank = W.betti.back();
    const std::vector<int>& prevShifts = W.shifts.back();
    W.diff.push_back(cols);
    int b = int(cols.size());
    W.betti.push_back(b);
    std::vector<int> sh(b);
    for (int j = 0; j < b; ++j) sh[j] = pv::degree(S, cols[j], prevShifts);
    W.shifts.push_back(sh);
    if (b == 0) {
      if (!W.finite) {
        W.finite = true;
        W.pd = i - 1;
      }
      cols.clear();
      continue;
    }
    if (i == width) break;
    auto syz = syzygiesOverRing(S, ideal, cols, prevRank);
    cols = minimalGenerators(S, ideal, syz, b, sh);
  }
  return W;
}

inline ResolutionWindow minFreeResolution(const PresentedModule& Min, int width) {
  PresentedModule M = minimalize(Min);
  return resolveCols(M.R, false, M.gens, M.shifts, M.rels, width);
}

// Resolution of the same cokernel regarded as a module over the ambient
// polynomial ring S (the ideal relations become explicit columns).
inline ResolutionWindow ambientResolution(const PresentedModule& Min, int width) {
  PresentedModule M = Min;
  auto cols = gb::withIdeal(M.R->S, M.rels, std::max(M.gens, 1), M.R->gb.gens);
  return resolveCols(M.R, true, M.gens, M.shifts, std::move(cols), width);
}

// depth over S of coker(cols) via Auslander-Buchsbaum: n - pd_S.
inline int depthOfAmbientModule(const PolyRing& S, const std::vector<PolyVector>& cols, int rank,
                                const std::vector<int>& shifts) {
  int n = S.nvars();
  // Hilbert syzygy theorem: pd_S <= n, so a window of n + 1 always terminates.
  auto R0 = std::make_shared<PresentedRing>();
  R0->S = S;
  R0->dim = n;
  R0->depth = n;
  R0->isCM = true;
  ResolutionWindow W = resolveCols(R0, true, rank, shifts, cols, n + 1);
  if (W.pd < 0 && W.betti[0] == 0) return kDepthInf;  // zero module
  if (!W.finite) throw std::logic_error("ambient resolution did not terminate within n+1 steps");
  return n - W.pd;
}

// --- measurement ----------------------------------------------------------

inline std::vector<PolyVector> annihilator(const PresentedModule& M) {
  const PolyRing& S = M.R->S;
  if (M.gens == 0) return {pv::constant(S, fe::one(S.field))};
  auto spanGens = gb::withIdeal(S, M.rels, M.gens, M.R->gb.gens);
  std::vector<PolyVector> ann;
  for (int i = 0; i < M.gens; ++i) {
    auto ci = gb::colon(S, pv::unitVector(S, M.gens, i), spanGens, M.gens);
    ann = i == 0 ? ci : gb::idealIntersect(S, ann, ci);
  }
  return ann;
}

inline ModuleMeasure measure(const PresentedModule& M) {
  ModuleMeasure m;
  if (isZeroModule(M)) {
    m.isZero = true;
    m.depth = kDepthInf;
    m.dim = -1;
    m.codepth = kDepthNegInf;
    m.isCM = false;
    m.isMCM = false;
    return m;
  }
  const PolyRing& S = M.R->S;
  auto cols = gb::withIdeal(S, M.rels, std::max(M.gens, 1), M.R->gb.gens);
  m.depth = depthOfAmbientModule(S, cols, std::max(M.gens, 1), M.shifts);
  auto ann = annihilator(M);
  std::vector<PolyVector> big = M.R->gb.gens;
  for (auto& a : ann) big.push_back(a);
  m.dim = gb::krullDim(S, gb::buchberger(S, big));
  m.codepth = M.R->depth - m.depth;
  m.isCM = m.depth == m.dim;
  m.isMCM = m.depth == M.R->dim;
  return m;
}

// --- syzygy, transpose, ring-dual ----------------------------------------

inline PresentedModule syzygyModule(const PresentedModule& M, int i) {
  if (i == 0) return minimalize(M);
  ResolutionWindow W = minFreeResolution(M, i + 1);
  if (i >= int(W.betti.size()) - 1 || W.betti[i] == 0) return freeModule(M.R, {});
  PresentedModule O;
  O.R = M.R;
  O.gens = W.betti[i];
  O.shifts = W.shifts[i];
  O.rels = W.diff[i];  // d_{i+1} presents Omega^i on the generators of F_i
  O.minimal = true;
  return O;
}

// Auslander transpose: coker of the transposed minimal presentation matrix.
inline PresentedModule transpose(const PresentedModule& Min) {
  PresentedModule M = minimalize(Min);
  const PolyRing& S = M.R->S;
  int c = int(M.rels.size());
  std::vector<int> tshifts(c);
  for (int j = 0; j < c; ++j) tshifts[j] = -pv::degree(S, M.rels[j], M.shifts);
  std::vector<PolyVector> tcols;
  for (int i = 0; i < M.gens; ++i) {
    PolyVector col{std::max(c, 1), {}};
    for (int j = 0; j < c; ++j)
      col = pv::add(S, col, pv::shiftComp(pv::component(M.rels[j], i), j, std::max(c, 1)));
    if (!col.isZero()) tcols.push_back(std::move(col));
  }
  return minimalize(makeModule(M.R, std::move(tshifts), std::move(tcols)));
}

// M^* = Hom_R(M, R), presented as the kernel of A^T: R^g -> R^c with its own
// relation module.
inline PresentedModule dualRing(const PresentedModule& Min) {
  PresentedModule M = minimalize(Min);
  const PolyRing& S = M.R->S;
  if (M.gens == 0) return freeModule(M.R, {});
  std::vector<int> negShifts(M.gens);
  for (int i = 0; i < M.gens; ++i) negShifts[i] = -M.shifts[i];
  std::vector<PolyVector> ker;
  if (M.rels.empty()) {
    for (int i = 0; i < M.gens; ++i) ker.push_back(pv::unitVector(S, M.gens, i));
  } else {
    int c = int(M.rels.size());
    std::vector<PolyVector> tcols;  // columns of A^T: R^g -> R^c
    for (int i = 0; i < M.gens; ++i) {
      PolyVector col{c, {}};
      for (int j = 0; j < c; ++j)
        col = pv::add(S, col, pv::shiftComp(pv::component(M.rels[j], i), j, c));
      tcols.push_back(std::move(col));
    }
    ker = gb::kernelOverQuotient(S, tcols, c, M.R->gb.gens);
  }
  ker = minimalGenerators(S, M.R->gb.gens, ker, M.gens, negShifts);
  std::vector<int> dshifts;
  for (const auto& k : ker) dshifts.push_back(pv::degree(S, k, negShifts));
  auto rels = syzygiesOverRing(S, M.R->gb.gens, ker, M.gens);
  PresentedModule D;
  D.R = M.R;
  D.gens = int(ker.size());
  D.shifts = std::move(dshifts);
  D.rels = std::move(rels);
  return minimalize(D);
}

// --- regular sequences ----------------------------------------------------

struct RegularSequenceError : std::runtime_error {
  RegularSequenceError()
      : std::runtime_error(
            "no regular element found; raise the field size or allow higher-degree forms") {}
};

// Is f a nonzerodivisor on R/(prev)? Certified by ((prev)+I : f) = (prev)+I.
inline bool isRegularOn(const PresentedRing& R, const std::vector<PolyVector>& prev,
                        const PolyVector& f) {
  const PolyRing& S = R.S;
  std::vector<PolyVector> mod = R.gb.gens;
  for (const auto& p : prev) mod.push_back(p);
  GroebnerBasis modGB = gb::buchberger(S, mod);
  if (gb::containsUnit(modGB)) return false;  // zero ring: everything is a zerodivisor
  if (gb::normalForm(S, f, modGB.gens).isZero()) return false;
  auto quot = gb::colon(S, f, modGB.gens, 1);
  for (const auto& q : quot)
    if (!gb::normalForm(S, q, modGB.gens).isZero()) return false;
  return true;
}

// A homogeneous sequence of the requested length, each element regular modulo
// its predecessors; random degree-1 combinations first, then higher degrees.
inline std::vector<PolyVector> regularSequence(const RingPtr& R, int length,
                                               unsigned long seed = 0) {
  const PolyRing& S = R->S;
  std::vector<PolyVector> seq;
  if (length == 0) return seq;
  if (length > R->depth) throw std::invalid_argument("requested length exceeds depth of ring");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-3, 3);
  while (int(seq.size()) < length) {
    bool found = false;
    for (int deg = 1; deg <= 8 && !found; ++deg) {
      auto monos = gb::enumerateMonomials(S, deg);
      if (monos.empty()) continue;
      for (int attempt = 0; attempt < 200 && !found; ++attempt) {
        PolyVector f = pv::zero(1);
        for (const auto& e : monos) {
          long c = attempt == 0 && monos.size() == 1 ? 1 : coeff(rng);
          if (c != 0)
            f = pv::add(S, f, pv::monomial(S, e, 0, fe::fromInt(S.field, c)));
        }
        if (f.isZero()) continue;
        if (isRegularOn(*R, seq, f)) {
          seq.push_back(pv::monic(f));
          found = true;
        }
      }
    }
    if (!found) throw RegularSequenceError();
  }
  return seq;
}

// --- quotient by a regular sequence ---------------------------------------

// M / (xs) M as a module over the same ring.
inline PresentedModule quotientBySequence(const PresentedModule& M,
                                          const std::vector<PolyVector>& xs) {
  PresentedModule Q = M;
  int r = std::max(M.gens, 1);
  for (const auto& x : xs)
    for (int i = 0; i < M.gens; ++i)
      Q.rels.push_back(nfVec(*M.R, pv::mulRing(M.R->S, x, pv::unitVector(M.R->S, r, i))));
  Q.minimal = false;
  return Q;
}

// The quotient ring R/(xs) as a PresentedRing over the same ambient S.
inline RingPtr quotientRing(const RingPtr& R, const std::vector<PolyVector>& xs) {
  auto Q = std::make_shared<PresentedRing>();
  Q->S = R->S;
  Q->ideal = R->ideal;
  for (const auto& x : xs) Q->ideal.push_back(x);
  Q->gb = gb::buchberger(Q->S, Q->ideal);
  Q->dim = gb::krullDim(Q->S, Q->gb);
  Q->isZeroRing = Q->dim < 0;
  if (Q->isZeroRing) {
    Q->depth = kDepthInf;
    return Q;
  }
  Q->depth = depthOfAmbientModule(Q->S, Q->gb.gens, 1, {0});
  Q->isCM = Q->depth == Q->dim;
  Q->isArtinian = Q->dim == 0;
  return Q;
}

}  // namespace rg

}  // namespace depthlab
