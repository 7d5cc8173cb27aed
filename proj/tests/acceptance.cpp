// Acceptance suite: end-to-end checks of the library's core guarantees on
// seeded instances. Each criterion prints a single PASS/FAIL line; the exit
// code is the number of failed criteria.
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "depthlab/cli.hpp"
#include "depthlab/homology_maps.hpp"
#include "depthlab/invariants.hpp"
#include "depthlab/matrix.hpp"

using namespace depthlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, double budgetSeconds, bool (*body)()) {
  auto t0 = Clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" [exception: ") + e.what() + "]";
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs > budgetSeconds) {
    ok = false;
    note += " [over time budget]";
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " (" << secs << " s) — "
       << what << note;
  std::cout << line.str() << std::endl;
  if (!ok) ++failures;
}

// ---------------------------------------------------------------------------
// shared helpers

RingPtr polyRing2() { return rg::makeRing(Field::Q(), {"x", "y"}, {1, 1}, {}); }
RingPtr polyRing3() { return rg::makeRing(Field::Q(), {"x", "y", "z"}, {1, 1, 1}, {}); }
RingPtr crossRing() { return rg::makeRing(Field::Q(), {"x", "y"}, {1, 1}, {"x*y"}); }
RingPtr crossRing3() { return rg::makeRing(Field::Q(), {"x", "y", "z"}, {1, 1, 1}, {"x*y"}); }

// random nonzero homogeneous polynomial of the given degree
PolyVector randomHomog(const PolyRing& S, int deg, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    auto monos = gb::enumerateMonomials(S, deg);
    PolyVector f = pv::zero(1);
    for (auto& e : monos) {
      long c = long(rng() % 5) - 2;
      if (c == 0) continue;
      f = pv::add(S, f, pv::monomial(S, e, 0, fe::fromInt(S.field, c)));
    }
    if (!f.isZero()) return f;
  }
  throw std::logic_error("failed to draw a nonzero homogeneous polynomial");
}

bool sameHilbert(const PresentedModule& A, const PresentedModule& B, int lift, int maxDeg) {
  return rg::moduleHilbert(rg::twist(A, lift), maxDeg) ==
         rg::moduleHilbert(rg::twist(B, lift), maxDeg);
}

// ---------------------------------------------------------------------------
// criterion 1: pd + depth = depth R for finite-pd modules over regular rings

bool c1AuslanderBuchsbaum() {
  std::mt19937_64 rng(101);
  std::vector<RingPtr> rings = {polyRing2(), polyRing3()};
  int checked = 0;
  for (int i = 0; i < 25; ++i) {
    const RingPtr& R = rings[i % 2];
    const PolyRing& S = R->S;
    int n = S.nvars();
    PresentedModule M;
    switch (i % 5) {
      case 0:
        M = rg::residueField(R);
        break;
      case 1:
        M = rg::makeModule(R, {0}, {randomHomog(S, 1 + int(rng() % 2), rng)});
        break;
      case 2:
        M = rg::makeModule(R, {0},
                           {randomHomog(S, 1, rng), randomHomog(S, 2, rng)});
        break;
      case 3:
        M = rg::freeModule(R, {0, -int(rng() % 3)});
        break;
      default:
        M = rg::syzygyModule(rg::makeModule(R, {0}, {randomHomog(S, 2, rng)}), 1);
        break;
    }
    if (rg::isZeroModule(M)) return false;
    auto F = rg::minFreeResolution(M, n + 1);
    if (!F.finite) return false;
    int pd = std::max(F.pd, 0);
    if (pd + rg::measure(M).depth != R->depth) return false;
    ++checked;
  }
  return checked == 25;
}

// ---------------------------------------------------------------------------
// criterion 2: depth lemma on degreewise-split SES of free complexes

bool c2DepthLemma() {
  std::mt19937_64 rng(202);
  struct RingElems {
    RingPtr R;
    std::vector<std::string> elems;
  };
  Field q = Field::Q();
  std::vector<RingElems> pool = {
      {cli::exampleRing("regular_2", q), {"x1", "x2", "x1 + x2", "x1 - x2"}},
      {cli::exampleRing("hypersurface_xy", q), {"x", "y", "x + y", "x - y"}},
      {cli::exampleRing("semigroup_345", q), {"x", "y", "z", "x^2"}},
  };
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const auto& [R, elems] = pool[i % 3];
    const PolyRing& S = R->S;
    // X = Koszul complex on one or two elements, sometimes twisted
    std::vector<PolyVector> xs = {parse::poly(S, elems[rng() % elems.size()])};
    if (rng() % 2 == 0) xs.push_back(parse::poly(S, elems[rng() % elems.size()]));
    auto X = cx::koszulComplex(R, xs);
    if (rng() % 3 == 0) X = cx::tensorComplexes(X, cx::freeTerm(R, {int(rng() % 3)}, 0));
    // cone of multiplication by f: degreewise-split SES X -> cone -> X[1]
    PolyVector f = rg::nfPoly(*R, parse::poly(S, elems[rng() % elems.size()]));
    cx::ChainMap phi = cx::identityMap(X);
    for (auto& cols : phi.mats)
      for (auto& c : cols) c = rg::nfVec(*R, pv::mulRing(S, f, c));
    auto C = cx::cone(phi);
    int dX = cx::depthComplex(X);
    int dY = cx::depthComplex(C);
    int dZ = dX - 1;  // X[1]
    if (dX == kDepthInf || dY == kDepthInf) return false;  // pool keeps homology nonzero
    if (!(dY >= std::min(dX, dZ))) return false;
    if (!(dX >= std::min(dY, dZ + 1))) return false;
    if (!(dZ >= std::min(dY, dX - 1))) return false;
    ++checked;
  }
  return checked == 50;
}

// ---------------------------------------------------------------------------
// criterion 3: tensoring with K(x) cuts complex depth by exactly one

bool c3KoszulCutdown() {
  std::mt19937_64 rng(303);
  struct RingElems {
    RingPtr R;
    std::vector<std::string> elems;
  };
  Field q = Field::Q();
  std::vector<RingElems> pool = {
      {cli::exampleRing("regular_2", q), {"x1", "x2", "x1 + x2"}},
      {cli::exampleRing("hypersurface_xy", q), {"x", "y", "x + y"}},
      {cli::exampleRing("semigroup_345", q), {"x", "y", "z"}},
  };
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    const auto& [R, elems] = pool[i % 3];
    const PolyRing& S = R->S;
    FreeComplex X;
    switch (i % 4) {
      case 0:
        X = cx::freeTerm(R, {0, -1}, int(rng() % 2));
        break;
      case 1:
        X = cx::koszulComplex(R, {parse::poly(S, elems[rng() % elems.size()])});
        break;
      case 2:
        X = cx::koszulComplex(R, {parse::poly(S, elems[0]), parse::poly(S, elems[1])});
        break;
      default:
        X = cx::resolutionComplex(
            rg::minFreeResolution(rg::cyclicModule(R, {elems[rng() % elems.size()]}), 2));
        break;
    }
    auto K = cx::koszulComplex(R, {parse::poly(S, elems[rng() % elems.size()])});
    int before = cx::depthComplex(X);
    if (before == kDepthInf) return false;
    if (cx::depthComplex(cx::tensorComplexes(X, K)) != before - 1) return false;
    ++checked;
  }
  return checked == 30;
}

// ---------------------------------------------------------------------------
// criterion 4: Artinian derived depth = -(top nonzero Tor index in the window)

bool c4ArtinianDerived() {
  std::mt19937_64 rng(404);
  std::vector<std::pair<PresentedModule, PresentedModule>> pairs;

  // dual numbers: the residue field and its twists/sums all have full tails
  auto Rd = cli::exampleRing("dual_numbers", Field::Q());
  auto kd = rg::residueField(Rd);
  std::vector<PresentedModule> pool = {kd, rg::twist(kd, 1), rg::twist(kd, 2),
                                       rg::directSum(kd, rg::twist(kd, 1))};
  for (int i = 0; i < 12; ++i)
    pairs.emplace_back(pool[rng() % pool.size()], pool[rng() % pool.size()]);

  // heavy Artinian examples over F_p(a)
  Field fpt = Field::Fpt(32003, "a");
  auto js = cli::exampleRing("js06", fpt);
  auto ia = cli::exampleRing("i_alpha", fpt);
  PresentedModule jv = rg::cyclicModule(js, {"v"}), jz = rg::cyclicModule(js, {"z"});
  PresentedModule i1 = rg::cyclicModule(ia, {"x1"}), i2 = rg::cyclicModule(ia, {"x2"});
  pairs.emplace_back(jv, jz);
  pairs.emplace_back(jz, jv);
  pairs.emplace_back(jv, jv);
  pairs.emplace_back(jz, jz);
  pairs.emplace_back(i1, i2);
  pairs.emplace_back(i2, i1);
  pairs.emplace_back(i1, i1);
  pairs.emplace_back(i2, i2);

  if (pairs.size() != 20) return false;
  for (const auto& [M, N] : pairs) {
    auto q = inv::qWindow(M, N, 8);
    if (q.tail_vanishes || q.max_nonzero != 8) return false;  // window-8 tails expected
    // derived window 9 so homology is trusted through degree 8
    auto dr = cx::depthDerivedTensor(cx::derivedTensor(M, N, 9));
    if (dr.depth != -q.max_nonzero) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 5: hypersurface periodicity and the transverse depth formula

bool c5Hypersurface() {
  auto R = cli::exampleRing("hypersurface_xy", Field::Q());
  auto q = inv::qWindow(rg::cyclicModule(R, {"x"}), rg::cyclicModule(R, {"y"}), 8);
  if (q.nonzero != std::vector<int>{2, 4, 6, 8}) return false;
  auto rep = inv::checkDepthFormula(rg::cyclicModule(R, {"x + y"}), rg::cyclicModule(R, {"x"}), 4,
                                    inv::DepthMode::Dep);
  if (rep.verdict != inv::Verdict::Holds) return false;
  if (rep.codepthT != 1 || rep.codepthM != 1 || rep.codepthN != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// criterion 6: lifted resolutions and the SES of derived tensor products

bool c6EisenbudSes() {
  struct Instance {
    RingPtr R;
    std::string x;
    std::vector<std::string> mgens, ngens;  // cyclic presentations over R/x ({} = k)
  };
  std::vector<Instance> instances;
  auto P = polyRing2();
  instances.push_back({P, "x", {}, {}});
  instances.push_back({P, "y", {}, {"x"}});
  instances.push_back({P, "x + y", {"x^2"}, {}});
  instances.push_back({P, "x - y", {}, {"x^2"}});
  instances.push_back({P, "x + 2*y", {"x"}, {"x"}});
  auto C = crossRing3();
  instances.push_back({C, "z", {}, {}});
  instances.push_back({C, "x + y", {}, {"z"}});
  instances.push_back({C, "x - y", {"z^2"}, {}});
  instances.push_back({C, "x + y + z", {}, {"x - y"}});
  instances.push_back({C, "x - y + 2*z", {"z"}, {"z"}});

  for (const auto& inst : instances) {
    const PolyRing& S = inst.R->S;
    PolyVector x = rg::nfPoly(*inst.R, parse::poly(S, inst.x));
    auto Rbar = rg::quotientRing(inst.R, {x});
    PresentedModule M =
        inst.mgens.empty() ? rg::residueField(Rbar) : rg::cyclicModule(Rbar, inst.mgens);
    PresentedModule N =
        inst.ngens.empty() ? rg::residueField(Rbar) : rg::cyclicModule(Rbar, inst.ngens);
    // d^2 = 0 for the lifted complex and chain-map checks run inside
    auto ses = cx::sesDerivedTensor(inst.R, x, Rbar, M, N, 5);
    // the reduced degree -2 operator commutes with the differential over R/x
    const auto& L = ses.lift;
    const FreeComplex& Fbar = L.Fbar;
    for (int m = Fbar.lo + 3; m <= Fbar.hi; ++m) {
      const auto& tm = L.te[m - Fbar.lo - 2];
      const auto& tprev = L.te[m - 1 - Fbar.lo - 2];
      for (int b = 0; b < Fbar.rank(m); ++b) {
        PolyVector lhs = cx::applyCols(S, Fbar.diff(m - 2), tm[b], Fbar.rank(m - 3));
        PolyVector rhs = cx::applyCols(S, tprev, Fbar.diff(m)[b], Fbar.rank(m - 3));
        if (!rg::nfVec(*Rbar, pv::sub(S, lhs, rhs)).isZero()) return false;
      }
    }
    // the middle complex computes Tor over the base ring, degreewise
    auto MR = cx::restrictToBase(M, inst.R, {x});
    auto NR = cx::restrictToBase(N, inst.R, {x});
    for (int i = 0; i <= 3; ++i)
      if (rg::moduleHilbert(cx::homology(ses.middle, i), 8) !=
          rg::moduleHilbert(rg::torModule(NR, MR, i), 8))
        return false;
    if (!cx::lesExact(ses, 3)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 7: cut-down MCM equivalences and the Ext dimension-shift identity

bool c7CutdownMcm() {
  std::mt19937_64 rng(707);
  auto R = crossRing();
  PresentedModule A = rg::cyclicModule(R, {"x"});
  PresentedModule B = rg::cyclicModule(R, {"y"});
  std::vector<PresentedModule> pool = {rg::ringAsModule(R),
                                       A,
                                       B,
                                       rg::twist(A, 1),
                                       rg::directSum(A, B),
                                       rg::directSum(rg::ringAsModule(R), B),
                                       rg::twist(B, 2),
                                       rg::freeModule(R, {0, -1})};
  // a few pairs with finite-pd partners keep the windowed b-sets decidable
  std::vector<std::pair<PresentedModule, PresentedModule>> pairs = {
      {A, rg::ringAsModule(R)},
      {B, rg::freeModule(R, {0, -1})},
      {rg::ringAsModule(R), A},
  };
  while (pairs.size() < 10)
    pairs.emplace_back(pool[rng() % pool.size()], pool[rng() % pool.size()]);
  int decidedTorCutdown = 0;
  for (int i = 0; i < 10; ++i) {
    const PresentedModule& M = pairs[i].first;
    const PresentedModule& N = pairs[i].second;
    unsigned long seed = i;
    if (inv::crossCutdownMCM(M, N, 5, seed).verdict != inv::Verdict::Holds) return false;
    // windowed b-sets agree under the dimension shift: the tilde cut-down is
    // the d-th syzygy of M/xM, so Ext^i of it equals Ext^{i+d} of M/xM
    auto xs = rg::regularSequence(R, R->dim, seed);
    PresentedModule Q = rg::quotientBySequence(M, xs);
    PresentedModule Mt = rg::cutDownTilde(M, xs);
    for (int j = 1; j <= 3; ++j)
      if (!sameHilbert(rg::extModule(Mt, N, j), rg::extModule(Q, N, j + R->dim), 8, 16))
        return false;
    auto tc = inv::crossTorCutdown(M, N, 6, seed);
    if (tc.verdict == inv::Verdict::Fails) return false;
    if (tc.verdict == inv::Verdict::Holds) ++decidedTorCutdown;
  }
  return decidedTorCutdown >= 3;
}

// ---------------------------------------------------------------------------
// criterion 8: canonical duality over Gorenstein rings

bool c8CanonicalDuality() {
  auto R = crossRing();
  PresentedModule F = rg::ringAsModule(R);
  PresentedModule A = rg::cyclicModule(R, {"x"});
  PresentedModule B = rg::cyclicModule(R, {"y"});
  PresentedModule D = rg::cyclicModule(R, {"x + y"});
  auto Rd = cli::exampleRing("dual_numbers", Field::Q());
  PresentedModule Fd = rg::ringAsModule(Rd);
  PresentedModule kd = rg::residueField(Rd);
  std::vector<std::pair<PresentedModule, PresentedModule>> pairs = {
      {F, A},
      {A, F},
      {D, A},
      {D, B},
      {D, F},
      {F, rg::directSum(A, B)},
      {kd, Fd},
      {Fd, kd},
      {rg::twist(kd, 1), Fd},
      {rg::directSum(kd, Fd), Fd},
  };
  for (const auto& [M, N] : pairs)
    if (inv::crossExtTorAll(M, N, 6).verdict != inv::Verdict::Holds) return false;
  return true;
}

// ---------------------------------------------------------------------------
// criterion 9: pushforward preserves depth, has rank mu(M), and shrinks q

bool c9Pushforward() {
  struct Instance {
    RingPtr R;
    std::string x;
    PresentedModule M;
    int qw; // q-comparison window; resolutions over the weighted semigroup
            // ring grow fast, so its instances use a narrower window
  };
  auto R1 = cli::exampleRing("hypersurface_xy", Field::Q());
  auto R2 = cli::exampleRing("semigroup_345", Field::Q());
  std::vector<Instance> instances = {
      {R1, "x + y", rg::residueField(R1), 5},
      {R1, "x - y", rg::cyclicModule(R1, {"x"}), 5},
      {R1, "x + y", rg::directSum(rg::cyclicModule(R1, {"x"}), rg::cyclicModule(R1, {"y"})), 5},
      {R1, "x + y", rg::cyclicModule(R1, {"x - y"}), 5},
      {R1, "x - y", rg::freeModule(R1, {0, -1}), 5},
      {R2, "x", rg::residueField(R2), 2},
      {R2, "y", rg::cyclicModule(R2, {"x"}), 2},
      {R2, "x", rg::cyclicModule(R2, {"y"}), 2},
      {R2, "z", rg::freeModule(R2, {0}), 2},
      {R2, "x", rg::cyclicModule(R2, {"x", "y"}), 2},
  };
  for (const auto& inst : instances) {
    PolyVector x = parse::poly(inst.R->S, inst.x);
    PresentedModule L = rg::pushforward(inst.M, x);
    if (rg::measure(L).depth != rg::measure(inst.M).depth) return false;
    auto r = rg::constantRank(L);
    if (!r.has_value() || *r != rg::minimalize(inst.M).gens) return false;
    // q over the window can only shrink; the long exact sequence additionally
    // confines new nonzero indices to one step below old ones
    std::vector<PresentedModule> samples = {
        rg::ringAsModule(inst.R), rg::residueField(inst.R),
        rg::cyclicModule(inst.R, {inst.R->S.vars[0]}),
        rg::cyclicModule(inst.R, {inst.R->S.vars[1]}), rg::freeModule(inst.R, {0, -1})};
    for (const auto& N : samples) {
      auto qL = inv::qWindow(L, N, inst.qw);
      auto qM = inv::qWindow(inst.M, N, inst.qw + 1);
      if (qL.max_nonzero > qM.max_nonzero) return false;
      for (int i : qL.nonzero) {
        bool covered = false;
        for (int j : qM.nonzero)
          if (j == i || j == i + 1) covered = true;
        if (!covered) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 10: Artinian example rings vs a graded-piece linear-algebra oracle
//
// The oracle never runs Buchberger: graded pieces of R = S/I are cut out by
// dense row reduction of the span of ideal multiples, and the resolution of k
// is rebuilt degree by degree from dense kernels and graded Nakayama.

struct PieceOracle {
  const PolyRing* S = nullptr;
  Field field;
  int topDeg = 0;                                   // last degree with R_d != 0
  std::vector<std::vector<std::vector<int>>> monos; // per degree: ambient monomials
  std::vector<std::map<std::vector<int>, int>> monoIndex;
  std::vector<DenseMatrix> red;                     // rref rows of the ideal span
  std::vector<std::vector<int>> pivots;             // pivot columns of red
  std::vector<std::vector<int>> basis;              // non-pivot columns: k-basis of R_d

  long dimAt(int d) const {
    return d >= 0 && d < int(basis.size()) ? long(basis[d].size()) : 0;
  }

  // coordinates of an ambient-monomial linear combination in the basis of R_d
  std::vector<FieldElem> reduce(int d, std::vector<FieldElem> v) const {
    const DenseMatrix& m = red[d];
    for (int r = 0; r < m.rows; ++r) {
      int p = pivots[d][r];
      if (v[p].isZero()) continue;
      FieldElem c = v[p];
      for (int j = 0; j < m.cols; ++j)
        if (!m.at(r, j).isZero()) v[j] = fe::sub(v[j], fe::mul(c, m.at(r, j)));
    }
    std::vector<FieldElem> out;
    out.reserve(basis[d].size());
    for (int b : basis[d]) out.push_back(v[b]);
    return out;
  }
};

PieceOracle buildPieceOracle(const RingPtr& R) {
  PieceOracle o;
  o.S = &R->S;
  o.field = R->S.field;
  const PolyRing& S = R->S;
  for (int d = 0;; ++d) {
    auto monos = gb::enumerateMonomials(S, d);
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < int(monos.size()); ++i) idx[monos[i]] = i;
    // rows: m * f for ideal generators f and ambient monomials m of fitting degree
    std::vector<std::vector<FieldElem>> rows;
    for (const auto& f : R->ideal) {
      int df = pv::degree(S, f, {0});
      for (const auto& m : gb::enumerateMonomials(S, d - df)) {
        std::vector<FieldElem> row(monos.size(), fe::zero(o.field));
        for (const auto& t : f.terms) {
          std::vector<int> e = t.first.exp;
          for (int v = 0; v < S.nvars(); ++v) e[v] += m[v];
          row[idx.at(e)] = fe::add(row[idx.at(e)], t.second);
        }
        rows.push_back(std::move(row));
      }
    }
    DenseMatrix mat(int(rows.size()), int(monos.size()), o.field);
    for (int r = 0; r < mat.rows; ++r)
      for (int c = 0; c < mat.cols; ++c) mat.at(r, c) = rows[r][c];
    auto piv = rref(mat);
    mat.rows = int(piv.size());  // keep the nonzero echelon rows only
    mat.a.resize(size_t(mat.rows) * mat.cols, fe::zero(o.field));
    std::vector<int> inBasis;
    {
      std::vector<bool> isPivot(monos.size(), false);
      for (int p : piv) isPivot[p] = true;
      for (int c = 0; c < int(monos.size()); ++c)
        if (!isPivot[c]) inBasis.push_back(c);
    }
    bool zero = inBasis.empty();
    o.monos.push_back(std::move(monos));
    o.monoIndex.push_back(std::move(idx));
    o.red.push_back(std::move(mat));
    o.pivots.push_back(std::move(piv));
    o.basis.push_back(std::move(inBasis));
    if (zero && d > 0) {
      o.topDeg = d - 1;
      break;
    }
    if (d > 40) throw std::logic_error("quotient ring does not look Artinian");
  }
  return o;
}

// A free module over R with generator degrees gdeg; elements of its graded
// piece in total degree d are coordinate vectors over the basis pairs
// (generator j, basis monomial of R_{d - gdeg[j]}).
struct FreePiece {
  std::vector<int> offsets;  // block offset per generator
  int dim = 0;
};

FreePiece pieceOf(const PieceOracle& o, const std::vector<int>& gdeg, int d) {
  FreePiece p;
  for (int j = 0; j < int(gdeg.size()); ++j) {
    p.offsets.push_back(p.dim);
    p.dim += int(o.dimAt(d - gdeg[j]));
  }
  return p;
}

// multiply a piece vector (over gdeg at degree e) by the ambient monomial m
std::vector<FieldElem> mulMono(const PieceOracle& o, const std::vector<int>& gdeg, int e,
                               const std::vector<int>& m, int md,
                               const std::vector<FieldElem>& v) {
  const PolyRing& S = *o.S;
  int d = e + md;
  FreePiece src = pieceOf(o, gdeg, e);
  FreePiece dst = pieceOf(o, gdeg, d);
  std::vector<FieldElem> out(dst.dim, fe::zero(o.field));
  for (int j = 0; j < int(gdeg.size()); ++j) {
    int se = e - gdeg[j], sd = d - gdeg[j];
    if (se < 0 || se > o.topDeg || sd < 0 || sd > o.topDeg) continue;
    // ambient vector of the product in S_{sd}
    std::vector<FieldElem> amb(o.monos[sd].size(), fe::zero(o.field));
    bool any = false;
    for (int b = 0; b < int(o.basis[se].size()); ++b) {
      const FieldElem& c = v[src.offsets[j] + b];
      if (c.isZero()) continue;
      std::vector<int> prod = o.monos[se][o.basis[se][b]];
      for (int t = 0; t < S.nvars(); ++t) prod[t] += m[t];
      int idx = o.monoIndex[sd].at(prod);
      amb[idx] = fe::add(amb[idx], c);
      any = true;
    }
    if (!any) continue;
    auto redv = o.reduce(sd, std::move(amb));
    for (int b = 0; b < int(redv.size()); ++b)
      out[dst.offsets[j] + b] = fe::add(out[dst.offsets[j] + b], redv[b]);
  }
  return out;
}

// Reduce v against echelon rows E (in place normalization); returns the
// residual, empty-normalized to zero detection by caller.
std::vector<FieldElem> echelonResidual(const std::vector<std::vector<FieldElem>>& E,
                                       const std::vector<int>& lead,
                                       std::vector<FieldElem> v) {
  for (int r = 0; r < int(E.size()); ++r) {
    const FieldElem& c = v[lead[r]];
    if (c.isZero()) continue;
    FieldElem f = c;
    for (int j = 0; j < int(v.size()); ++j)
      if (!E[r][j].isZero()) v[j] = fe::sub(v[j], fe::mul(f, E[r][j]));
  }
  return v;
}

void echelonInsert(std::vector<std::vector<FieldElem>>& E, std::vector<int>& lead,
                   std::vector<FieldElem> v) {
  // reduce before inserting so every row has a zero at every other row's
  // lead; a single forward pass in echelonResidual is then a full reduction
  v = echelonResidual(E, lead, std::move(v));
  int l = -1;
  for (int j = 0; j < int(v.size()); ++j)
    if (!v[j].isZero()) {
      l = j;
      break;
    }
  if (l < 0) return;
  FieldElem inv = fe::inv(v[l]);
  for (auto& c : v) c = fe::mul(c, inv);
  E.push_back(std::move(v));
  lead.push_back(l);
}

// One resolution step: given the map with generator degrees srcGdeg and
// generator images (piece vectors over dstGdeg in the respective degrees),
// find the minimal generators of its kernel. Returns their degrees and
// coordinate vectors.
struct SyzygyStep {
  std::vector<int> gdeg;
  std::vector<std::vector<FieldElem>> gens;  // piece vectors over srcGdeg
};

SyzygyStep kernelGenerators(const PieceOracle& o, const std::vector<int>& srcGdeg,
                            const std::vector<int>& dstGdeg,
                            const std::vector<std::vector<FieldElem>>& images) {
  SyzygyStep out;
  int lo = *std::min_element(srcGdeg.begin(), srcGdeg.end());
  int hi = *std::max_element(srcGdeg.begin(), srcGdeg.end()) + o.topDeg;
  for (int d = lo; d <= hi; ++d) {
    FreePiece src = pieceOf(o, srcGdeg, d);
    FreePiece dst = pieceOf(o, dstGdeg, d);
    if (src.dim == 0) continue;
    // matrix of the map on this piece
    DenseMatrix mat(dst.dim, src.dim, o.field);
    int col = 0;
    for (int j = 0; j < int(srcGdeg.size()); ++j) {
      int se = d - srcGdeg[j];
      if (se < 0 || se > o.topDeg) continue;
      for (int b = 0; b < int(o.basis[se].size()); ++b, ++col) {
        auto img = mulMono(o, dstGdeg, srcGdeg[j], o.monos[se][o.basis[se][b]], se,
                           images[j]);
        for (int r = 0; r < dst.dim; ++r) mat.at(r, col) = img[r];
      }
    }
    auto kk = rankAndKernel(std::move(mat), o.field);
    if (kk.kernel.empty()) continue;
    // span of lower-degree kernel generators in this degree (graded Nakayama)
    std::vector<std::vector<FieldElem>> E;
    std::vector<int> lead;
    for (int g = 0; g < int(out.gdeg.size()); ++g) {
      int md = d - out.gdeg[g];
      if (md <= 0 || md > o.topDeg) continue;
      for (int b : o.basis[md])
        echelonInsert(E, lead,
                      mulMono(o, srcGdeg, out.gdeg[g], o.monos[md][b], md, out.gens[g]));
    }
    for (auto& v : kk.kernel) {
      auto resid = echelonResidual(E, lead, v);
      bool zero = true;
      for (const auto& c : resid)
        if (!c.isZero()) {
          zero = false;
          break;
        }
      if (zero) continue;
      out.gdeg.push_back(d);
      out.gens.push_back(v);
      echelonInsert(E, lead, std::move(resid));
    }
  }
  return out;
}

struct OracleReport {
  long totalDim = 0;
  std::vector<long> betti;  // beta_0..beta_3 of k
};

OracleReport runOracle(const RingPtr& R) {
  PieceOracle o = buildPieceOracle(R);
  OracleReport rep;
  for (int d = 0; d <= o.topDeg; ++d) rep.totalDim += o.dimAt(d);
  rep.betti.push_back(1);
  // step 1: minimal generators of the irrelevant ideal inside F_0 = R
  std::vector<int> gdeg0 = {0};
  SyzygyStep step;  // generators of m as a submodule of R
  for (int d = 1; d <= o.topDeg; ++d) {
    std::vector<std::vector<FieldElem>> E;
    std::vector<int> lead;
    for (int g = 0; g < int(step.gdeg.size()); ++g) {
      int md = d - step.gdeg[g];
      if (md <= 0 || md > o.topDeg) continue;
      for (int b : o.basis[md])
        echelonInsert(E, lead,
                      mulMono(o, gdeg0, step.gdeg[g], o.monos[md][b], md, step.gens[g]));
    }
    for (int b = 0; b < int(o.basis[d].size()); ++b) {
      std::vector<FieldElem> v(o.dimAt(d), fe::zero(o.field));
      v[b] = fe::one(o.field);
      auto resid = echelonResidual(E, lead, v);
      bool zero = true;
      for (const auto& c : resid)
        if (!c.isZero()) {
          zero = false;
          break;
        }
      if (zero) continue;
      step.gdeg.push_back(d);
      step.gens.push_back(v);
      echelonInsert(E, lead, std::move(resid));
    }
  }
  rep.betti.push_back(long(step.gdeg.size()));
  // steps 2 and 3: kernels of the successive maps
  std::vector<int> srcGdeg = step.gdeg;
  std::vector<std::vector<FieldElem>> images = step.gens;
  std::vector<int> dstGdeg = gdeg0;
  for (int i = 2; i <= 3; ++i) {
    SyzygyStep next = kernelGenerators(o, srcGdeg, dstGdeg, images);
    rep.betti.push_back(long(next.gdeg.size()));
    dstGdeg = std::move(srcGdeg);
    srcGdeg = next.gdeg;
    images = std::move(next.gens);
  }
  return rep;
}

bool c10ExampleRings() {
  // reference values recorded from the first oracle run, then frozen
  struct Frozen {
    const char* name;
    long totalDim;
    std::vector<long> betti;
  };
  std::vector<Frozen> frozen = {
      {"js06", 8, {1, 4, 13, 40}},
      {"i_alpha", 12, {1, 5, 20, 76}},
  };
  Field fpt = Field::Fpt(32003, "a");
  for (const auto& fr : frozen) {
    auto R = cli::exampleRing(fr.name, fpt);
    if (R->dim != 0) return false;
    // library values
    auto h = rg::moduleHilbert(rg::ringAsModule(R), 8);
    long libTotal = 0;
    for (long v : h) libTotal += v;
    auto F = rg::minFreeResolution(rg::residueField(R), 3);
    std::vector<long> libBetti(F.betti.begin(), F.betti.end());
    libBetti.resize(4, 0);
    // oracle values
    OracleReport orc = runOracle(R);
    std::cout << "  [" << fr.name << "] oracle total=" << orc.totalDim << " betti=";
    for (long b : orc.betti) std::cout << b << " ";
    std::cout << "| library total=" << libTotal << " betti=";
    for (long b : libBetti) std::cout << b << " ";
    std::cout << std::endl;
    if (orc.totalDim != fr.totalDim || libTotal != fr.totalDim) return false;
    if (orc.betti != fr.betti || libBetti != fr.betti) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// criterion 11: the q formula at the maximal ideal on three exact instances

bool c11QrFormula() {
  auto P2 = polyRing2();
  auto rep1 = inv::qrFormulaAtM(rg::residueField(P2), rg::residueField(P2), 6);
  if (rep1.verdict != inv::Verdict::Holds || rep1.lhs != 2) return false;

  auto P1 = rg::makeRing(Field::Q(), {"x"}, {1}, {});
  auto rep2 = inv::qrFormulaAtM(rg::residueField(P1), rg::ringAsModule(P1), 6);
  if (rep2.verdict != inv::Verdict::Holds || rep2.lhs != 0) return false;

  auto Rc = crossRing();
  auto rep3 = inv::qrFormulaAtM(rg::cyclicModule(Rc, {"x + y"}), rg::residueField(Rc), 6);
  if (rep3.verdict != inv::Verdict::Holds || rep3.lhs != 1) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "Auslander-Buchsbaum: pd + depth = depth R on 25 finite-pd modules", 60,
            c1AuslanderBuchsbaum);
  criterion(2, "depth lemma on 50 degreewise-split short exact sequences of complexes", 120,
            c2DepthLemma);
  criterion(3, "Koszul cut-down: depth(X (x) K(x)) = depth(X) - 1 on 30 instances", 60,
            c3KoszulCutdown);
  criterion(4, "Artinian derived depth equals -(top Tor index) on 20 window-8 pairs", 300,
            c4ArtinianDerived);
  criterion(5, "hypersurface periodicity and the transverse depth formula", 10, c5Hypersurface);
  criterion(6, "lifted resolutions and the derived-tensor short exact sequence", 120,
            c6EisenbudSes);
  criterion(7, "cut-down MCM equivalences and the Ext dimension-shift identity", 120,
            c7CutdownMcm);
  criterion(8, "canonical duality over Gorenstein examples", 120, c8CanonicalDuality);
  criterion(9, "pushforward: depth preserved, rank = mu(M), q shrinks", 120, c9Pushforward);
  criterion(10, "Artinian example rings vs the graded-piece linear-algebra oracle", 300,
            c10ExampleRings);
  criterion(11, "q formula at the maximal ideal on three exact instances", 10, c11QrFormula);

  if (failures == 0)
    std::cout << "all criteria passed" << std::endl;
  else
    std::cout << failures << " criteria failed" << std::endl;
  return failures;
}
