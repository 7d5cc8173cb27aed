// Multivariate monomials, monomial orders, and sparse polynomial vectors
// (elements of free modules S^m; m = 1 encodes ring elements).
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "depthlab/field.hpp"

namespace depthlab {

struct Monomial {
  std::vector<int> exp;  // length = ambient variable count
  int comp = 0;          // free-module component; 0 for ring elements

  bool operator==(const Monomial& o) const { return comp == o.comp && exp == o.exp; }
  int totalDeg() const { return std::accumulate(exp.begin(), exp.end(), 0); }
};

enum class BaseOrder { GrevLex, Lex, GrLex };
enum class ModuleExt { TOP, POT };

// A monomial order. The optional weight vector (typically the variable
// degrees) defines the degree used by the graded orders. POT compares
// components first with e_0 > e_1 > ...; this doubles as the elimination
// order used by the syzygy/kernel computations.
struct MonomialOrder {
  BaseOrder base = BaseOrder::GrevLex;
  ModuleExt ext = ModuleExt::POT;
  std::vector<int> weights;  // empty = all ones

  int wdeg(const std::vector<int>& e) const {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * (weights.empty() ? 1 : weights[i]);
    return d;
  }

  // ring-part comparison: >0 if a > b
  int cmpExp(const std::vector<int>& a, const std::vector<int>& b) const {
    switch (base) {
      case BaseOrder::Lex: {
        for (size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      }
      case BaseOrder::GrLex: {
        int da = wdeg(a), db = wdeg(b);
        if (da != db) return da > db ? 1 : -1;
        for (size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      }
      case BaseOrder::GrevLex: {
        int da = wdeg(a), db = wdeg(b);
        if (da != db) return da > db ? 1 : -1;
        for (size_t i = a.size(); i-- > 0;)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
      }
    }
    return 0;
  }

  int cmp(const Monomial& a, const Monomial& b) const {
    if (ext == ModuleExt::POT) {
      if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
      return cmpExp(a.exp, b.exp);
    }
    int c = cmpExp(a.exp, b.exp);
    if (c) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
};

// The ambient polynomial ring S = k[x_1..x_n] with graded variables.
struct PolyRing {
  Field field;
  std::vector<std::string> vars;
  std::vector<int> degs;  // positive variable degrees
  MonomialOrder ord;

  PolyRing() = default;
  PolyRing(Field f, std::vector<std::string> v, std::vector<int> d = {},
           BaseOrder base = BaseOrder::GrevLex)
      : field(std::move(f)), vars(std::move(v)), degs(std::move(d)) {
    if (degs.empty()) degs.assign(vars.size(), 1);
    ord.base = base;
    ord.weights = degs;
  }
  int nvars() const { return int(vars.size()); }
};

using Term = std::pair<Monomial, FieldElem>;

// Element of a free module S^ambient; terms strictly descending in the active
// order, no zero coefficients, no duplicate monomials.
struct PolyVector {
  int ambient = 1;
  std::vector<Term> terms;

  bool isZero() const { return terms.empty(); }
  const Term& lead() const {
    if (terms.empty()) throw std::logic_error("lead of zero vector");
    return terms.front();
  }
};

namespace pv {

inline PolyVector zero(int ambient = 1) { return PolyVector{ambient, {}}; }

inline void normalize(const PolyRing& R, PolyVector& v) {
  auto& t = v.terms;
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return R.ord.cmp(a.first, b.first) > 0; });
  std::vector<Term> out;
  out.reserve(t.size());
  for (auto& tm : t) {
    if (!out.empty() && out.back().first == tm.first)
      out.back().second = fe::add(out.back().second, tm.second);
    else
      out.push_back(std::move(tm));
    if (!out.empty() && out.back().second.isZero()) out.pop_back();
  }
  t = std::move(out);
}

inline PolyVector make(const PolyRing& R, int ambient, std::vector<Term> terms) {
  PolyVector v{ambient, std::move(terms)};
  normalize(R, v);
  return v;
}

inline PolyVector monomial(const PolyRing&, std::vector<int> exp, int comp, FieldElem c) {
  PolyVector v{comp + 1 > 1 ? comp + 1 : 1, {}};
  if (!c.isZero()) v.terms.push_back({Monomial{std::move(exp), comp}, std::move(c)});
  return v;
}

inline PolyVector monomial(const PolyRing& R, std::vector<int> exp, int comp = 0) {
  return monomial(R, std::move(exp), comp, fe::one(R.field));
}

inline PolyVector variable(const PolyRing& R, int i) {
  std::vector<int> e(R.nvars(), 0);
  e[i] = 1;
  return monomial(R, std::move(e));
}

inline PolyVector constant(const PolyRing& R, const FieldElem& c) {
  PolyVector v{1, {}};
  if (!c.isZero()) v.terms.push_back({Monomial{std::vector<int>(R.nvars(), 0), 0}, c});
  return v;
}

inline PolyVector unitVector(const PolyRing& R, int ambient, int comp) {
  PolyVector v{ambient, {}};
  v.terms.push_back({Monomial{std::vector<int>(R.nvars(), 0), comp}, fe::one(R.field)});
  return v;
}

inline PolyVector add(const PolyRing& R, const PolyVector& a, const PolyVector& b) {
  PolyVector r{std::max(a.ambient, b.ambient), {}};
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = R.ord.cmp(a.terms[i].first, b.terms[j].first);
    if (c > 0)
      r.terms.push_back(a.terms[i++]);
    else if (c < 0)
      r.terms.push_back(b.terms[j++]);
    else {
      FieldElem s = fe::add(a.terms[i].second, b.terms[j].second);
      if (!s.isZero()) r.terms.push_back({a.terms[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
  return r;
}

inline PolyVector scale(const PolyVector& a, const FieldElem& c) {
  if (c.isZero()) return PolyVector{a.ambient, {}};
  PolyVector r = a;
  for (auto& t : r.terms) t.second = fe::mul(t.second, c);
  return r;
}

inline PolyVector neg(const PolyVector& a) {
  PolyVector r = a;
  for (auto& t : r.terms) t.second = fe::neg(t.second);
  return r;
}

inline PolyVector sub(const PolyRing& R, const PolyVector& a, const PolyVector& b) {
  return add(R, a, neg(b));
}

// multiply by the term c * x^exp (component shift not allowed here)
inline PolyVector mulTerm(const PolyVector& a, const std::vector<int>& exp, const FieldElem& c) {
  if (c.isZero()) return PolyVector{a.ambient, {}};
  PolyVector r = a;
  for (auto& t : r.terms) {
    for (size_t i = 0; i < exp.size(); ++i) t.first.exp[i] += exp[i];
    t.second = fe::mul(t.second, c);
  }
  return r;
}

// product of a ring element (ambient 1) with a module vector
inline PolyVector mulRing(const PolyRing& R, const PolyVector& f, const PolyVector& v) {
  PolyVector r{v.ambient, {}};
  for (const auto& t : f.terms) {
    if (t.first.comp != 0) throw std::invalid_argument("mulRing: left factor not a ring element");
    r = add(R, r, mulTerm(v, t.first.exp, t.second));
  }
  return r;
}

inline PolyVector monic(const PolyVector& a) {
  if (a.isZero()) return a;
  return scale(a, fe::inv(a.lead().second));
}

// move all components up by `offset` inside a larger ambient
inline PolyVector shiftComp(const PolyVector& a, int offset, int newAmbient) {
  PolyVector r = a;
  r.ambient = newAmbient;
  for (auto& t : r.terms) t.first.comp += offset;
  return r;
}

// extract components [lo, hi) as a vector in ambient hi-lo
inline PolyVector sliceComp(const PolyRing& R, const PolyVector& a, int lo, int hi) {
  PolyVector r{hi - lo, {}};
  for (const auto& t : a.terms)
    if (t.first.comp >= lo && t.first.comp < hi) {
      Term u = t;
      u.first.comp -= lo;
      r.terms.push_back(std::move(u));
    }
  normalize(R, r);  // POT slice keeps order, TOP may interleave; normalize to be safe
  return r;
}

// the ring-element coefficient standing at component c
inline PolyVector component(const PolyVector& a, int c) {
  PolyVector r{1, {}};
  for (const auto& t : a.terms)
    if (t.first.comp == c) {
      Term u = t;
      u.first.comp = 0;
      r.terms.push_back(std::move(u));
    }
  return r;
}

inline bool eq(const PolyVector& a, const PolyVector& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i].first == b.terms[i].first) || !fe::eq(a.terms[i].second, b.terms[i].second))
      return false;
  return true;
}

// deterministic total order (for canonical sorting of generator lists)
inline int cmp(const PolyRing& R, const PolyVector& a, const PolyVector& b) {
  size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    int c = R.ord.cmp(a.terms[i].first, b.terms[i].first);
    if (c) return c;
    c = fe::cmp(a.terms[i].second, b.terms[i].second);
    if (c) return c;
  }
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
  return 0;
}

// weighted degree of a homogeneous vector given generator shifts; returns the
// common degree, or -1 with homogeneous=false if mixed.
inline int degree(const PolyRing& R, const PolyVector& a, const std::vector<int>& shifts,
                  bool* homogeneous = nullptr) {
  int d = -1;
  bool ok = true;
  for (const auto& t : a.terms) {
    int s = t.first.comp < int(shifts.size()) ? shifts[t.first.comp] : 0;
    int dt = R.ord.wdeg(t.first.exp) + s;
    if (d == -1)
      d = dt;
    else if (d != dt)
      ok = false;
  }
  if (homogeneous) *homogeneous = ok;
  return d;
}

inline bool isHomogeneous(const PolyRing& R, const PolyVector& a, const std::vector<int>& shifts) {
  bool ok = true;
  degree(R, a, shifts, &ok);
  return ok;
}

inline std::string showMono(const PolyRing& R, const Monomial& m) {
  std::string s;
  for (int i = 0; i < R.nvars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += R.vars[i];
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s;
}

inline std::string show(const PolyRing& R, const PolyVector& a) {
  if (a.isZero()) return "0";
  std::string s;
  for (const auto& t : a.terms) {
    if (!s.empty()) s += " + ";
    std::string cs = fe::show(t.second, R.field.indet);
    std::string ms = showMono(R, t.first);
    std::string body;
    if (ms.empty())
      body = cs;
    else if (cs == "1")
      body = ms;
    else
      body = (cs.find_first_of("+-/", 1) != std::string::npos ? "(" + cs + ")" : cs) + "*" + ms;
    if (a.ambient > 1) body += "<" + std::to_string(t.first.comp) + ">";
    s += body;
  }
  return s;
}

}  // namespace pv

}  // namespace depthlab
