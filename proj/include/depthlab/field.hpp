// Exact scalar arithmetic over Q, F_p, and the univariate rational-function
// fields Q(t) and F_p(t).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace depthlab {

enum class FieldKind { Rational, Prime, FunctionField };

// Field descriptor. For FunctionField, `p` is the characteristic of the base
// field (0 means Q(t), otherwise F_p(t)); `indet` only affects printing.
struct Field {
  FieldKind kind = FieldKind::Rational;
  long p = 0;
  std::string indet = "t";

  bool compatible(const Field& o) const { return kind == o.kind && p == o.p; }
  Field base() const {
    if (kind != FieldKind::FunctionField) throw std::logic_error("base(): not a function field");
    return p == 0 ? Field{FieldKind::Rational, 0, "t"} : Field{FieldKind::Prime, p, "t"};
  }
  static Field Q() { return {FieldKind::Rational, 0, "t"}; }
  static Field Fp(long p) { return {FieldKind::Prime, p, "t"}; }
  static Field Qt(std::string indet = "t") { return {FieldKind::FunctionField, 0, std::move(indet)}; }
  static Field Fpt(long p, std::string indet = "t") { return {FieldKind::FunctionField, p, std::move(indet)}; }
  std::string name() const {
    switch (kind) {
      case FieldKind::Rational: return "Q";
      case FieldKind::Prime: return "F" + std::to_string(p);
      case FieldKind::FunctionField:
        return (p == 0 ? std::string("Q(") : "F" + std::to_string(p) + "(") + indet + ")";
    }
    return "?";
  }
};

struct FieldMismatch : std::invalid_argument {
  FieldMismatch() : std::invalid_argument("field mismatch between operands") {}
};
struct DivisionByZero : std::invalid_argument {
  DivisionByZero() : std::invalid_argument("division by zero field element") {}
};

// A single immutable field element. The active representation is selected by
// `kind`: `rat` for rationals, `res` for prime-field residues in [0,p), and
// `num`/`den` (coefficient vectors over the base field, ascending degree,
// denominator monic and coprime to the numerator) for function fields.
class FieldElem {
 public:
  FieldKind kind = FieldKind::Rational;
  long p = 0;
  mpq_class rat;
  long res = 0;
  std::vector<FieldElem> num, den;

  FieldElem() = default;

  bool sameField(const FieldElem& o) const { return kind == o.kind && p == o.p; }
  Field field() const { return {kind, p, "t"}; }

  bool isZero() const {
    switch (kind) {
      case FieldKind::Rational: return rat == 0;
      case FieldKind::Prime: return res == 0;
      case FieldKind::FunctionField: return num.empty();
    }
    return false;
  }
  bool isOne() const;
};

namespace fe {

inline long modNorm(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

inline FieldElem zero(const Field& f) {
  FieldElem e;
  e.kind = f.kind;
  e.p = f.p;
  if (f.kind == FieldKind::FunctionField) {
    FieldElem c;
    c.kind = f.p == 0 ? FieldKind::Rational : FieldKind::Prime;
    c.p = f.p;
    if (c.kind == FieldKind::Rational)
      c.rat = 1;
    else
      c.res = 1;
    e.den = {std::move(c)};
  }
  return e;
}

FieldElem fromInt(const Field& f, long v);

inline FieldElem one(const Field& f) { return fromInt(f, 1); }

FieldElem add(const FieldElem& a, const FieldElem& b);
FieldElem sub(const FieldElem& a, const FieldElem& b);
FieldElem mul(const FieldElem& a, const FieldElem& b);
FieldElem div(const FieldElem& a, const FieldElem& b);
FieldElem neg(const FieldElem& a);
FieldElem inv(const FieldElem& a);
bool eq(const FieldElem& a, const FieldElem& b);
int cmp(const FieldElem& a, const FieldElem& b);  // total order, for determinism
std::string show(const FieldElem& a, const std::string& indet = "t");

// --- univariate polynomial helpers over the base field (ascending coeffs) ---

inline void upTrim(std::vector<FieldElem>& c) {
  while (!c.empty() && c.back().isZero()) c.pop_back();
}

inline std::vector<FieldElem> upAdd(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
  std::vector<FieldElem> r = a.size() >= b.size() ? a : b;
  const std::vector<FieldElem>& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); ++i) r[i] = add(r[i], s[i]);
  upTrim(r);
  return r;
}

inline std::vector<FieldElem> upNeg(const std::vector<FieldElem>& a) {
  std::vector<FieldElem> r = a;
  for (auto& c : r) c = neg(c);
  return r;
}

inline std::vector<FieldElem> upMul(const Field& base, const std::vector<FieldElem>& a,
                                    const std::vector<FieldElem>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<FieldElem> r(a.size() + b.size() - 1, zero(base));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
  upTrim(r);
  return r;
}

// Division with remainder; divisor must be nonzero.
inline std::pair<std::vector<FieldElem>, std::vector<FieldElem>> upDivRem(
    const Field& base, std::vector<FieldElem> a, const std::vector<FieldElem>& b) {
  if (b.empty()) throw DivisionByZero();
  std::vector<FieldElem> q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, zero(base));
  FieldElem lcInv = inv(b.back());
  while (!a.empty() && a.size() >= b.size()) {
    size_t k = a.size() - b.size();
    FieldElem c = mul(a.back(), lcInv);
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i) a[k + i] = sub(a[k + i], mul(c, b[i]));
    a.pop_back();  // leading term cancels exactly
    upTrim(a);
  }
  return {q, a};
}

inline std::vector<FieldElem> upMonic(const std::vector<FieldElem>& a) {
  if (a.empty()) return a;
  FieldElem c = inv(a.back());
  std::vector<FieldElem> r = a;
  for (auto& x : r) x = mul(x, c);
  return r;
}

inline std::vector<FieldElem> upGcd(const Field& base, std::vector<FieldElem> a,
                                    std::vector<FieldElem> b) {
  while (!b.empty()) {
    auto [q, r] = upDivRem(base, a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return upMonic(a);
}

// Build a normalized function-field element from a num/den pair.
inline FieldElem makeFF(const Field& f, std::vector<FieldElem> n, std::vector<FieldElem> d) {
  upTrim(n);
  upTrim(d);
  if (d.empty()) throw DivisionByZero();
  FieldElem e = zero(f);
  if (n.empty()) {
    e.den = {one(f.base())};
    return e;
  }
  Field base = f.base();
  auto g = upGcd(base, n, d);
  if (g.size() > 1 || !g.empty()) {
    n = upDivRem(base, n, g).first;
    d = upDivRem(base, d, g).first;
  }
  FieldElem lc = inv(d.back());
  for (auto& c : n) c = mul(c, lc);
  for (auto& c : d) c = mul(c, lc);
  e.num = std::move(n);
  e.den = std::move(d);
  return e;
}

inline FieldElem fromInt(const Field& f, long v) {
  FieldElem e = zero(f);
  switch (f.kind) {
    case FieldKind::Rational:
      e.rat = v;
      break;
    case FieldKind::Prime:
      e.res = modNorm(v, f.p);
      break;
    case FieldKind::FunctionField: {
      FieldElem c = fromInt(f.base(), v);
      if (!c.isZero()) e.num = {c};
      e.den = {one(f.base())};
      break;
    }
  }
  return e;
}

// The indeterminate t of a function field.
inline FieldElem indeterminate(const Field& f) {
  if (f.kind != FieldKind::FunctionField)
    throw std::invalid_argument("indeterminate(): field has no indeterminate");
  FieldElem e = zero(f);
  e.num = {zero(f.base()), one(f.base())};
  e.den = {one(f.base())};
  return e;
}

inline long mulMod(long a, long b, long p) { return long(__int128(a) * b % p); }

inline long invMod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = modNorm(a, p);
  if (nr == 0) throw DivisionByZero();
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return modNorm(t, p);
}

inline FieldElem add(const FieldElem& a, const FieldElem& b) {
  if (!a.sameField(b)) throw FieldMismatch();
  FieldElem e = a;
  switch (a.kind) {
    case FieldKind::Rational:
      e.rat = a.rat + b.rat;
      e.rat.canonicalize();
      return e;
    case FieldKind::Prime:
      e.res = modNorm(a.res + b.res, a.p);
      return e;
    case FieldKind::FunctionField: {
      Field f = a.field(), base = f.base();
      auto n = upAdd(upMul(base, a.num, b.den), upMul(base, b.num, a.den));
      auto d = upMul(base, a.den, b.den);
      return makeFF(f, std::move(n), std::move(d));
    }
  }
  return e;
}

inline FieldElem neg(const FieldElem& a) {
  FieldElem e = a;
  switch (a.kind) {
    case FieldKind::Rational:
      e.rat = -a.rat;
      return e;
    case FieldKind::Prime:
      e.res = a.res == 0 ? 0 : a.p - a.res;
      return e;
    case FieldKind::FunctionField:
      e.num = upNeg(a.num);
      return e;
  }
  return e;
}

inline FieldElem sub(const FieldElem& a, const FieldElem& b) { return add(a, neg(b)); }

inline FieldElem mul(const FieldElem& a, const FieldElem& b) {
  if (!a.sameField(b)) throw FieldMismatch();
  FieldElem e = a;
  switch (a.kind) {
    case FieldKind::Rational:
      e.rat = a.rat * b.rat;
      e.rat.canonicalize();
      return e;
    case FieldKind::Prime:
      e.res = mulMod(a.res, b.res, a.p);
      return e;
    case FieldKind::FunctionField: {
      Field f = a.field(), base = f.base();
      return makeFF(f, upMul(base, a.num, b.num), upMul(base, a.den, b.den));
    }
  }
  return e;
}

inline FieldElem inv(const FieldElem& a) {
  if (a.isZero()) throw DivisionByZero();
  FieldElem e = a;
  switch (a.kind) {
    case FieldKind::Rational:
      e.rat = 1 / a.rat;
      return e;
    case FieldKind::Prime:
      e.res = invMod(a.res, a.p);
      return e;
    case FieldKind::FunctionField:
      return makeFF(a.field(), a.den, a.num);
  }
  return e;
}

inline FieldElem div(const FieldElem& a, const FieldElem& b) { return mul(a, inv(b)); }

inline bool eq(const FieldElem& a, const FieldElem& b) {
  if (!a.sameField(b)) return false;
  switch (a.kind) {
    case FieldKind::Rational: return a.rat == b.rat;
    case FieldKind::Prime: return a.res == b.res;
    case FieldKind::FunctionField: {
      if (a.num.size() != b.num.size() || a.den.size() != b.den.size()) return false;
      for (size_t i = 0; i < a.num.size(); ++i)
        if (!eq(a.num[i], b.num[i])) return false;
      for (size_t i = 0; i < a.den.size(); ++i)
        if (!eq(a.den[i], b.den[i])) return false;
      return true;
    }
  }
  return false;
}

inline int cmp(const FieldElem& a, const FieldElem& b) {
  switch (a.kind) {
    case FieldKind::Rational: return ::cmp(a.rat, b.rat);
    case FieldKind::Prime: return a.res < b.res ? -1 : a.res > b.res ? 1 : 0;
    case FieldKind::FunctionField: {
      auto cmpVec = [](const std::vector<FieldElem>& x, const std::vector<FieldElem>& y) {
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (size_t i = 0; i < x.size(); ++i) {
          int c = cmp(x[i], y[i]);
          if (c) return c;
        }
        return 0;
      };
      int c = cmpVec(a.num, b.num);
      return c ? c : cmpVec(a.den, b.den);
    }
  }
  return 0;
}

inline std::string showPoly(const std::vector<FieldElem>& c, const std::string& indet) {
  if (c.empty()) return "0";
  std::string s;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i].isZero()) continue;
    if (!s.empty()) s += "+";
    std::string cs = show(c[i], indet);
    if (i == 0) {
      s += cs;
    } else {
      if (cs != "1") s += cs + "*";
      s += indet;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

inline std::string show(const FieldElem& a, const std::string& indet) {
  switch (a.kind) {
    case FieldKind::Rational: return a.rat.get_str();
    case FieldKind::Prime: return std::to_string(a.res);
    case FieldKind::FunctionField: {
      std::string n = showPoly(a.num, indet);
      if (a.den.size() == 1 && a.den[0].isOne()) return n;
      return "(" + n + ")/(" + showPoly(a.den, indet) + ")";
    }
  }
  return "?";
}

}  // namespace fe

inline bool FieldElem::isOne() const {
  switch (kind) {
    case FieldKind::Rational: return rat == 1;
    case FieldKind::Prime: return res == 1;
    case FieldKind::FunctionField:
      return num.size() == 1 && num[0].isOne() && den.size() == 1 && den[0].isOne();
  }
  return false;
}

}  // namespace depthlab
