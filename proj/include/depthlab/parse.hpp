// Recursive-descent parser for polynomial expressions and module vectors.
// Grammar: expr := term (('+'|'-') term)* ; term := factor ('*'? factor)* ;
// factor := atom ('^' int)? ; atom := int | ident | '(' expr ')' | '-' factor.
// Identifiers resolve to ring variables, or to the coefficient-field
// indeterminate when the field has one. Vectors are written [f1, ..., fm].
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "depthlab/poly.hpp"

namespace depthlab {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error("parse error: " + m) {}
};

namespace parse {

class PolyParser {
 public:
  PolyParser(const PolyRing& R, const std::string& s) : R_(R), s_(s) {}

  PolyVector parsePoly() {
    PolyVector v = expr();
    skipWs();
    if (pos_ != s_.size()) throw ParseError("trailing input at '" + rest() + "'");
    return v;
  }

  // [f1, ..., fm] as a vector in S^m (a bare polynomial means m = 1).
  PolyVector parseVector(int ambient = -1) {
    skipWs();
    if (!peekIs('[')) {
      PolyVector v = parsePoly();
      if (ambient > 1) v.ambient = ambient;
      return v;
    }
    ++pos_;
    std::vector<PolyVector> comps;
    skipWs();
    if (!peekIs(']')) {
      comps.push_back(expr());
      skipWs();
      while (peekIs(',')) {
        ++pos_;
        comps.push_back(expr());
        skipWs();
      }
    }
    expect(']');
    skipWs();
    if (pos_ != s_.size()) throw ParseError("trailing input at '" + rest() + "'");
    int m = ambient >= 0 ? ambient : int(comps.size());
    if (int(comps.size()) > m) throw ParseError("vector longer than ambient rank");
    PolyVector v{std::max(m, 1), {}};
    for (size_t i = 0; i < comps.size(); ++i)
      v = pv::add(R_, v, pv::shiftComp(comps[i], int(i), v.ambient));
    return v;
  }

 private:
  const PolyRing& R_;
  const std::string& s_;
  size_t pos_ = 0;

  void skipWs() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peekIs(char c) {
    skipWs();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peekIs(c)) throw ParseError(std::string("expected '") + c + "' at '" + rest() + "'");
    ++pos_;
  }
  std::string rest() const { return s_.substr(pos_, 24); }

  PolyVector expr() {
    PolyVector v = term();
    for (;;) {
      skipWs();
      if (peekIs('+')) {
        ++pos_;
        v = pv::add(R_, v, term());
      } else if (peekIs('-')) {
        ++pos_;
        v = pv::sub(R_, v, term());
      } else {
        return v;
      }
    }
  }

  PolyVector term() {
    PolyVector v = factor();
    for (;;) {
      skipWs();
      if (peekIs('*')) {
        ++pos_;
        v = pv::mulRing(R_, v, factor());
      } else if (pos_ < s_.size() &&
                 (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        // implicit multiplication: 2x, x(y+1)
        v = pv::mulRing(R_, v, factor());
      } else {
        return v;
      }
    }
  }

  PolyVector factor() {
    PolyVector v = atom();
    skipWs();
    if (peekIs('^')) {
      ++pos_;
      skipWs();
      bool negExp = false;
      if (peekIs('-')) {
        ++pos_;
        negExp = true;
      }
      long e = integer();
      if (negExp) throw ParseError("negative exponent");
      PolyVector r = pv::constant(R_, fe::one(R_.field));
      for (long i = 0; i < e; ++i) r = pv::mulRing(R_, r, v);
      return r;
    }
    return v;
  }

  long integer() {
    skipWs();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer at '" + rest() + "'");
    return std::stol(s_.substr(start, pos_ - start));
  }

  PolyVector atom() {
    skipWs();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input");
    char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      return pv::neg(factor());
    }
    if (c == '(') {
      ++pos_;
      PolyVector v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return pv::constant(R_, fe::fromInt(R_.field, integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < R_.nvars(); ++i)
        if (R_.vars[i] == name) return pv::variable(R_, i);
      if (R_.field.kind == FieldKind::FunctionField && name == R_.field.indet)
        return pv::constant(R_, fe::indeterminate(R_.field));
      throw ParseError("unknown identifier '" + name + "'");
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }
};

inline PolyVector poly(const PolyRing& R, const std::string& s) {
  return PolyParser(R, s).parsePoly();
}

inline PolyVector vec(const PolyRing& R, const std::string& s, int ambient = -1) {
  return PolyParser(R, s).parseVector(ambient);
}

inline std::vector<PolyVector> polys(const PolyRing& R, const std::vector<std::string>& ss) {
  std::vector<PolyVector> out;
  out.reserve(ss.size());
  for (const auto& s : ss) out.push_back(poly(R, s));
  return out;
}

inline std::vector<PolyVector> vecs(const PolyRing& R, const std::vector<std::string>& ss,
                                    int ambient = -1) {
  std::vector<PolyVector> out;
  out.reserve(ss.size());
  for (const auto& s : ss) out.push_back(vec(R, s, ambient));
  return out;
}

}  // namespace parse

}  // namespace depthlab
