// Session-script DSL (field/ring/module declarations plus commands), the
// registry of built-in example rings, command dispatch over the library, and
// JSON/text report emission.
//
// Grammar (statements end with ';', comments run from '#' to end of line):
//   field  NAME (= SPEC)?                SPEC: Q | Qt | Fp:P | Fpt:P
//   ring   NAME = FIELD [ v(:deg)?, ... ] (/ ( poly, ... ))?
//   ring   NAME = example REGISTRY-NAME
//   module NAME = coker RING (shifts)? [[poly, ...], ...]   rows = generators
//   module NAME = free RING (shifts)?
//   module NAME = residue RING
//   module NAME = cyclic RING (poly, ...)
//   COMMAND arg ... key=value ...
// Commands: resolve | tor | ext | depth | measure | qr | br
//           | check MODE M (N)? | crosscheck KIND M (N)? | survey MODE RING
// Check modes: ldep rdep dep derived-ldep derived-rdep derived-dep ubc uac tr.
#pragma once

#include <chrono>
#include <json.hpp>
#include <map>
#include <ostream>
#include <random>

#include "depthlab/invariants.hpp"

namespace depthlab {

namespace cli {

using json = nlohmann::ordered_json;

struct ScriptError : std::runtime_error {
  int line = 0, col = 0;
  ScriptError(int l, int c, const std::string& m)
      : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                           m),
        line(l),
        col(c) {}
};

struct Options {
  int window = 6;
  unsigned long seed = 0;
  std::string field = "Fpt:32003";  // base field for registry examples
  std::string format = "json";      // json | text
  double timeout = 0;               // seconds; 0 disables the check
};

// --- AST --------------------------------------------------------------------

struct Stmt {
  enum class Kind { Field, Ring, Module, Command };
  Kind kind = Kind::Command;
  std::string name;   // declared name, or the command verb
  std::string spec;   // field spec / module kind / ring's field name
  std::string example;
  std::vector<std::string> vars;
  std::vector<int> degs;
  std::vector<std::string> ideal;  // ring ideal or cyclic generators
  std::vector<int> shifts;
  std::vector<std::vector<std::string>> matrix;
  std::string ring;  // module's underlying ring
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> kv;
  bool operator==(const Stmt&) const = default;
};

struct SessionScript {
  std::vector<Stmt> stmts;
  bool operator==(const SessionScript&) const = default;
};

// --- parser -----------------------------------------------------------------

class ScriptParser {
 public:
  explicit ScriptParser(std::string text) : s_(std::move(text)) {}

  SessionScript parse() {
    SessionScript out;
    for (;;) {
      skipWs();
      if (pos_ >= s_.size()) break;
      out.stmts.push_back(statement());
    }
    return out;
  }

 private:
  std::string s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  [[noreturn]] void fail(const std::string& m) const { throw ScriptError(line_, col_, m); }

  void advance() {
    if (pos_ < s_.size()) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skipWs() {
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
      if (peek() == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') advance();
        continue;
      }
      break;
    }
  }
  void expect(char c) {
    skipWs();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  bool accept(char c) {
    skipWs();
    if (peek() != c) return false;
    advance();
    return true;
  }
  bool isIdentChar(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }
  std::string ident() {
    skipWs();
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected identifier");
    std::string out;
    while (pos_ < s_.size() && isIdentChar(s_[pos_])) {
      out += s_[pos_];
      advance();
    }
    return out;
  }
  // an identifier optionally followed by ":<digits>" (field specs like Fp:32003)
  std::string fieldSpec() {
    std::string out = ident();
    if (peek() == ':') {
      out += ':';
      advance();
      out += std::to_string(integer());
    }
    return out;
  }

  long integer() {
    skipWs();
    bool neg = accept('-');
    skipWs();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      advance();
    }
    return neg ? -v : v;
  }

  // raw text up to an unnested occurrence of one of `stops`; tracks () [] depth
  std::string rawUntil(const std::string& stops) {
    skipWs();
    std::string out;
    int depth = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (depth == 0 && stops.find(c) != std::string::npos) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) break;
        --depth;
      }
      out += c;
      advance();
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) fail("expected expression");
    return out;
  }

  std::vector<std::string> polyList(char close) {
    std::vector<std::string> out;
    if (accept(close)) return out;
    out.push_back(rawUntil(std::string(",") + close));
    while (accept(',')) out.push_back(rawUntil(std::string(",") + close));
    expect(close);
    return out;
  }

  std::vector<int> intList() {  // after '('
    std::vector<int> out;
    if (accept(')')) return out;
    out.push_back(int(integer()));
    while (accept(',')) out.push_back(int(integer()));
    expect(')');
    return out;
  }

  Stmt statement() {
    skipWs();
    std::string head = ident();
    Stmt st;
    if (head == "field") {
      st.kind = Stmt::Kind::Field;
      st.name = ident();
      st.spec = accept('=') ? fieldSpec() : st.name;
      expect(';');
      return st;
    }
    if (head == "ring") {
      st.kind = Stmt::Kind::Ring;
      st.name = ident();
      expect('=');
      std::string f = fieldSpec();
      if (f == "example") {
        st.example = ident();
        expect(';');
        return st;
      }
      st.spec = f;
      expect('[');
      for (;;) {
        st.vars.push_back(ident());
        st.degs.push_back(accept(':') ? int(integer()) : 1);
        if (!accept(',')) break;
      }
      expect(']');
      if (accept('/')) {
        expect('(');
        st.ideal = polyList(')');
      }
      expect(';');
      return st;
    }
    if (head == "module") {
      st.kind = Stmt::Kind::Module;
      st.name = ident();
      expect('=');
      st.spec = ident();  // coker | free | residue | cyclic
      st.ring = ident();
      if (st.spec == "coker") {
        if (accept('(')) st.shifts = intList();
        expect('[');
        for (;;) {
          expect('[');
          st.matrix.push_back(polyList(']'));
          if (!accept(',')) break;
        }
        expect(']');
      } else if (st.spec == "free") {
        if (accept('(')) st.shifts = intList();
      } else if (st.spec == "cyclic") {
        expect('(');
        st.ideal = polyList(')');
      } else if (st.spec != "residue") {
        fail("unknown module constructor '" + st.spec + "'");
      }
      expect(';');
      return st;
    }
    // command
    st.kind = Stmt::Kind::Command;
    st.name = head;
    for (;;) {
      skipWs();
      if (peek() == ';') {
        advance();
        break;
      }
      if (pos_ >= s_.size()) fail("unterminated command (missing ';')");
      std::string word = ident();
      if (accept('=')) {
        skipWs();
        std::string value;
        if (peek() == '(') {
          advance();
          value = rawUntil(")");
          expect(')');
        } else {
          value = rawUntil(" \t\n;");
        }
        st.kv.emplace_back(word, value);
      } else {
        st.args.push_back(word);
      }
    }
    return st;
  }
};

inline SessionScript parseScript(const std::string& text) { return ScriptParser(text).parse(); }

// --- printer (canonical form; print-parse round-trips to an equal AST) -------

inline std::string printStmt(const Stmt& st) {
  auto joined = [](const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  };
  std::string out;
  switch (st.kind) {
    case Stmt::Kind::Field: out = "field " + st.name + " = " + st.spec; break;
    case Stmt::Kind::Ring: {
      if (!st.example.empty()) {
        out = "ring " + st.name + " = example " + st.example;
        break;
      }
      out = "ring " + st.name + " = " + st.spec + "[";
      for (size_t i = 0; i < st.vars.size(); ++i) {
        if (i) out += ", ";
        out += st.vars[i];
        if (st.degs[i] != 1) out += ":" + std::to_string(st.degs[i]);
      }
      out += "]";
      if (!st.ideal.empty()) out += "/(" + joined(st.ideal) + ")";
      break;
    }
    case Stmt::Kind::Module: {
      out = "module " + st.name + " = " + st.spec + " " + st.ring;
      if (!st.shifts.empty()) {
        out += "(";
        for (size_t i = 0; i < st.shifts.size(); ++i)
          out += (i ? ", " : "") + std::to_string(st.shifts[i]);
        out += ")";
      }
      if (st.spec == "coker") {
        out += " [";
        for (size_t r = 0; r < st.matrix.size(); ++r)
          out += (r ? ", [" : "[") + joined(st.matrix[r]) + "]";
        out += "]";
      }
      if (st.spec == "cyclic") out += " (" + joined(st.ideal) + ")";
      break;
    }
    case Stmt::Kind::Command: {
      out = st.name;
      for (const auto& a : st.args) out += " " + a;
      for (const auto& [k, v] : st.kv) out += " " + k + "=(" + v + ")";
      break;
    }
  }
  return out + ";";
}

inline std::string printScript(const SessionScript& sc) {
  std::string out;
  for (const auto& st : sc.stmts) out += printStmt(st) + "\n";
  return out;
}

// --- fields and the example registry -----------------------------------------

inline Field parseFieldSpec(const std::string& spec, const std::string& indet = "t") {
  if (spec == "Q") return Field::Q();
  if (spec == "Qt") return Field::Qt(indet);
  if (spec.rfind("Fp:", 0) == 0) return Field::Fp(std::stol(spec.substr(3)));
  if (spec.rfind("Fpt:", 0) == 0) return Field::Fpt(std::stol(spec.substr(4)), indet);
  throw std::invalid_argument("unknown field spec '" + spec +
                              "' (expected Q, Qt, Fp:P, or Fpt:P)");
}

inline std::string showFieldSpec(const Field& f) {
  switch (f.kind) {
    case FieldKind::Rational: return "Q";
    case FieldKind::Prime: return "Fp:" + std::to_string(f.p);
    case FieldKind::FunctionField:
      return f.p == 0 ? "Qt" : "Fpt:" + std::to_string(f.p);
  }
  return "?";
}

// The ring declaration behind each registry name. Coefficient parameters use
// the field indeterminate when one exists (spelled "a" to avoid clashing with
// ring variables), and the scalar 2 otherwise.
inline Stmt exampleDecl(const std::string& name, const Field& base) {
  bool hasIndet = base.kind == FieldKind::FunctionField;
  std::string al = hasIndet ? "a" : "2";
  Stmt st;
  st.kind = Stmt::Kind::Ring;
  st.name = "R";
  st.spec = showFieldSpec(base);
  auto setVars = [&](std::vector<std::string> vs, std::vector<int> ds = {}) {
    st.vars = std::move(vs);
    st.degs = ds.empty() ? std::vector<int>(st.vars.size(), 1) : std::move(ds);
  };
  auto js06Ideal = [&](const std::string& pre) {
    return std::vector<std::string>{pre + "v^2",          pre + "z^2",
                                    pre + "x*y",          pre + "v*x + " + al + "*x*z",
                                    pre + "v*y + y*z",    pre + "v*x + y^2",
                                    pre + "v*y - x^2"};
  };
  if (name == "i_alpha") {
    setVars({"x1", "x2", "x3", "x4", "x5"});
    st.ideal = {al + "*x1*x3 + x2*x3",
                "x1*x4 + x2*x4",
                "x3^2 + " + al + "*x1*x5 - x2*x5",
                "x4^2 + x1*x5 - x2*x5",
                "x1^2",
                "x2^2",
                "x3*x4",
                "x3*x5",
                "x4*x5",
                "x5^2"};
  } else if (name == "js06") {
    setVars({"v", "x", "y", "z"});
    st.ideal = js06Ideal("");
  } else if (name == "fiber_q") {
    setVars({"t", "v", "x", "y", "z", "s", "w"});
    st.ideal = js06Ideal("");
    for (const auto& v : {"t", "v", "x", "y", "z"}) st.ideal.push_back(std::string(v) + "*s");
  } else if (name == "hypersurface_xy") {
    setVars({"x", "y"});
    st.ideal = {"x*y"};
  } else if (name == "dual_numbers") {
    setVars({"x"});
    st.ideal = {"x^2"};
  } else if (name.rfind("regular_", 0) == 0) {
    int n = std::stoi(name.substr(8));
    if (n < 1 || n > 6) throw std::invalid_argument("regular_n supports n in 1..6");
    std::vector<std::string> vs;
    for (int i = 1; i <= n; ++i) vs.push_back("x" + std::to_string(i));
    setVars(vs);
  } else if (name == "semigroup_345") {
    setVars({"x", "y", "z"}, {3, 4, 5});
    st.ideal = {"y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"};
  } else {
    throw std::invalid_argument("unknown example ring '" + name + "'");
  }
  return st;
}

inline RingPtr buildRing(const Stmt& st, const Field& f) {
  return rg::makeRing(f, st.vars, st.degs, st.ideal);
}

inline RingPtr exampleRing(const std::string& name, const Field& base) {
  Stmt decl = exampleDecl(name, base);
  return buildRing(decl, base);
}

// --- session state and command dispatch --------------------------------------

struct Session {
  Options opt;
  Field exampleField = Field::Fpt(32003, "a");
  std::map<std::string, Field> fields;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, PresentedModule> modules;
  std::vector<json> reports;
  bool anyFail = false;
};

namespace detail {

inline json depthValue(int d) {
  if (d >= kDepthInf / 2) return "inf";
  if (d <= kDepthNegInf / 2) return "-inf";
  return d;
}

inline std::string verdictString(inv::Verdict v) {
  switch (v) {
    case inv::Verdict::Holds: return "holds";
    case inv::Verdict::Fails: return "fails";
    case inv::Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline std::string certString(inv::Cert c) {
  return c == inv::Cert::ExactFinitePd ? "exact" : "window";
}

inline json vanishingJson(const inv::VanishingReport& vr) {
  json j;
  j["nonzero"] = vr.nonzero;
  j["max_nonzero"] = vr.max_nonzero;
  j["tail_vanishes"] = vr.tail_vanishes;
  j["degree0_nonzero"] = vr.tor0_nonzero;
  if (vr.pd) j["pd"] = *vr.pd;
  return j;
}

inline json pairJson(const inv::PairCheckReport& rep) {
  json j;
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["depth_M"] = rep.depthM;
  j["depth_N"] = rep.depthN;
  j["depth_T"] = depthValue(rep.depthT);
  j["codepth_M"] = rep.codepthM;
  j["codepth_N"] = rep.codepthN;
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  return j;
}

}  // namespace detail

class CommandRunner {
 public:
  explicit CommandRunner(Session& s) : s_(s) {}

  json run(const Stmt& st) {
    json rep;
    rep["schema"] = "depthlab/1";
    rep["command"] = st.name;
    json inputs;
    inputs["args"] = st.args;
    for (const auto& [k, v] : st.kv)
      if (k != "window" && k != "seed") inputs[k] = v;
    rep["inputs"] = inputs;
    int w = intArg(st, "window", s_.opt.window);
    rep["window"] = w;
    rep["certification"] = "exact";
    rep["values"] = json::object();
    rep["verdict"] = "none";
    dispatch(st, w, rep);
    if (rep["verdict"] == "fails") s_.anyFail = true;
    return rep;
  }

 private:
  Session& s_;

  [[noreturn]] void userError(const std::string& m) const { throw std::invalid_argument(m); }

  const PresentedModule& module(const std::string& name) const {
    auto it = s_.modules.find(name);
    if (it == s_.modules.end()) userError("unknown module '" + name + "'");
    return it->second;
  }
  const RingPtr& ring(const std::string& name) const {
    auto it = s_.rings.find(name);
    if (it == s_.rings.end()) userError("unknown ring '" + name + "'");
    return it->second;
  }
  static int intArg(const Stmt& st, const std::string& key, int dflt) {
    for (const auto& [k, v] : st.kv)
      if (k == key) return std::stoi(v);
    return dflt;
  }
  static std::string strArg(const Stmt& st, const std::string& key, const std::string& dflt) {
    for (const auto& [k, v] : st.kv)
      if (k == key) return v;
    return dflt;
  }
  const PresentedModule& positional(const Stmt& st, size_t i, const std::string& what) const {
    if (st.args.size() <= i) userError("command '" + st.name + "' needs " + what);
    return module(st.args[i]);
  }

  void dispatch(const Stmt& st, int w, json& rep) {
    const std::string& verb = st.name;
    json& values = rep["values"];
    if (verb == "resolve") {
      const auto& M = positional(st, 0, "a module argument");
      auto W = rg::minFreeResolution(M, w);
      values["betti"] = W.betti;
      values["finite"] = W.finite;
      if (W.finite) values["pd"] = std::max(W.pd, 0);
    } else if (verb == "tor" || verb == "ext") {
      const auto& M = positional(st, 0, "two module arguments");
      const auto& N = positional(st, 1, "two module arguments");
      int i = intArg(st, "i", 0);
      auto T = rg::minimalize(verb == "tor" ? rg::torModule(M, N, i) : rg::extModule(M, N, i));
      values["i"] = i;
      values["zero"] = rg::isZeroModule(T);
      values["gens"] = T.gens;
      values["shifts"] = T.shifts;
      auto m = rg::measure(T);
      values["depth"] = detail::depthValue(m.depth);
      values["dim"] = m.dim;
    } else if (verb == "measure") {
      const auto& M = positional(st, 0, "a module argument");
      auto m = rg::measure(M);
      values["zero"] = m.isZero;
      values["depth"] = detail::depthValue(m.depth);
      values["dim"] = m.dim;
      values["codepth"] = m.codepth;
      values["cm"] = m.isCM;
      values["mcm"] = m.isMCM;
    } else if (verb == "depth") {
      const auto& M = positional(st, 0, "two module arguments");
      const auto& N = positional(st, 1, "two module arguments");
      auto D = cx::derivedTensor(M, N, w);
      auto dr = cx::depthDerivedTensor(D);
      values["depth"] = detail::depthValue(dr.depth);
      values["homology_sup"] = dr.zeroComplex ? json("-inf") : json(dr.homologySup);
      values["zero_complex"] = dr.zeroComplex;
      rep["certification"] = dr.certified ? "exact" : "window";
    } else if (verb == "qr" || verb == "br") {
      const auto& M = positional(st, 0, "two module arguments");
      const auto& N = positional(st, 1, "two module arguments");
      auto vr = verb == "qr" ? inv::qWindow(M, N, w) : inv::bWindow(M, N, w);
      values = detail::vanishingJson(vr);
      rep["certification"] = detail::certString(vr.certification);
    } else if (verb == "check") {
      runCheck(st, w, rep);
    } else if (verb == "crosscheck") {
      runCrosscheck(st, w, rep);
    } else if (verb == "survey") {
      runSurvey(st, w, rep);
    } else {
      userError("unknown command '" + verb + "'");
    }
  }

  void runCheck(const Stmt& st, int w, json& rep) {
    if (st.args.empty()) userError("check needs a mode");
    const std::string& mode = st.args[0];
    json& values = rep["values"];
    if (mode == "tr") {
      const auto& M = positional(st, 1, "a module argument");
      auto r = inv::totallyReflexive(M, w);
      values["biduality_iso"] = r.biduality_iso;
      values["ext_M_R"] = detail::vanishingJson(r.b_M);
      values["ext_Mdual_R"] = detail::vanishingJson(r.b_Md);
      bool certifiedFail = !r.biduality_iso || r.b_M.max_nonzero > 0 || r.b_Md.max_nonzero > 0;
      rep["verdict"] = certifiedFail ? "fails" : "holds";
      rep["certification"] =
          certifiedFail || (r.b_M.certification == inv::Cert::ExactFinitePd &&
                            r.b_Md.certification == inv::Cert::ExactFinitePd)
              ? "exact"
              : "window";
      return;
    }
    const auto& M = positional(st, 1, "two module arguments");
    const auto& N = positional(st, 2, "two module arguments");
    inv::PairCheckReport r;
    if (mode == "ldep" || mode == "rdep" || mode == "dep") {
      r = inv::checkDepthFormula(M, N, w, pairMode(mode));
    } else if (mode.rfind("derived-", 0) == 0) {
      r = inv::checkDerivedFormula(M, N, w, pairMode(mode.substr(8)));
    } else if (mode == "ubc") {
      r = inv::checkUbc(M, N, w);
    } else if (mode == "uac") {
      r = inv::checkUacBound(M, N, w);
    } else {
      userError("unknown check mode '" + mode + "'");
    }
    values = detail::pairJson(r);
    values["vanishing"] = detail::vanishingJson(r.vr);
    rep["verdict"] = detail::verdictString(r.verdict);
    rep["certification"] = detail::certString(r.vr.certification);
  }

  static inv::DepthMode pairMode(const std::string& m) {
    if (m == "ldep") return inv::DepthMode::Ldep;
    if (m == "rdep") return inv::DepthMode::Rdep;
    if (m == "dep") return inv::DepthMode::Dep;
    throw std::invalid_argument("unknown depth-formula mode '" + m + "'");
  }

  void runCrosscheck(const Stmt& st, int w, json& rep) {
    if (st.args.empty()) userError("crosscheck needs a statement name");
    static const std::map<std::string, inv::Statement> kinds = {
        {"negativeqr", inv::Statement::NegativeQr},
        {"koszul_cutdown", inv::Statement::KoszulCutdown},
        {"torcutdown", inv::Statement::TorCutdown},
        {"cutdownMCM", inv::Statement::CutdownMCM},
        {"exttorall", inv::Statement::ExtTorAll},
        {"replacesyz", inv::Statement::ReplaceSyz},
        {"mcmext", inv::Statement::McmExt},
        {"transposeextend", inv::Statement::TransposeExtend},
    };
    auto it = kinds.find(st.args[0]);
    if (it == kinds.end()) userError("unknown crosscheck statement '" + st.args[0] + "'");
    const auto& M = positional(st, 1, "a module argument");
    const PresentedModule& N = st.args.size() > 2 ? module(st.args[2]) : M;
    std::vector<PolyVector> xs;
    std::string xStr = strArg(st, "x", "");
    if (!xStr.empty()) xs.push_back(parse::poly(M.R->S, xStr));
    unsigned long seed = intArg(st, "seed", int(s_.opt.seed));
    auto res = inv::crosscheck(it->second, M, N, w, xs, seed);
    rep["verdict"] = detail::verdictString(res.verdict);
    if (!res.reason.empty()) rep["values"]["reason"] = res.reason;
  }

  // a deterministic pool of small modules over R for sampled surveys
  std::vector<PresentedModule> surveyPool(const RingPtr& R, std::mt19937_64& rng) const {
    const PolyRing& S = R->S;
    std::vector<PresentedModule> pool = {rg::ringAsModule(R), rg::residueField(R)};
    for (int i = 0; i < S.nvars(); ++i) {
      PresentedModule M = rg::makeModule(R, {0}, {rg::nfPoly(*R, pv::variable(S, i))});
      if (!rg::isZeroModule(M)) pool.push_back(std::move(M));
    }
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (int trial = 0; trial < 3; ++trial) {
      PolyVector f = pv::zero(1);
      for (int i = 0; i < S.nvars(); ++i) {
        long c = coeff(rng);
        if (c != 0) f = pv::add(S, f, pv::scale(pv::variable(S, i), fe::fromInt(S.field, c)));
      }
      f = rg::nfPoly(*R, f);
      if (f.isZero()) continue;
      PresentedModule M = rg::makeModule(R, {0}, {f});
      if (!rg::isZeroModule(M)) pool.push_back(std::move(M));
    }
    return pool;
  }

  void runSurvey(const Stmt& st, int w, json& rep) {
    if (st.args.size() < 2) userError("survey needs a mode and a ring");
    const std::string& mode = st.args[0];
    const RingPtr& R = ring(st.args[1]);
    int count = intArg(st, "count", 20);
    unsigned long seed = intArg(st, "seed", int(s_.opt.seed));
    std::mt19937_64 rng(seed);
    auto pool = surveyPool(R, rng);
    int holds = 0, fails = 0, inconclusive = 0;
    for (int i = 0; i < count; ++i) {
      const auto& M = pool[rng() % pool.size()];
      const auto& N = pool[rng() % pool.size()];
      inv::PairCheckReport r;
      if (mode == "ldep" || mode == "rdep" || mode == "dep")
        r = inv::checkDepthFormula(M, N, w, pairMode(mode));
      else if (mode.rfind("derived-", 0) == 0)
        r = inv::checkDerivedFormula(M, N, w, pairMode(mode.substr(8)));
      else if (mode == "ubc")
        r = inv::checkUbc(M, N, w);
      else if (mode == "uac")
        r = inv::checkUacBound(M, N, w);
      else
        userError("unknown survey mode '" + mode + "'");
      switch (r.verdict) {
        case inv::Verdict::Holds: ++holds; break;
        case inv::Verdict::Fails: ++fails; break;
        case inv::Verdict::Inconclusive: ++inconclusive; break;
      }
    }
    json& values = rep["values"];
    values["count"] = count;
    values["holds"] = holds;
    values["fails"] = fails;
    values["inconclusive"] = inconclusive;
    rep["verdict"] = fails > 0 ? "fails" : "holds";
    rep["certification"] = "window";
  }
};

// --- execution ---------------------------------------------------------------

inline void executeStmt(Session& s, const Stmt& st) {
  switch (st.kind) {
    case Stmt::Kind::Field: s.fields[st.name] = parseFieldSpec(st.spec); break;
    case Stmt::Kind::Ring: {
      if (!st.example.empty()) {
        s.rings[st.name] = exampleRing(st.example, s.exampleField);
        break;
      }
      Field f;
      if (auto it = s.fields.find(st.spec); it != s.fields.end())
        f = it->second;
      else
        f = parseFieldSpec(st.spec);  // allow inline specs like Fp:32003
      s.rings[st.name] = buildRing(st, f);
      break;
    }
    case Stmt::Kind::Module: {
      auto it = s.rings.find(st.ring);
      if (it == s.rings.end()) throw std::invalid_argument("unknown ring '" + st.ring + "'");
      const RingPtr& R = it->second;
      const PolyRing& S = R->S;
      if (st.spec == "residue") {
        s.modules[st.name] = rg::residueField(R);
      } else if (st.spec == "free") {
        s.modules[st.name] = rg::freeModule(R, st.shifts.empty() ? std::vector<int>{0}
                                                                 : st.shifts);
      } else if (st.spec == "cyclic") {
        s.modules[st.name] = rg::cyclicModule(R, st.ideal);
      } else {  // coker: rows are generators, columns are relations
        int g = int(st.matrix.size());
        size_t cols = 0;
        for (const auto& row : st.matrix) cols = std::max(cols, row.size());
        std::vector<int> shifts = st.shifts.empty() ? std::vector<int>(g, 0) : st.shifts;
        if (int(shifts.size()) != g)
          throw std::invalid_argument("shift count does not match the generator count");
        std::vector<PolyVector> rels;
        for (size_t j = 0; j < cols; ++j) {
          PolyVector col{std::max(g, 1), {}};
          for (int i = 0; i < g; ++i)
            if (j < st.matrix[i].size())
              col = pv::add(S, col,
                            pv::shiftComp(parse::poly(S, st.matrix[i][j]), i, std::max(g, 1)));
          rels.push_back(std::move(col));
        }
        s.modules[st.name] = rg::makeModule(R, shifts, std::move(rels));
      }
      break;
    }
    case Stmt::Kind::Command: {
      CommandRunner runner(s);
      s.reports.push_back(runner.run(st));
      break;
    }
  }
}

inline std::string emitReport(const json& rep, const std::string& format) {
  if (format == "json") return rep.dump() + "\n";
  // text: a small aligned block per report
  std::string out;
  out += "== " + rep["command"].get<std::string>() + " ==\n";
  auto flat = [&out](const std::string& key, const json& v, auto&& self) -> void {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it)
        self(key.empty() ? it.key() : key + "." + it.key(), it.value(), self);
    } else {
      out += "  " + key + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  };
  for (const auto& key : {"inputs", "window", "certification", "values", "verdict"})
    flat(key, rep[key], flat);
  return out;
}

// Parse and execute a script; reports go to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 a check/survey verdict failed, 2 user error,
// 3 internal assertion failure.
inline int runScriptText(const std::string& text, const Options& opt, std::ostream& out,
                         std::ostream& err) {
  Session s;
  s.opt = opt;
  auto start = std::chrono::steady_clock::now();
  try {
    s.exampleField = parseFieldSpec(opt.field, "a");
    SessionScript sc = parseScript(text);
    for (const auto& st : sc.stmts) {
      if (opt.timeout > 0) {
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (elapsed.count() > opt.timeout) throw std::invalid_argument("timeout exceeded");
      }
      executeStmt(s, st);
    }
  } catch (const ScriptError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  for (const auto& rep : s.reports) out << emitReport(rep, opt.format);
  return s.anyFail ? 1 : 0;
}

}  // namespace cli

}  // namespace depthlab
