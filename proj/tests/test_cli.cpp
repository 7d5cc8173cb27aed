#include <doctest.h>

#include <fstream>
#include <sstream>

#include "depthlab/cli.hpp"

using namespace depthlab;
using cli::json;

namespace {

struct RunResult {
  int exit = 0;
  std::string out;
  std::string err;
  std::vector<json> reports;  // parsed JSON lines (json format only)
};

RunResult run(const std::string& script, cli::Options opt = {}) {
  RunResult r;
  std::ostringstream out, err;
  r.exit = cli::runScriptText(script, opt, out, err);
  r.out = out.str();
  r.err = err.str();
  if (opt.format == "json") {
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line))
      if (!line.empty()) r.reports.push_back(json::parse(line));
  }
  return r;
}

}  // namespace

TEST_CASE("minimal script parses to a three-statement AST") {
  auto sc = cli::parseScript("field Q; ring R = Q[x,y]/(x*y); module M = coker R [[x]];");
  REQUIRE(sc.stmts.size() == 3);
  CHECK(sc.stmts[0].kind == cli::Stmt::Kind::Field);
  CHECK(sc.stmts[0].name == "Q");
  CHECK(sc.stmts[1].kind == cli::Stmt::Kind::Ring);
  CHECK(sc.stmts[1].vars == std::vector<std::string>{"x", "y"});
  CHECK(sc.stmts[1].ideal == std::vector<std::string>{"x*y"});
  CHECK(sc.stmts[2].kind == cli::Stmt::Kind::Module);
  CHECK(sc.stmts[2].spec == "coker");
  REQUIRE(sc.stmts[2].matrix.size() == 1);
  CHECK(sc.stmts[2].matrix[0] == std::vector<std::string>{"x"});
}

TEST_CASE("malformed script reports a position") {
  try {
    cli::parseScript("ring R = Q[x,y/(x)");
    FAIL("expected a ScriptError");
  } catch (const cli::ScriptError& e) {
    CHECK(e.line == 1);
    CHECK(e.col > 1);
  }
}

TEST_CASE("parser round-trip: print then reparse gives an equal AST") {
  std::vector<std::string> fixtures = {
      "field Q; ring R = Q[x,y]/(x*y); module M = coker R [[x]];",
      "field F = Fp:32003; ring S = F[a, b:2, c:3]/(a^2*b - c, b^3); module N = free S(0, -1);",
      "ring R = example dual_numbers; module k = residue R; qr k k window=4; check tr k;",
      "ring R = Q[x]; module M = cyclic R (x^2, x^3); crosscheck koszul_cutdown M x=(x);",
      "ring R = Q[u, v]; module M = coker R(0, -1) [[u, v], [v^2, 0]]; survey dep R count=3;",
  };
  for (const auto& text : fixtures) {
    auto ast = cli::parseScript(text);
    auto printed = cli::printScript(ast);
    auto reparsed = cli::parseScript(printed);
    CHECK(reparsed == ast);
    CHECK(cli::printScript(reparsed) == printed);
  }
}

TEST_CASE("example registry invariants") {
  Field fpt = Field::Fpt(32003, "a");
  auto ia = cli::exampleRing("i_alpha", fpt);
  CHECK(ia->S.nvars() == 5);
  CHECK(ia->ideal.size() == 10);
  CHECK(ia->dim == 0);
  auto js = cli::exampleRing("js06", fpt);
  CHECK(js->S.nvars() == 4);
  CHECK(js->ideal.size() == 7);
  CHECK(js->dim == 0);
  auto hy = cli::exampleRing("hypersurface_xy", Field::Q());
  CHECK(hy->dim == 1);
  CHECK(hy->isCM);
  auto dn = cli::exampleRing("dual_numbers", Field::Q());
  CHECK(dn->dim == 0);
  CHECK(dn->isCM);
  auto fq = cli::exampleRing("fiber_q", fpt);
  CHECK(fq->S.nvars() == 7);
  CHECK(fq->dim == 2);
  CHECK(fq->isCM);
  auto sg = cli::exampleRing("semigroup_345", Field::Q());
  CHECK(sg->dim == 1);
  CHECK(sg->isCM);
  auto r3 = cli::exampleRing("regular_3", Field::Q());
  CHECK(r3->dim == 3);
  CHECK(r3->depth == 3);
  CHECK_THROWS_AS(cli::exampleRing("nope", Field::Q()), std::invalid_argument);
}

TEST_CASE("registry entries round-trip through the printer and rebuild identically") {
  for (const std::string name : {"i_alpha", "js06", "fiber_q", "hypersurface_xy",
                                 "dual_numbers", "regular_2", "semigroup_345"}) {
    Field base = name == "i_alpha" || name == "js06" || name == "fiber_q"
                     ? Field::Fpt(32003, "a")
                     : Field::Q();
    auto decl = cli::exampleDecl(name, base);
    cli::SessionScript sc;
    sc.stmts.push_back(decl);
    auto reparsed = cli::parseScript(cli::printScript(sc));
    REQUIRE(reparsed.stmts.size() == 1);
    CHECK(reparsed.stmts[0] == decl);
    auto direct = cli::exampleRing(name, base);
    auto rebuilt = cli::buildRing(reparsed.stmts[0], base);
    CHECK(rebuilt->dim == direct->dim);
    CHECK(rebuilt->depth == direct->depth);
    CHECK(rebuilt->isCM == direct->isCM);
    CHECK(rebuilt->gb.gens.size() == direct->gb.gens.size());
  }
}

TEST_CASE("measure on the dual-numbers residue field") {
  auto r = run("ring R = example dual_numbers; module k = residue R; measure k;");
  REQUIRE(r.exit == 0);
  REQUIRE(r.reports.size() == 1);
  const json& rep = r.reports[0];
  CHECK(rep["schema"] == "depthlab/1");
  CHECK(rep["command"] == "measure");
  CHECK(rep["values"]["depth"] == 0);
  CHECK(rep["values"]["dim"] == 0);
  CHECK(rep["verdict"] == "none");
}

TEST_CASE("qr over the hypersurface reports the even window pattern") {
  auto r = run("ring R = example hypersurface_xy; module Mx = cyclic R (x); "
               "module My = cyclic R (y); qr Mx My window=8;");
  REQUIRE(r.exit == 0);
  REQUIRE(r.reports.size() == 1);
  const json& rep = r.reports[0];
  CHECK(rep["window"] == 8);
  CHECK(rep["certification"] == "window");
  CHECK(rep["values"]["nonzero"] == json::array({2, 4, 6, 8}));
  CHECK(rep["values"]["tail_vanishes"] == false);
}

TEST_CASE("crosscheck negativeqr passes on an Artinian sample") {
  auto r = run("ring R = example dual_numbers; module k = residue R; "
               "crosscheck negativeqr k k window=6;");
  REQUIRE(r.exit == 0);
  REQUIRE(r.reports.size() == 1);
  CHECK(r.reports[0]["verdict"] == "holds");
}

TEST_CASE("shipped hypersurface fixture executes end-to-end") {
  std::ifstream in(std::string(FIXTURES_DIR) + "/hypersurface.dl");
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  auto r = run(buf.str());
  CHECK(r.exit == 0);
  REQUIRE(r.reports.size() == 7);
  CHECK(r.reports[1]["values"]["nonzero"] == json::array({2, 4, 6, 8}));
  CHECK(r.reports[2]["verdict"] == "holds");  // dep with codepth 1 = 1 + 0
  CHECK(r.reports[2]["values"]["lhs"] == 1);
  CHECK(r.reports[3]["verdict"] == "holds");
  CHECK(r.reports[5]["verdict"] == "holds");
  CHECK(r.reports[6]["verdict"] == "holds");
  // the parsed fixture round-trips through the printer
  auto ast = cli::parseScript(buf.str());
  CHECK(cli::parseScript(cli::printScript(ast)) == ast);
}

TEST_CASE("identical script, seed, and window give byte-identical output") {
  std::string script =
      "ring R = example hypersurface_xy; module k = residue R; "
      "survey ubc R count=8; qr k k; depth k k;";
  cli::Options opt;
  opt.seed = 5;
  auto a = run(script, opt);
  auto b = run(script, opt);
  CHECK(a.out == b.out);
  CHECK(a.exit == b.exit);
}

TEST_CASE("exit codes") {
  // 0: clean informational run
  CHECK(run("ring R = Q[x]; module M = free R; measure M;").exit == 0);
  // 1: a certified failing verdict (k over a regular ring is not totally reflexive)
  auto fail = run("ring R = Q[x,y]; module k = residue R; check tr k;");
  CHECK(fail.exit == 1);
  CHECK(fail.reports.back()["verdict"] == "fails");
  // 2: user errors — syntax, unknown names, bad field spec
  CHECK(run("ring R = Q[x,y/(x)").exit == 2);
  CHECK(run("measure Z;").exit == 2);
  CHECK(run("field F = F7; ring R = F[x]; measure R;").exit == 2);
  CHECK(run("ring R = example nope;").exit == 2);
  // inhomogeneous input is a user error
  CHECK(run("ring R = Q[x]; module M = cyclic R (x + 1); measure M;").exit == 2);
}

TEST_CASE("text format renders every report section") {
  cli::Options opt;
  opt.format = "text";
  auto r = run("ring R = example dual_numbers; module k = residue R; qr k k window=3;", opt);
  REQUIRE(r.exit == 0);
  CHECK(r.out.find("== qr ==") != std::string::npos);
  CHECK(r.out.find("window: 3") != std::string::npos);
  CHECK(r.out.find("certification: window") != std::string::npos);
  CHECK(r.out.find("values.nonzero: [1,2,3]") != std::string::npos);
  CHECK(r.out.find("verdict: none") != std::string::npos);
}

TEST_CASE("field flag controls the example base field") {
  cli::Options opt;
  opt.field = "Q";
  auto r = run("ring R = example i_alpha; measure kk;", opt);
  CHECK(r.exit == 2);  // unknown module, but the ring itself must construct over Q
  auto ok = run("ring R = example i_alpha; module k = residue R; measure k;", opt);
  CHECK(ok.exit == 0);
  CHECK(ok.reports[0]["values"]["dim"] == 0);
}

TEST_CASE("coker modules honor explicit shifts and reject mismatches") {
  auto ok = run("ring R = Q[x,y]; module M = coker R(0, 1) [[x^2, y^2], [x, y]]; measure M;");
  CHECK(ok.exit == 0);
  auto bad = run("ring R = Q[x,y]; module M = coker R(0) [[x], [y]]; measure M;");
  CHECK(bad.exit == 2);
}
