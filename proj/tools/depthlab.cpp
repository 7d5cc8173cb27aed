// Command-line entry point: reads a session script from a file, stdin, or an
// inline -e argument, runs it, and emits reports per the selected format.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "depthlab/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"depthlab: graded depth-formula and Tor/Ext vanishing toolkit"};

  std::string scriptPath;
  std::string inlineScript;
  depthlab::cli::Options opt;

  app.add_option("script", scriptPath, "session script file ('-' for stdin)");
  app.add_option("-e,--eval", inlineScript, "inline script text");
  app.add_option("--window", opt.window, "Tor/Ext window size")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for sampled surveys")->capture_default_str();
  app.add_option("--field", opt.field, "base field for example rings: Q, Fp:P, Fpt:P, Qt")
      ->capture_default_str();
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--timeout", opt.timeout, "wall-clock budget in seconds (0 = unlimited)")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (!inlineScript.empty()) {
    text = inlineScript;
  } else if (scriptPath.empty() || scriptPath == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(scriptPath);
    if (!in) {
      std::cerr << "error: cannot open script file '" << scriptPath << "'\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  return depthlab::cli::runScriptText(text, opt, std::cout, std::cerr);
}
