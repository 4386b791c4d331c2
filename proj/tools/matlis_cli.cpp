#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matlis/dsl.hpp"

namespace {

matlis::FieldSpec parse_field_flag(const std::string& s) {
  if (s == "q") return matlis::FieldSpec::rationals();
  if (s.rfind("p:", 0) == 0) return matlis::FieldSpec::prime_field(std::stol(s.substr(2)));
  throw CLI::ValidationError("--field expects q or p:<prime>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matlis: exact Ext/Tor and Matlis duality for graded modules"};

  std::string script_path;
  std::string eval_text;
  std::string field_flag;
  std::string output_path;
  bool table = false;
  bool json = false;
  matlis::RunOptions opt;

  app.add_option("script", script_path, "script file to run ('-' for stdin)");
  app.add_option("-e,--eval", eval_text, "inline script text");
  app.add_option("--field", field_flag, "coefficient field: q or p:<prime>");
  app.add_option("--seed", opt.seed, "seed for the theorem suite");
  app.add_option("--cases", opt.cases, "number of suite cases");
  app.add_option("--s-max", opt.s_max, "stage window for limit computations");
  app.add_option("--i-max", opt.i_max, "homological window");
  app.add_flag("--json", json, "JSON-lines output (default)");
  app.add_flag("--table", table, "aligned table output for reports");
  app.add_option("-o,--output", output_path, "write output to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("MATLIS_DEFAULT_FIELD")) {
    try {
      opt.default_field = parse_field_flag(env);
    } catch (...) {
      std::cerr << "invalid MATLIS_DEFAULT_FIELD: " << env << "\n";
      return 2;
    }
  }
  if (!field_flag.empty()) {
    try {
      opt.default_field = parse_field_flag(field_flag);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
  }
  opt.json = !table;

  std::string script;
  if (!eval_text.empty()) {
    script = eval_text;
  } else if (script_path.empty() || script_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    script = ss.str();
  } else {
    std::ifstream in(script_path);
    if (!in) {
      std::cerr << "cannot open script: " << script_path << "\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    script = ss.str();
  }

  matlis::RunResult result = matlis::run_script(script, opt);
  if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "cannot open output: " << output_path << "\n";
      return 2;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  return result.exit_code;
}
