// wsg: command-line front end for the semigroup library.
//
//   wsg validate FILE
//   wsg analyze FILE [--window ...]
//   wsg maximals FILE [--corner] [--window ...]
//   wsg poincare FILE --form direct|closed|corner|paper
//   wsg expand FILE [--form ...] --window LO HI [LO2 HI2]
//   wsg verify FILE --check ID|all [--window ...]
//
// FILE may be "-" for standard input. --json is accepted anywhere.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsg/cli.hpp"

namespace {

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weierstrass semigroups at one and two points: series, maximal points, verification"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  wsg::cli::Command cmd;
  std::string path;
  app.add_flag("--json", cmd.json, "Emit JSON instead of text");

  auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", path, "Input JSON file, or - for stdin")->required(); };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--window", cmd.window, "LO HI for one variable, or M1LO M1HI M2LO M2HI")
        ->expected(2, 4)
        ->allow_extra_args();
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate a semigroup description");
  add_file(validate);

  auto* analyze = app.add_subcommand("analyze", "Summarize invariants, series and symmetry");
  add_file(analyze);
  add_window(analyze);

  auto* maximals = app.add_subcommand("maximals", "List maximal points of a two-point semigroup");
  add_file(maximals);
  add_window(maximals);
  maximals->add_flag("--corner", cmd.corner, "Only the maximal points of the fundamental corner");

  auto* poincare = app.add_subcommand("poincare", "Print the Poincare series as a rational function");
  add_file(poincare);
  poincare->add_option("--form", cmd.form, "direct|closed|corner|paper")
      ->check(CLI::IsMember({"direct", "closed", "corner", "paper"}));

  auto* expand = app.add_subcommand("expand", "Expand the Poincare series on a window");
  add_file(expand);
  add_window(expand);
  expand->add_option("--form", cmd.form, "direct|closed|corner|paper")
      ->check(CLI::IsMember({"direct", "closed", "corner", "paper"}));

  auto* verify = app.add_subcommand("verify", "Run verification checks and list every witness");
  add_file(verify);
  add_window(verify);
  verify->add_option("--check", cmd.check,
                     "closure|c_prop|c_identity|corner_translates|lemma4|d_agreement|symmetry|funceq|oracle|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wsg::cli::kInvalid;
  }

  const auto* chosen = app.get_subcommands().front();
  cmd.verb = *wsg::cli::parse_verb(chosen->get_name());

  if (!read_input(path, cmd.input)) {
    std::cerr << "error: cannot read " << path << "\n";
    return wsg::cli::kInvalid;
  }

  const auto result = wsg::cli::run(cmd);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
