#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "satogr/cli.hpp"

int main(int argc, char** argv) {
  satogr::cli::JobConfig c;
  CLI::App app{"Exact checks on Sato Grassmannian points, tau functions and curve data"};
  app.require_subcommand(1);
  std::string out;
  int window = 0, triple_maxsize = 0;

  for (const char* name : {"check", "tau", "baker", "bilinear", "hierarchy", "orbit", "pfaffian", "family-square"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("input", c.input, "input JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--window", window, "window radius")->check(CLI::PositiveNumber);
    sub->add_option("--weight", c.weight, "tau weight W")->check(CLI::NonNegativeNumber);
    sub->add_option("--maxsize", c.maxsize, "largest diagram size")->check(CLI::NonNegativeNumber);
    sub->add_option("--triple-maxsize", triple_maxsize, "largest diagram size for triple constraints")->check(CLI::NonNegativeNumber);
    sub->add_option("--nmax", c.nmax, "orbit profile length")->check(CLI::PositiveNumber);
    sub->add_flag("--odd", c.odd, "odd flows only");
    sub->add_flag("--strict", c.strict, "fail on unsound skips");
    sub->add_flag("--bar", c.bar, "treat tau-bar failures as errors");
    sub->add_option("--gr0", c.gr0_mode, "GR0 variant")->check(CLI::IsMember({"reflected", "printed"}));
    sub->add_option("--triple", c.triple_mode, "triple variant")->check(CLI::IsMember({"printed", "swapped"}));
    sub->add_option("--out", out, "report path (default stdout)");
  }
  CLI11_PARSE(app, argc, argv);
  for (auto* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    if (sub->count("--window")) c.window = window;
    if (sub->count("--triple-maxsize")) c.triple_maxsize = triple_maxsize;
  }

  auto res = satogr::cli::run_file(c);
  std::string text = res.report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return res.exit_code;
}
