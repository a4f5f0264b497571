// a1hilb verify | enumerate | chart | fan
#include <iostream>

#include "CLI11.hpp"
#include "a1hilb/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Hilbert schemes and crepant resolutions for A1(n) quotients"};
  app.require_subcommand(1);
  a1hilb::RunConfig cfg;

  auto* verify = app.add_subcommand("verify", "check every chart, decomposition and presentation");
  auto* enumerate = app.add_subcommand("enumerate", "unimodular triangulations of the core and their flop graph");
  auto* chart = app.add_subcommand("chart", "ideal, basis and staircase of one chart at a point");
  auto* fan = app.add_subcommand("fan", "write a named decomposition as a fan file");

  for (auto* sub : {verify, enumerate, chart, fan}) {
    sub->add_option("--n", cfg.n, "dimension")->required();
    sub->add_option("--out", cfg.out, "output file");
  }
  for (auto* sub : {verify, chart}) sub->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "generic points per chart")->capture_default_str();
  enumerate->add_option("--filter", cfg.filter, "all | dominated")->capture_default_str();
  chart->add_option("--chart", cfg.chart, "chart name, e.g. Delta_1")->required();
  chart->add_option("--point", cfg.point, "comma-separated coordinates p/q");
  fan->add_option("--name", cfg.name, "xi | xi-star | xi-1 | xi-2 | xi-3 | xi-prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : a1hilb::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    return a1hilb::run(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return a1hilb::kExitFail;
  }
}
