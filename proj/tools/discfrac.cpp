#include <CLI11.hpp>

#include <iostream>

#include "discfrac/cli.hpp"

namespace {

void add_operator_flags(CLI::App& cmd, discfrac::cli::RunConfig& c) {
  cmd.add_option("--family", c.family, "delta | nabla")->capture_default_str();
  cmd.add_option("--side", c.side, "left | right")->capture_default_str();
  cmd.add_option("--kind", c.kind, "sum | difference")->capture_default_str();
  cmd.add_option("--formulation", c.formulation, "riemann | binomial")->capture_default_str();
  cmd.add_option("--alpha", c.alpha, "operator order, > 0");
  cmd.add_option("--a", c.a, "left anchor");
  cmd.add_option("--b", c.b, "right anchor");
}

}  // namespace

int main(int argc, char** argv) {
  using discfrac::cli::RunConfig;
  RunConfig c;
  CLI::App app{"Discrete fractional sums and differences (Riemann and binomial forms)"};
  app.require_subcommand(1);

  auto* apply = app.add_subcommand("apply", "apply an operator to a sequence file");
  add_operator_flags(*apply, c);
  apply->add_option("--input,-i", c.input, "input CSV (t,value | value) or JSON {origin, values}")
      ->required();
  apply->add_option("--output,-o", c.output, "output file (default: standard output)");
  apply->add_option("--format", c.format, "csv | json");
  apply->add_flag("--direct", c.direct, "binomial: use direct summation");

  auto* weights = app.add_subcommand("weights", "emit Gruenwald-Letnikov weights");
  weights->add_option("--alpha", c.alpha, "order, > 0")->required();
  weights->add_option("--K", c.K, "last index")->required();
  weights->add_option("--mode", c.mode, "difference | sum")->capture_default_str();
  weights->add_option("--output,-o", c.output, "output file");

  auto* verify = app.add_subcommand("verify", "run identity checks, JSON lines report");
  bool all = false;
  verify->add_flag("--all", all, "run every registered check (default)");
  verify->add_option("--ids", c.ids, "check ids")->delimiter(',');
  verify->add_option("--seed", c.seed, "random seed")->capture_default_str();
  verify->add_option("--output,-o", c.output, "report file");

  auto* bench = app.add_subcommand("bench", "time direct vs fast binomial evaluation (TSV)");
  add_operator_flags(*bench, c);
  bench->add_option("--sizes", c.sizes, "sequence lengths")->delimiter(',');
  bench->add_option("--seed", c.seed, "random seed")->capture_default_str();
  bench->add_option("--output,-o", c.output, "TSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : discfrac::cli::kUsage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "verify" && all) c.ids.clear();
  return discfrac::cli::run(c, std::cout, std::cerr);
}
