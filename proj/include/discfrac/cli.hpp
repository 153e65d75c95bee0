#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace discfrac::cli {

/// Exit statuses of the command-line tool.
enum Status : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,   ///< usage or parse error
  kDomain = 3,  ///< domain / operator-spec error
};

struct RunConfig {
  std::string subcommand;

  // operator spec
  std::string family = "delta";
  std::string side = "left";
  std::string kind = "difference";
  std::string formulation = "riemann";
  std::optional<double> alpha;
  std::optional<double> a;
  std::optional<double> b;
  bool direct = false;  ///< binomial: force O(L^2) summation

  // files
  std::string input;
  std::string output;
  std::string format;  ///< csv | json; empty picks from the output extension

  // weights
  std::size_t K = 0;
  std::string mode = "difference";

  // verify
  std::vector<std::string> ids;
  std::uint64_t seed = 42;

  // bench
  std::vector<std::size_t> sizes;
};

int cmd_apply(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_weights(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.subcommand.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace discfrac::cli
