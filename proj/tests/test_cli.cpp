#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "discfrac/cli.hpp"
#include "discfrac/io.hpp"

using namespace discfrac;
namespace fs = std::filesystem;

namespace {

struct Captured {
  int status;
  std::string out;
  std::string err;
};

Captured run(const cli::RunConfig& c) {
  std::ostringstream out, err;
  const int status = cli::run(c, out, err);
  return {status, out.str(), err.str()};
}

cli::RunConfig apply_config(const std::string& input, const std::string& output) {
  cli::RunConfig c;
  c.subcommand = "apply";
  c.input = input;
  c.output = output;
  return c;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "discfrac_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string read_text(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int shell_status(const std::string& args) {
  const std::string cmd = std::string("\"") + DISCFRAC_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_CASE("apply: nabla-left sum of ones") {
  const auto in = scratch("ones.csv");
  const auto out = scratch("ones_out.csv");
  write_text(in, "value\n1\n1\n1\n");
  auto c = apply_config(in.string(), out.string());
  c.family = "nabla";
  c.kind = "sum";
  c.alpha = 0.5;
  c.a = 0.0;
  const auto r = run(c);
  CHECK(r.status == cli::kOk);
  CHECK(r.out == "origin=0 length=3\n");
  const auto g = read_grid_file(out.string()).resolve();
  CHECK(g.at(2.0) == 1.5);
}

TEST_CASE("apply: first difference of squares") {
  const auto in = scratch("sq.csv");
  const auto out = scratch("sq_out.csv");
  write_text(in, "t,value\n0,0\n1,1\n2,4\n3,9\n4,16\n");
  auto c = apply_config(in.string(), out.string());
  c.alpha = 2.0;
  const auto r = run(c);
  REQUIRE(r.status == cli::kOk);
  const auto g = read_grid_file(out.string()).resolve();
  CHECK(g.size() == 3);
  for (double v : g.values()) CHECK(v == 2.0);
}

TEST_CASE("apply: riemann and binomial files agree") {
  const auto in = scratch("mixed.json");
  write_text(in, R"({"origin": -2, "values": [0.3, -0.7, 0.1, 0.9, -0.2, 0.5, 0.8, -0.4]})");
  for (const char* family : {"delta", "nabla"}) {
    for (const char* side : {"left", "right"}) {
      auto c = apply_config(in.string(), scratch("r.json").string());
      c.family = family;
      c.side = side;
      c.alpha = 1.35;
      REQUIRE(run(c).status == cli::kOk);
      c.formulation = "binomial";
      c.output = scratch("b.json").string();
      REQUIRE(run(c).status == cli::kOk);
      const auto r = read_grid_file(scratch("r.json").string()).resolve();
      const auto b = read_grid_file(scratch("b.json").string()).resolve();
      REQUIRE(r.size() == b.size());
      CHECK(r.origin() == b.origin());
      for (std::size_t j = 0; j < r.size(); ++j) CHECK(r[j] == doctest::Approx(b[j]).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("apply: error statuses") {
  const auto in = scratch("short.csv");
  write_text(in, "value\n1\n2\n");
  auto c = apply_config(in.string(), scratch("short_out.csv").string());
  c.alpha = 2.5;
  c.a = 0.0;
  CHECK(run(c).status == cli::kDomain);  // too few samples

  c.alpha = -1.0;
  CHECK(run(c).status == cli::kDomain);  // invalid order

  c.alpha = 0.5;
  c.family = "gamma";
  CHECK(run(c).status == cli::kUsage);

  const auto bad = scratch("bad.csv");
  write_text(bad, "value\nx\n");
  auto d = apply_config(bad.string(), scratch("bad_out.csv").string());
  d.alpha = 0.5;
  d.a = 0.0;
  CHECK(run(d).status == cli::kUsage);

  auto e = apply_config(in.string(), scratch("nofile.csv").string());
  e.alpha = 0.5;  // no anchor and no origin column
  CHECK(run(e).status == cli::kUsage);

  auto m = apply_config(scratch("sq.csv").string(), scratch("mis.csv").string());
  m.alpha = 0.5;
  m.a = 0.5;  // origin column 0 disagrees with the anchor
  CHECK(run(m).status == cli::kDomain);
}

TEST_CASE("weights") {
  cli::RunConfig c;
  c.subcommand = "weights";
  c.alpha = 0.5;
  c.K = 3;
  CHECK(run(c).out == "k,w\n0,1\n1,-0.5\n2,-0.125\n3,-0.0625\n");
  c.mode = "sum";
  CHECK(run(c).out == "k,w\n0,1\n1,0.5\n2,0.375\n3,0.3125\n");
  c.mode = "difference";
  c.alpha = 1.0;
  CHECK(run(c).out == "k,w\n0,1\n1,-1\n2,0\n3,0\n");
  c.alpha = 0.0;
  CHECK(run(c).status == cli::kDomain);
  c.alpha = 0.5;
  c.mode = "both";
  CHECK(run(c).status == cli::kUsage);
}

TEST_CASE("verify") {
  cli::RunConfig c;
  c.subcommand = "verify";
  c.ids = {"thm2.5-1"};
  const auto r = run(c);
  CHECK(r.status == cli::kOk);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
  c.ids = {"nosuch"};
  const auto u = run(c);
  CHECK(u.status == cli::kUsage);
  CHECK(u.err.find("unknown id") != std::string::npos);
}

TEST_CASE("bench") {
  cli::RunConfig c;
  c.subcommand = "bench";
  c.sizes = {16, 300};
  const auto r = run(c);
  CHECK(r.status == cli::kOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "size\tdirect_ns\tfast_ns\tmax_rel_err");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == 2);
}

TEST_CASE("executable exit statuses") {
  CHECK(shell_status("--help") == 0);
  CHECK(shell_status("") == 2);
  CHECK(shell_status("frobnicate") == 2);
  CHECK(shell_status("verify --ids nosuch") == 2);
  CHECK(shell_status("weights --alpha 0.5") == 2);
  CHECK(shell_status("weights --alpha 0 --K 3") == 3);
  CHECK(shell_status("verify --ids pole,qinv --seed 3") == 0);
}
