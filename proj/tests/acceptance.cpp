// Acceptance gates: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "discfrac/glbinomial.hpp"
#include "discfrac/riemann.hpp"
#include "discfrac/specfun.hpp"
#include "discfrac/verify.hpp"

using namespace discfrac;

namespace {

using clock_type = std::chrono::steady_clock;
constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass;
  std::string detail;
};

// Runs registry checks and folds them into one outcome.
Outcome suite(const std::vector<std::string>& ids) {
  std::ostringstream detail;
  bool pass = true;
  double worst = 0.0;
  for (const auto& r : run_suite(ids, kSeed)) {
    worst = std::max(worst, r.max_rel_error);
    if (r.verdict != Verdict::pass) {
      pass = false;
      detail << r.id << " failed (" << r.max_rel_error << " > " << r.tolerance << ") ";
    }
  }
  detail << ids.size() << " checks, worst error " << worst;
  return {pass, detail.str()};
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string("\"") + DISCFRAC_CLI_PATH + "\" " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome equivalence() {
  const auto t0 = clock_type::now();
  Outcome o = suite({"thm2.5-1", "thm2.5-2", "thm2.5-3", "thm2.5-4"});
  const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  o.detail += ", " + std::to_string(secs) + " s";
  if (secs > 30.0) o.pass = false;
  return o;
}

Outcome special_functions() {
  Outcome o = suite({"lem1.1-i", "lem1.1-ii", "lem1.1-iii", "lem1.1-iv", "lem1.1-v", "lem1.1-vi",
                     "ou1", "ou2", "oper", "oper2", "oper3", "pole", "falling-product",
                     "rising-product", "kernel-forms", "gl-weights"});
  const double g1 = gamma_ratio(4.0, -1.0);
  const double g2 = gamma_ratio(-1.0, -4.0);
  if (g1 != 0.0 || g2 != -24.0) {
    o.pass = false;
    o.detail += "; pole conventions gave " + std::to_string(g1) + ", " + std::to_string(g2);
  }
  return o;
}

Outcome hand_anchors() {
  const Order half(0.5);
  const GridFunction ones(0.0, {1.0, 1.0, 1.0});
  const OperatorSpec nl{Family::nabla, Side::left, Kind::sum, Formulation::riemann, half, 0.0};
  const OperatorSpec dl{Family::delta, Side::left, Kind::sum, Formulation::riemann, half, 0.0};
  OperatorSpec nlb = nl;
  nlb.formulation = Formulation::binomial;
  OperatorSpec dlb = dl;
  dlb.formulation = Formulation::binomial;
  const double v[] = {riemann_sum(nl, ones).at(2.0), gl_apply(nlb, ones).at(2.0),
                      riemann_sum(dl, ones).at(1.5), gl_apply(dlb, ones).at(1.5)};
  bool pass = true;
  std::ostringstream d;
  d.precision(15);
  for (double x : v) {
    pass = pass && std::abs(x - 1.5) <= 1e-13;
    d << x << ' ';
  }
  return {pass, "values " + d.str()};
}

Outcome performance() {
  Outcome o = suite({"fastpath"});
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const std::size_t L = std::size_t{1} << 17;
  std::vector<double> v(L);
  for (auto& x : v) x = dist(rng);
  const GridFunction f(0.0, std::move(v));
  const OperatorSpec spec{Family::delta, Side::left, Kind::difference, Formulation::binomial,
                          Order(0.5), 0.0};
  const auto t0 = clock_type::now();
  const auto out = gl_apply_fast(spec, f);
  const double secs = std::chrono::duration<double>(clock_type::now() - t0).count();
  o.detail += ", L=2^17 in " + std::to_string(secs) + " s";
  if (secs >= 1.0 || out.size() != L - 1) o.pass = false;
  return o;
}

Outcome determinism() {
  int s1 = 0, s2 = 0;
  const std::string a = run_cli("verify --all --seed 42", s1);
  const std::string b = run_cli("verify --all --seed 42", s2);
  const bool pass = s1 == 0 && s2 == 0 && !a.empty() && a == b;
  return {pass, std::to_string(a.size()) + " bytes, exit statuses " + std::to_string(s1) + "/" +
                    std::to_string(s2)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"equivalence of Riemann and binomial forms", equivalence},
      {"integer-order reduction", [] { return suite({"intorder"}); }},
      {"dual identities", [] { return suite({"lem1.5-i", "lem1.5-ii", "lem1.6-i", "lem1.6-ii"}); }},
      {"Q-operator identities",
       [] { return suite({"eq21", "eq22", "eq23", "eq24", "gl-qconj", "qinv", "nabla-delta-q"}); }},
      {"initial value problems", [] { return suite({"ivp-15", "ivp-16", "ivp-s1", "ivp-s2"}); }},
      {"special functions", special_functions},
      {"alternative single-sum forms", [] { return suite({"alt-25", "alt-26", "alt-27", "alt-28"}); }},
      {"hand-computed anchors", hand_anchors},
      {"fast path agreement and throughput", performance},
      {"deterministic verify output", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first
              << " -- " << o.detail << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
