#include <doctest.h>

#include <cmath>
#include <limits>
#include <set>

#include "discfrac/error.hpp"
#include "discfrac/riemann.hpp"
#include "discfrac/verify.hpp"

using namespace discfrac;

TEST_CASE("registry covers every identity family") {
  std::set<std::string> ids;
  for (const auto& c : registry()) {
    CHECK(ids.insert(c.id).second);  // unique
    CHECK(c.tolerance > 0.0);
    CHECK(c.trials > 0);
    CHECK_FALSE(c.description.empty());
    CHECK_FALSE(c.generator.empty());
  }
  for (const char* id :
       {"thm2.5-1", "thm2.5-2", "thm2.5-3", "thm2.5-4", "lem1.5-i", "lem1.5-ii", "lem1.6-i",
        "lem1.6-ii", "eq21", "eq22", "eq23", "eq24", "ivp-15", "ivp-16", "ivp-s1", "ivp-s2",
        "cauchy-delta-left", "cauchy-delta-right", "lem1.1-i", "lem1.1-ii", "lem1.1-iii",
        "lem1.1-iv", "lem1.1-v", "lem1.1-vi", "ou1", "ou2", "oper", "oper2", "oper3", "alt-25",
        "alt-26", "alt-27", "alt-28", "qinv", "nabla-delta-q", "intorder", "fastpath"}) {
    CAPTURE(id);
    CHECK(ids.count(id) == 1);
  }
}

TEST_CASE("relative error") {
  CHECK(relative_error(1.0, 1.0) == 0.0);
  CHECK(relative_error(1e-20, 0.0) == doctest::Approx(1e-20));  // absolute near zero
  CHECK(relative_error(200.0, 100.0) == doctest::Approx(0.5));
  CHECK(relative_error(std::nan(""), 1.0) == std::numeric_limits<double>::infinity());
}

TEST_CASE("reports are deterministic in the seed") {
  const auto a = run_check("thm2.5-3", 42);
  const auto b = run_check("thm2.5-3", 42);
  CHECK(to_jsonl(a) == to_jsonl(b));
  CHECK(a.verdict == Verdict::pass);
  CHECK(a.trials == 200);
  const auto c = run_check("thm2.5-3", 43);
  CHECK(to_jsonl(c) != to_jsonl(a));
}

TEST_CASE("unknown id") {
  try {
    run_check("nosuch", 1);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_id);
  }
}

TEST_CASE("report serialization") {
  const auto r = run_check("pole", 1);
  const auto j = nlohmann::json::parse(to_jsonl(r));
  for (const char* key : {"id", "trials", "max_rel_error", "tolerance", "worst_input", "verdict"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["verdict"] == "pass");
  CHECK(to_jsonl(r).find('\n') == std::string::npos);
}

TEST_CASE("explicit id lists keep their order") {
  const auto reports = run_suite({"qinv", "pole"}, 7);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].id == "qinv");
  CHECK(all_passed(reports));
}

TEST_CASE("dual identity worked example") {
  // (delta_0^-0.5 1)(1.5) == (nabla_{-1}^-0.5 1)(1): both are two-term sums equal to 1.5
  const Order half(0.5);
  const OperatorSpec ds{Family::delta, Side::left, Kind::sum, Formulation::riemann, half, 0.0};
  const OperatorSpec ns{Family::nabla, Side::left, Kind::sum, Formulation::riemann, half, -1.0};
  const GridFunction ones0(0.0, {1.0, 1.0});
  const GridFunction ones_1(-1.0, {1.0, 1.0, 1.0});
  CHECK(riemann_sum_at(ds, ones0, 1.5) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(riemann_sum_at(ns, ones_1, 1.0) == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("every check passes at seed 42") {
  for (const auto& r : run_suite({}, 42)) {
    CAPTURE(to_jsonl(r));
    CHECK(r.verdict == Verdict::pass);
  }
}
