#include <doctest.h>

#include <cmath>
#include <random>

#include "discfrac/error.hpp"
#include "discfrac/grid.hpp"

using namespace discfrac;

namespace {

void check_values(const GridFunction& f, double origin, std::vector<double> expected) {
  CHECK(f.origin() == doctest::Approx(origin));
  REQUIRE(f.size() == expected.size());
  for (std::size_t j = 0; j < expected.size(); ++j) CHECK(f[j] == doctest::Approx(expected[j]));
}

GridFunction random_grid(std::mt19937_64& rng, std::size_t L) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> v(L);
  for (auto& x : v) x = d(rng);
  return GridFunction(d(rng) * 4.0, std::move(v));
}

}  // namespace

TEST_CASE("grid function basics") {
  const GridFunction f(2.5, {1.0, 2.0, 3.0});
  CHECK(f.end() == 4.5);
  CHECK(f.at(3.5) == 2.0);
  CHECK(f.index_of(4.5).value() == 2);
  CHECK_FALSE(f.contains(5.5));
  CHECK_FALSE(f.contains(3.0));
  CHECK_THROWS_AS(f.at(3.0), Error);
  CHECK_THROWS_AS(GridFunction(0.0, {}), Error);
  CHECK(alignable(f, GridFunction(-0.5, {0.0})));
  CHECK_FALSE(alignable(f, GridFunction(0.0, {0.0})));
}

TEST_CASE("delta examples") {
  check_values(delta(GridFunction(0.0, {1, 1, 1})), 0.0, {0, 0});
  check_values(delta(GridFunction(0.0, {0, 1, 4, 9})), 0.0, {1, 3, 5});
  check_values(delta(GridFunction(2.5, {1, 2})), 2.5, {1});
  CHECK_THROWS_AS(delta(GridFunction(0.0, {1})), Error);
}

TEST_CASE("nabla examples") {
  check_values(nabla(GridFunction(0.0, {1, 1, 1})), 1.0, {0, 0});
  check_values(nabla(GridFunction(0.0, {0, 1, 4, 9})), 1.0, {1, 3, 5});
  const GridFunction f(0.0, {0.5, -1.0, 2.0});
  const auto recovered = nabla(cumulative_sum(f));
  check_values(recovered, 1.0, {0.5, -1.0, 2.0});
  CHECK_THROWS_AS(nabla(GridFunction(0.0, {1})), Error);
}

TEST_CASE("iterated differences") {
  check_values(iterate_diff(GridFunction(0.0, {0, 1, 4, 9}), DiffOp::delta, 2), 0.0, {2, 2});
  const GridFunction f(0.0, {0, 1, 4, 9});
  const auto signed_nabla = iterate_diff(f, DiffOp::nabla, 1, true);
  check_values(signed_nabla, 1.0, {-1, -3, -5});
  CHECK_THROWS_AS(iterate_diff(f, DiffOp::delta, 4), Error);
}

TEST_CASE("binomial difference examples") {
  check_values(binomial_diff(GridFunction(0.0, {0, 1, 4, 9}), DiffOp::delta, 2), 0.0, {2, 2});
  check_values(binomial_diff(GridFunction(0.0, {0, 1, 4, 9}), DiffOp::nabla, 2), 2.0, {2, 2});
  const GridFunction f(1.0, {3.0, -2.0, 7.0});
  const auto d1 = binomial_diff(f, DiffOp::delta, 1);
  const auto e1 = delta(f);
  for (std::size_t j = 0; j < d1.size(); ++j) CHECK(d1[j] == e1[j]);
  CHECK(binomial_diff(f, DiffOp::nabla, 1).origin() == nabla(f).origin());
}

TEST_CASE("binomial difference equals iterated difference (property)") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto f = random_grid(rng, n + 1 + rng() % 56);
    for (DiffOp op : {DiffOp::delta, DiffOp::nabla}) {
      const auto it = iterate_diff(f, op, n);
      const auto bi = binomial_diff(f, op, n);
      REQUIRE(it.size() == bi.size());
      CHECK(it.origin() == bi.origin());
      for (std::size_t j = 0; j < it.size(); ++j) CHECK(std::abs(it[j] - bi[j]) <= 1e-12);
    }
  }
}

TEST_CASE("delta of the cumulative sum is the identity") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_grid(rng, 1 + rng() % 40);
    const auto back = delta(cumulative_sum(f));
    CHECK(back.origin() == f.origin());
    for (std::size_t j = 0; j < f.size(); ++j) CHECK(std::abs(back[j] - f[j]) <= 1e-13);
  }
}

TEST_CASE("q_reflect examples") {
  const GridFunction f(0.0, {0, 1, 2, 3, 4, 5});
  const auto q = q_reflect(f, AnchorPair::make(0.0, 5.0));
  check_values(q, 0.0, {5, 4, 3, 2, 1, 0});
  CHECK_THROWS_AS(AnchorPair::make(0.0, 4.5), Error);
  CHECK_THROWS_AS(AnchorPair::make(3.0, 1.0), Error);
  CHECK_THROWS_AS(q_reflect(f, AnchorPair{0.0, 4.5}), Error);

  // sub-grid reflects about (a+b)/2
  const GridFunction g(1.5, {7.0, 8.0});
  const auto qg = q_reflect(g, AnchorPair::make(0.5, 4.5));
  CHECK(qg.origin() == doctest::Approx(2.5));
  CHECK(qg.at(3.5) == 7.0);
}

TEST_CASE("q_reflect is an involution and an isometry (property)") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_grid(rng, 1 + rng() % 32);
    const auto anchors = AnchorPair::make(f.origin(), f.end());
    const auto qf = q_reflect(f, anchors);
    const auto qqf = q_reflect(qf, anchors);
    CHECK(qqf.origin() == doctest::Approx(f.origin()));
    double nf = 0.0, nq = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      CHECK(qqf[j] == f[j]);
      nf = std::max(nf, std::abs(f[j]));
      nq = std::max(nq, std::abs(qf[j]));
    }
    CHECK(nf == nq);
  }
}

TEST_CASE("Q exchanges delta and nabla (property)") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_grid(rng, 2 + rng() % 30);
    const auto anchors = AnchorPair::make(f.origin(), f.end());
    // -Q nabla f = delta Q f
    const auto lhs = q_reflect(nabla(f), anchors);
    const auto rhs = delta(q_reflect(f, anchors));
    REQUIRE(lhs.size() == rhs.size());
    CHECK(lhs.origin() == doctest::Approx(rhs.origin()));
    for (std::size_t j = 0; j < lhs.size(); ++j) CHECK(-lhs[j] == doctest::Approx(rhs[j]));
    // -Q delta f = nabla Q f
    const auto lhs2 = q_reflect(delta(f), anchors);
    const auto rhs2 = nabla(q_reflect(f, anchors));
    CHECK(lhs2.origin() == doctest::Approx(rhs2.origin()));
    for (std::size_t j = 0; j < lhs2.size(); ++j) CHECK(-lhs2[j] == doctest::Approx(rhs2[j]));
  }
}
