#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support/oracles.hpp"
#include "wocsim/errors.hpp"
#include "wocsim/learning.hpp"
#include "wocsim/network.hpp"

using namespace wocsim;

namespace {

InfluenceMatrix random_matrix(int n, Rng& rng) {
  auto g = AttentionGraph::init_random(
      n, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1))),
      rng, 1 + static_cast<int>(rng.below(3)));
  return build_matrix(g);
}

}  // namespace

TEST_CASE("two-stage averaging matches the nested oracle on 1000 instances") {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 3 + static_cast<int>(rng.below(4));  // n in [3,6]
    auto m = random_matrix(n, rng);
    std::vector<double> s(static_cast<std::size_t>(n));
    for (auto& v : s) v = rng.uniform01();
    auto got = degroot_two_stage(m, s);
    auto want = testsupport::nested_average_oracle(m, s);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(got[static_cast<std::size_t>(i)] -
                     want[static_cast<std::size_t>(i)]) < 1e-12);
  }
}

TEST_CASE("outputs stay inside the signal hull") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng.below(8));
    auto m = random_matrix(n, rng);
    std::vector<double> s(static_cast<std::size_t>(n));
    for (auto& v : s) v = rng.uniform01();
    auto lo = *std::min_element(s.begin(), s.end());
    auto hi = *std::max_element(s.begin(), s.end());
    for (double b : degroot_two_stage(m, s)) {
      CHECK(b >= lo - 1e-12);
      CHECK(b <= hi + 1e-12);
    }
  }
}

TEST_CASE("consensus signals are a fixed point") {
  Rng rng(3);
  auto m = random_matrix(5, rng);
  std::vector<double> s(5, 0.42);
  for (double b : degroot_two_stage(m, s))
    CHECK(b == doctest::Approx(0.42).epsilon(1e-14));
}

TEST_CASE("averaging is linear in the signals") {
  Rng rng(8);
  auto m = random_matrix(6, rng);
  std::vector<double> x(6), y(6);
  for (auto& v : x) v = rng.uniform01();
  for (auto& v : y) v = rng.uniform01();
  std::vector<double> mix(6);
  for (int i = 0; i < 6; ++i)
    mix[static_cast<std::size_t>(i)] = 0.3 * x[static_cast<std::size_t>(i)] +
                                       0.7 * y[static_cast<std::size_t>(i)];
  auto bx = degroot_two_stage(m, x);
  auto by = degroot_two_stage(m, y);
  auto bm = degroot_two_stage(m, mix);
  for (int i = 0; i < 6; ++i)
    CHECK(bm[static_cast<std::size_t>(i)] ==
          doctest::Approx(0.3 * bx[static_cast<std::size_t>(i)] +
                          0.7 * by[static_cast<std::size_t>(i)])
              .epsilon(1e-12));
}

TEST_CASE("stage counts compose") {
  Rng rng(19);
  auto m = random_matrix(5, rng);
  std::vector<double> s(5);
  for (auto& v : s) v = rng.uniform01();
  CHECK(degroot_stages(m, s, 0) == s);
  auto one = degroot_stages(m, s, 1);
  auto two = degroot_stages(m, s, 2);
  CHECK(two == degroot_two_stage(m, s));
  CHECK(degroot_stages(m, one, 1) == two);
  CHECK(degroot_stages(m, s, 3) == degroot_stages(m, two, 1));
}

TEST_CASE("hand-computed 3-agent example") {
  // M = [[.5,.5,0],[0,.5,.5],[.5,0,.5]], s = (0, 1, 0.5).
  InfluenceMatrix m;
  m.n = 3;
  m.entries = {0.5, 0.5, 0.0, 0.0, 0.5, 0.5, 0.5, 0.0, 0.5};
  std::vector<double> s{0.0, 1.0, 0.5};
  // First pass: (.5, .75, .25); second: (.625, .5, .375).
  auto out = degroot_two_stage(m, s);
  CHECK(out[0] == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(out[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(out[2] == doctest::Approx(0.375).epsilon(1e-15));
}

TEST_CASE("solo beliefs are the identity") {
  std::vector<double> s{0.1, 0.9, 0.4};
  CHECK(solo_beliefs(s) == s);
}

TEST_CASE("dimension mismatches are rejected") {
  InfluenceMatrix m;
  m.n = 3;
  m.entries.assign(9, 1.0 / 3.0);
  std::vector<double> s{0.1, 0.2};
  CHECK_THROWS_AS(degroot_two_stage(m, s), InvariantError);
  std::vector<double> ok{0.1, 0.2, 0.3};
  CHECK_THROWS_AS(degroot_stages(m, ok, -1), ConfigError);
}
