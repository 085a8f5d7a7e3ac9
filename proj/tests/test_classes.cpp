#include <doctest.h>

#include <cmath>
#include <random>

#include "phm/catalog.hpp"
#include "phm/classes.hpp"
#include "test_helpers.hpp"

using namespace phm;
using phm::testing::random_normalized_map;

TEST_CASE("hs_membership examples") {
  const auto id = make(BuiltinMap::Identity, 8);
  const auto hs = hs_membership(id);
  CHECK(hs.sum_value == doctest::Approx(1.0));
  CHECK(hs.margin == doctest::Approx(1.0));
  CHECK(hs.member());

  const auto ex1 = make(BuiltinMap::Example1, 8);
  const auto hs1 = hs_membership(ex1);
  CHECK(hs1.sum_value == doctest::Approx(5.0 / 3.0));  // 1 + (2+2)/6
  CHECK(hs1.member());

  // f2 with C = 1: partial sums grow without bound, so no HS membership at
  // any reasonable truncation
  const auto f2 = make(BuiltinMap::F2, 32, 1.0);
  const auto hs2 = hs_membership(f2);
  CHECK(hs2.sum_value > hs_membership(make(BuiltinMap::F2, 16, 1.0)).sum_value);
  CHECK_FALSE(hs2.member());
}

TEST_CASE("hc_membership examples") {
  CHECK(hc_membership(make(BuiltinMap::Identity, 8)).sum_value == doctest::Approx(1.0));

  const auto hc1 = hc_membership(make(BuiltinMap::Example1, 8));
  CHECK(hc1.sum_value == doctest::Approx(2.0));
  CHECK(std::abs(hc1.margin) <= 1e-12);  // boundary member

  // identity plus b_{1,2} = 0.3: sum 1 + 4 * 0.3 = 2.2
  auto h = AnalyticCoeffs::zero(4);
  auto g = AnalyticCoeffs::zero(4);
  h.set(1, 1.0);
  g.set(2, 0.3);
  std::vector<HarmonicLayer> layers;
  layers.push_back({std::move(h), std::move(g)});
  const PolyharmonicMap f{std::move(layers)};
  const auto hc2 = hc_membership(f);
  CHECK(hc2.sum_value == doctest::Approx(2.2));
  CHECK_FALSE(hc2.member());
}

TEST_CASE("membership breakdown sums to the total") {
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_normalized_map(rng, 3, 8);
    for (const auto& rep : {hs_membership(f), hc_membership(f), starlike_order_margin(f, 0.4),
                            convex_order_margin(f, 0.2)}) {
      double total = 0.0;
      for (const auto& term : rep.breakdown) total += term.contribution;
      CHECK(std::abs(total - rep.sum_value) <= 1e-12 * std::max(1.0, rep.sum_value));
    }
  }
}

TEST_CASE("membership rejects non-normalized maps") {
  auto h = AnalyticCoeffs::zero(3);
  auto g = AnalyticCoeffs::zero(3);
  h.set(1, 1.0);
  g.set(1, 0.4);
  std::vector<HarmonicLayer> layers;
  layers.push_back({std::move(h), std::move(g)});
  const PolyharmonicMap f{std::move(layers)};
  CHECK_THROWS_AS(hs_membership(f), NormalizationError);
  CHECK_THROWS_AS(starlike_order_margin(f, 0.0), NormalizationError);
}

TEST_CASE("starlike_order_margin examples") {
  const auto id = make(BuiltinMap::Identity, 8);
  CHECK(starlike_order_margin(id, 0.7).sum_value == doctest::Approx(0.0));
  CHECK(starlike_order_margin(id, 0.7).member());

  const auto ex1 = make(BuiltinMap::Example1, 8);
  CHECK(starlike_order_margin(ex1, 0.0).sum_value == doctest::Approx(2.0 / 3.0));
  CHECK(starlike_order_margin(ex1, 0.0).member());
  CHECK(starlike_order_margin(ex1, 0.5).sum_value == doctest::Approx(1.5));
  CHECK_FALSE(starlike_order_margin(ex1, 0.5).member());
  CHECK_THROWS_AS(starlike_order_margin(ex1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(starlike_order_margin(ex1, -0.1), std::invalid_argument);
}

TEST_CASE("convex_order_margin examples") {
  const auto id = make(BuiltinMap::Identity, 8);
  CHECK(convex_order_margin(id, 0.3).sum_value == doctest::Approx(0.0));

  const auto ex1 = make(BuiltinMap::Example1, 8);
  CHECK(convex_order_margin(ex1, 0.0).sum_value == doctest::Approx(1.0));
  CHECK(std::abs(convex_order_margin(ex1, 0.0).margin) <= 1e-12);
  CHECK(convex_order_margin(ex1, 0.25).sum_value == doctest::Approx((6.25 / 0.75) / 6.0));
  CHECK_FALSE(convex_order_margin(ex1, 0.25).member());
}

TEST_CASE("max orders") {
  const auto id = make(BuiltinMap::Identity, 8);
  CHECK(max_starlike_order(id).value() == doctest::Approx(1.0));
  CHECK(max_convex_order(id).value() == doctest::Approx(1.0));

  const auto ex1 = make(BuiltinMap::Example1, 8);
  CHECK(max_starlike_order(ex1).value() == doctest::Approx(2.0 / 7.0).epsilon(1e-8));
  CHECK(max_convex_order(ex1).value() == doctest::Approx(0.0).epsilon(1e-8));

  // margin already negative at order 0 -> none
  auto h = AnalyticCoeffs::zero(4);
  auto g = AnalyticCoeffs::zero(4);
  h.set(1, 1.0);
  h.set(2, 0.8);
  std::vector<HarmonicLayer> layers;
  layers.push_back({std::move(h), std::move(g)});
  const PolyharmonicMap f{std::move(layers)};
  CHECK_FALSE(max_starlike_order(f).has_value());
}

TEST_CASE("margins are monotone in the order parameter") {
  std::mt19937 rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_normalized_map(rng, 2, 6);
    double prev_s = starlike_order_margin(f, 0.0).margin;
    double prev_c = convex_order_margin(f, 0.0).margin;
    for (double order : {0.2, 0.4, 0.6, 0.8}) {
      const double s = starlike_order_margin(f, order).margin;
      const double c = convex_order_margin(f, order).margin;
      CHECK(s < prev_s);  // strict: random maps have nonzero j >= 2 terms
      CHECK(c < prev_c);
      prev_s = s;
      prev_c = c;
    }
  }
}

TEST_CASE("rescaling to a subdisk never shrinks margins") {
  std::mt19937 rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_normalized_map(rng, 2, 6, 1.5);
    for (double r : {0.3, 0.7, 0.95}) {
      const auto fr = rescaled(f, r);
      CHECK(starlike_order_margin(fr, 0.25).margin >=
            starlike_order_margin(f, 0.25).margin - 1e-12);
      CHECK(hs_membership(fr).margin >= hs_membership(f).margin - 1e-12);
    }
  }
}

TEST_CASE("HC membership implies HS membership") {
  std::mt19937 rng(19);
  for (int t = 0; t < 25; ++t) {
    const auto f = random_normalized_map(rng, 1 + t % 3, 6, 0.5 + 0.2 * (t % 4));
    if (hc_membership(f).member()) CHECK(hs_membership(f).member());
    // weight dominance holds termwise regardless of membership
    CHECK(hc_membership(f).sum_value >= hs_membership(f).sum_value - 1e-12);
  }
}

TEST_CASE("order-0 starlike condition rescales into the HS sum") {
  std::mt19937 rng(29);
  for (int t = 0; t < 10; ++t) {
    const auto f = random_normalized_map(rng);
    // at alpha = 0 the order-margin weights equal the HS weights on the
    // j >= 2 terms, so sum_HS = 1 + order_sum(0) (a_{1,1} carries weight 1)
    CHECK(hs_membership(f).sum_value ==
          doctest::Approx(1.0 + starlike_order_margin(f, 0.0).sum_value).epsilon(1e-12));
  }
}
