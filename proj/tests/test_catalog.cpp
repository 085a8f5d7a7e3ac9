#include <doctest.h>

#include <cmath>

#include "phm/catalog.hpp"
#include "phm/classes.hpp"
#include "phm/core.hpp"

using namespace phm;

TEST_CASE("KOEBE_HARMONIC coefficients at j = 2") {
  const auto K = make(BuiltinMap::KoebeHarmonic, 8);
  CHECK(K.a(1, 2).real() == doctest::Approx(2.5));
  CHECK(K.b(1, 2).real() == doctest::Approx(0.5));
  CHECK(K.a(1, 1) == Complex(1.0, 0.0));
  CHECK(K.b(1, 1) == Complex(0.0, 0.0));
}

TEST_CASE("F0/F1 saturate the Koebe coefficient bound termwise") {
  const int J = 12;
  const auto f0 = make(BuiltinMap::F0, J);
  const auto f1 = make(BuiltinMap::F1, J);
  for (int j = 2; j <= J; ++j) {
    const double abound = (2.0 * j + 1.0) * (j + 1.0) / 6.0;
    const double bbound = (2.0 * j - 1.0) * (j - 1.0) / 6.0;
    CHECK(std::abs(f0.a(1, j)) == doctest::Approx(abound));
    CHECK(std::abs(f0.b(1, j)) == doctest::Approx(bbound));
    CHECK(std::abs(f1.a(1, j)) == doctest::Approx(abound));
    CHECK(std::abs(f1.b(1, j)) == doctest::Approx(bbound));
  }
  CHECK(f0.a(1, 1) == Complex(1.0, 0.0));  // 2z - z leading term
}

TEST_CASE("F2 saturates the uniform bound |a_j|+|b_j| = C") {
  const auto f2 = make(BuiltinMap::F2, 10, 1.0);
  for (int j = 2; j <= 10; ++j)
    CHECK(std::abs(f2.a(1, j)) + std::abs(f2.b(1, j)) == doctest::Approx(1.0));
  const auto f3 = make(BuiltinMap::F3, 10, 0.7);
  for (int j = 2; j <= 10; ++j) {
    CHECK(f3.a(1, j) == Complex(0.0, 0.0));
    CHECK(std::abs(f3.b(1, j)) == doctest::Approx(0.7));
  }
}

TEST_CASE("EXAMPLE1 sits exactly on the HC boundary") {
  const auto f = make(BuiltinMap::Example1, 8);
  CHECK(f.p() == 2);
  CHECK(f.b(2, 2).real() == doctest::Approx(-1.0 / 6.0));
  CHECK(hc_membership(f).sum_value == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("all generated maps satisfy the normalization invariants") {
  for (const auto name : {BuiltinMap::Identity, BuiltinMap::KoebeAnalytic,
                          BuiltinMap::KoebeHarmonic, BuiltinMap::F0, BuiltinMap::F1,
                          BuiltinMap::F2, BuiltinMap::F3, BuiltinMap::Example1}) {
    const auto f = make(name, 8);
    CHECK(f.is_normalized());
  }
}

TEST_CASE("Koebe series tracks the closed form up to the tail bound") {
  const auto K = make(BuiltinMap::KoebeHarmonic, 256);
  for (double r : {0.5, 0.8, 0.95}) {
    const Complex z = std::polar(r, 1.1);
    CHECK(std::abs(evaluate(K, z) - harmonic_koebe_closed_form(z)) <= tail_bound(K, r) + 1e-12);
  }
}

TEST_CASE("make rejects bad arguments") {
  CHECK_THROWS_AS(make(BuiltinMap::Identity, 1), std::invalid_argument);
  CHECK_THROWS_AS(builtin_from_string("NOPE"), std::invalid_argument);
  CHECK(builtin_from_string("example1") == BuiltinMap::Example1);
}
