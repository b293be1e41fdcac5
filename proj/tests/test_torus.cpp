#include <limits>
#include <random>

#include "howechar/error.hpp"
#include "howechar/torus.hpp"
#include "support.hpp"

using namespace howechar;
using testing::pi;
using testing::T;
using testing::W;

TEST_CASE("angles are stored in (-pi, pi]") {
  CHECK(canonical_angle(pi) == doctest::Approx(pi));
  CHECK(canonical_angle(-pi) == doctest::Approx(pi));
  CHECK(canonical_angle(3 * pi) == doctest::Approx(pi));
  CHECK(canonical_angle(2 * pi - 1e-12) == doctest::Approx(-1e-12).epsilon(1e-3));
  CHECK(T({7.0})[0] == doctest::Approx(7.0 - 2 * pi));
  CHECK_THROWS_AS(T({std::numeric_limits<double>::quiet_NaN()}), InvalidArgument);
  CHECK_THROWS_AS(T({std::numeric_limits<double>::infinity()}), InvalidArgument);
}

TEST_CASE("monomials") {
  CHECK(testing::close(eval_monomial(T({0, 0, 0}), W({3, -1, 0.5})), 1.0, 1e-15));
  CHECK(testing::close(eval_monomial(T({pi}), W({1})), -1.0, 1e-15));
  CHECK(testing::close(eval_monomial(T({pi}), W({0.5})), Complex(0, 1), 1e-15));
  CHECK_THROWS_AS(eval_monomial(T({1, 2}), W({1})), DimensionMismatch);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-pi, pi);
  std::uniform_int_distribution<int> e(-7, 7);
  for (int i = 0; i < 50; ++i) {
    const TorusPoint t({u(rng), u(rng)});
    const Weight a{HalfInteger::from_twice(e(rng)), HalfInteger::from_twice(e(rng))};
    const Weight b{HalfInteger::from_twice(e(rng)), HalfInteger::from_twice(e(rng))};
    CHECK(std::abs(std::abs(eval_monomial(t, a)) - 1) <= 1e-12);
    CHECK(testing::close(eval_monomial(t, a + b), eval_monomial(t, a) * eval_monomial(t, b), 1e-12));
  }
}

TEST_CASE("Weyl denominator examples") {
  CHECK(testing::close(weyl_denominator(build_root_system(Family::A, 2), T({pi / 2, -pi / 2})), Complex(0, 2), 1e-14));
  CHECK(testing::close(weyl_denominator(build_root_system(Family::C, 1), T({pi / 2})), Complex(0, 2), 1e-14));
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    CHECK(std::abs(weyl_denominator(build_root_system(f, 3), T({0, 0, 0}))) == 0.0);
}

TEST_CASE("|Delta|^2 as a product with the conjugate") {
  const auto rs = build_root_system(Family::B, 3);
  for (const auto& t : random_regular_points(rs.positive_roots(), 3, 20, 11)) {
    const Complex d = weyl_denominator(rs, t);
    const Complex p = d * std::conj(d);
    CHECK(p.imag() == 0.0);
    CHECK(p.real() == d.real() * d.real() + d.imag() * d.imag());
  }
}

TEST_CASE("restricted denominators") {
  const auto rs = build_root_system(Family::C, 3);
  const auto t = T({0.3, 1.1, -2.0});
  CHECK(restricted_denominator(rs, [](const Weight&) { return true; }, t) == weyl_denominator(rs, t));
  CHECK(restricted_denominator(rs, [](const Weight&) { return false; }, t) == Complex(1.0));
  // u(2) sitting in u(1,1) on both coordinates: the single root survives
  const auto a2 = build_root_system(Family::A, 2);
  const auto keep = [](const Weight& a) { return a[0] != 0 || a[1] != 0; };
  CHECK(testing::close(restricted_denominator(a2, keep, T({pi / 2, -pi / 2})), Complex(0, 2), 1e-14));
}

TEST_CASE("regularity") {
  const auto a2 = build_root_system(Family::A, 2);
  CHECK_FALSE(is_regular(a2, T({0, 0})));
  CHECK(is_regular(a2, T({1.0, 2.0})));
  CHECK_FALSE(is_regular(build_root_system(Family::B, 1), T({2 * pi - 1e-12}), 1e-9));
  CHECK_THROWS_AS(is_regular(a2, T({1.0, 2.0}), 0.0), InvalidArgument);
  CHECK_THROWS_AS(is_regular(a2, T({1.0}), 1e-9), DimensionMismatch);
}

TEST_CASE("random regular points are reproducible and regular") {
  const auto rs = build_root_system(Family::D, 3);
  const auto a = random_regular_points(rs.positive_roots(), 3, 10, 42);
  const auto b = random_regular_points(rs.positive_roots(), 3, 10, 42);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::vector<double>(a[i].angles().begin(), a[i].angles().end()) ==
          std::vector<double>(b[i].angles().begin(), b[i].angles().end()));
    CHECK(is_regular(rs, a[i], 1e-2));
  }
}

TEST_CASE("Weyl group acts on torus points compatibly with monomials") {
  const auto rs = build_root_system(Family::C, 3);
  const auto t = T({0.4, -1.3, 2.2});
  const Weight mu = W({2, -1, 3});
  for (const auto& w : weyl_group(rs))
    CHECK(testing::close(eval_monomial(act(w, t), mu), eval_monomial(t, act(inverse(w), mu)), 1e-12));
}
