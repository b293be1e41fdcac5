#include <random>

#include "howechar/error.hpp"
#include "howechar/laurent.hpp"
#include "howechar/thetachar.hpp"
#include "support.hpp"

using namespace howechar;
using testing::W;

namespace {

using Dir = LaurentSeries::Direction;

LaurentSeries mono(const Dir& d, const Weight& e, long c = 1) { return LaurentSeries::monomial(d, e, Rational(c)); }

RationalPoint point(std::vector<long> v) {
  std::vector<Rational> r;
  for (long x : v) r.emplace_back(x);
  return RationalPoint(r);
}

}  // namespace

TEST_CASE("ring operations") {
  const Dir d{2, 1};
  const auto h1 = mono(d, W({1, 0})), h2 = mono(d, W({0, 1}));
  const auto prod = (h1 + h2) * (h1 - h2);
  CHECK(prod.terms().size() == 2);
  CHECK(prod.coefficient(W({2, 0})) == 1);
  CHECK(prod.coefficient(W({0, 2})) == -1);
  CHECK(prod.coefficient(W({1, 1})) == 0);

  CHECK((h1 * LaurentSeries(d)).empty());
  CHECK((h1 - h1).empty());

  const Dir one{1};
  const auto root = mono(one, W({0.5}));
  CHECK((root * root).terms() == mono(one, W({1})).terms());

  CHECK_THROWS_AS(h1 * mono(Dir{1, 2}, W({1, 0})), ChamberMismatch);
}

TEST_CASE("inverse root factor, rank one") {
  const auto s = expand_inverse_root_factor(W({2}), Dir{1}, 3);
  CHECK(s.terms().size() == 3);
  for (double e : {-1.0, -3.0, -5.0}) CHECK(s.coefficient(W({e})) == 1);
}

TEST_CASE("inverse root factor leads with -beta/2 in a positive chamber") {
  const auto s = expand_inverse_root_factor(W({1, -1}), Dir{2, 1}, 4);
  const auto top = s.by_pairing().front();
  CHECK(top.first == W({-0.5, 0.5}));
  CHECK(top.second == 1);
}

TEST_CASE("inverse root factor times the root factor is 1 above the horizon") {
  const Dir d{3, 2, 1};
  for (const auto& beta : {W({1, -1, 0}), W({0, 1, 1}), W({2, 0, 0}), W({0, -1, 0}), W({-1, 0, 1})}) {
    for (int terms : {1, 4, 9}) {
      const auto inv = expand_inverse_root_factor(beta, d, terms);
      const auto prod = inv * root_factor_series(beta, d);
      REQUIRE(prod.horizon());
      CHECK(prod.terms().size() == 1);
      CHECK(prod.coefficient(W({0, 0, 0})) == 1);
    }
    const auto deep = expand_inverse_root_factor_to_depth(beta, d, HalfInteger(10));
    const auto prod = deep * root_factor_series(beta, d);
    CHECK(prod.coefficient(W({0, 0, 0})) == 1);
    CHECK(prod.terms().size() == 1);
  }
  // a negative pairing flips the expansion and the sign
  const auto neg = expand_inverse_root_factor(W({-1, 1, 0}), d, 3);
  CHECK(neg.coefficient(W({-0.5, 0.5, 0})) == -1);
}

TEST_CASE("a root orthogonal to the chamber has no expansion") {
  CHECK_THROWS_AS(expand_inverse_root_factor(W({1, -1}), Dir{1, 1}, 3), NonConvergentDirection);
}

TEST_CASE("constant term") {
  const Dir d{2, 1};
  auto s = mono(d, W({0, 0}), 7) + mono(d, W({1, -1}), 3);
  CHECK(constant_term(s) == 7);
  const auto inv = expand_inverse_root_factor(W({1, -1}), d, 2);  // exact down to -5/2
  CHECK_THROWS_AS(constant_term(inv * mono(d, W({4, -4}))), TruncationTooSmall);
}

TEST_CASE("exact evaluation of rational expressions") {
  const auto h = [](std::size_t i) { return RationalExpr::variable(i); };
  const auto one = RationalExpr::constant(1);
  CHECK(eval_exact(one / (h(1) - h(0)), point({2, 3})) == 1);

  const auto p = point({2, 3, 5});
  const auto lhs = h(2) / ((h(2) - h(0)) * (h(2) - h(1)));
  const auto rhs = -(h(0) / ((h(0) - h(1)) * (h(0) - h(2))) + h(1) / ((h(1) - h(0)) * (h(1) - h(2))));
  CHECK(eval_exact(lhs, p) == ratio(5, 6));
  CHECK(eval_exact(rhs, p) == ratio(5, 6));

  CHECK_THROWS_AS(eval_exact(one / (h(1) - h(0)), point({4, 4})), PoleAtPoint);
  CHECK_THROWS_AS(point({1, 0}), InvalidArgument);
}

TEST_CASE("evaluation of exact series is a ring homomorphism") {
  const Dir d{3, 2, 1};
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-3, 3), c(-4, 4), v(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentSeries a(d), b(d);
    for (int k = 0; k < 4; ++k) {
      a.add_term(Weight{HalfInteger(e(rng)), HalfInteger(e(rng)), HalfInteger(e(rng))}, c(rng));
      b.add_term(Weight{HalfInteger(e(rng)), HalfInteger(e(rng)), HalfInteger(e(rng))}, c(rng));
    }
    const auto p = point({v(rng), -v(rng), v(rng)});
    CHECK(eval_exact(a * b, p) == eval_exact(a, p) * eval_exact(b, p));
    CHECK(eval_exact(a + b, p) == eval_exact(a, p) + eval_exact(b, p));
  }
  CHECK_THROWS_AS(eval_exact(mono(d, W({0.5, 0, 0})), point({1, 2, 3})), NonRationalExponent);
}

TEST_CASE("Vandermonde identity at random rational points, p+q <= 8") {
  for (int N = 2; N <= 8; ++N)
    for (int p = 1; p < N; ++p)
      for (int k = 0; k <= N - 2; ++k) {
        const auto rep = vandermonde_identity_check(p, N - p, k, IdentityMode::random_rational, 100 + N, 20);
        CHECK(rep.verdict == IdentityVerdict::holds_at_samples);
        CHECK(rep.points == 20);
      }
}

TEST_CASE("Vandermonde identity edge cases") {
  CHECK(vandermonde_identity_check(1, 1, 0, IdentityMode::random_rational).verdict ==
        IdentityVerdict::holds_at_samples);
  CHECK(vandermonde_identity_check(2, 1, 1, IdentityMode::grid).verdict == IdentityVerdict::proved);
  // k = p+q-1 is outside the asserted range and the two sides differ
  const auto out = vandermonde_identity_check(1, 1, 1, IdentityMode::grid);
  CHECK(out.verdict == IdentityVerdict::not_asserted);
  REQUIRE(out.lhs);
  CHECK(*out.lhs == 3);
  CHECK(*out.rhs == 2);
  CHECK_THROWS_AS(vandermonde_identity_check(0, 1, 0, IdentityMode::grid), InvalidArgument);
  CHECK_THROWS_AS(vandermonde_grid_sweep(10), CapExceeded);
}

TEST_CASE("grid sweep up to p+q = 6") {
  for (int N = 2; N <= 6; ++N) {
    const auto s = vandermonde_grid_sweep(N);
    CHECK(s.all_hold());
    std::uint64_t expect = 1;
    for (int i = 0; i < N; ++i) expect *= N;
    CHECK(s.points == expect);
  }
}
