#include <random>

#include "howechar/error.hpp"
#include "howechar/thetachar.hpp"
#include "support.hpp"

using namespace howechar;
using testing::pi;
using testing::T;
using testing::W;

namespace {

std::vector<TorusPoint> points(const ThetaCharacter& tc, int count, std::uint64_t seed) {
  return random_regular_points(tc.gprime().positive_roots(), tc.gprime().rank(), count, seed);
}

// nu for U(1) x U(p,q) from lambda_1
Weight u1_nu(int p, int q, int l) { return Weight{HalfInteger::from_twice(2 * l + q - p)}; }

}  // namespace

TEST_CASE("U(1,1) example value") {
  const ThetaCharacter tc(DualPairSpec::uu(1, 1, 1), W({0}), 1);
  const auto t = T({pi / 2, -pi / 2});
  CHECK(testing::close(theta_eval(tc, t), Complex(0, -0.5), 1e-12));
  CHECK(testing::close(theta_u1_closed(1, 1, 0, 1, t), Complex(0, -0.5), 1e-12));
}

TEST_CASE("construction picks the smallest admissible split") {
  const ThetaCharacter tc(DualPairSpec::uu(1, 2, 2), u1_nu(2, 2, 0));
  CHECK(tc.split() == 0);
  CHECK(tc.index_set() == std::vector<int>{3});
  CHECK_THROWS_AS(ThetaCharacter(DualPairSpec::uu(1, 1, 1), W({3}), 1), OutsideSupport);
  CHECK_THROWS_AS(ThetaCharacter(DualPairSpec::uu(1, 1, 1), W({0.5})), NotInCorrespondence);
}

TEST_CASE("theta is W(K') invariant") {
  std::mt19937_64 rng(4);
  const std::vector<std::pair<DualPairSpec, Weight>> cases{
      {DualPairSpec::uu(1, 2, 2), u1_nu(2, 2, 0)},
      {DualPairSpec::uu(2, 2, 2), W({0, 0})},
      {DualPairSpec::oeven_sp(1, 3), W({0})},
      {DualPairSpec::oodd_sp(1, 2), W({1})},
      {DualPairSpec::uh_ostar(1, 3), W({0})}};
  for (const auto& [pair, nu] : cases) {
    const ThetaCharacter tc(pair, nu);
    const auto& g = tc.kprime_group();
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (const auto& t : points(tc, 20, 31)) {
      const Complex a = theta_eval(tc, t), b = theta_eval(tc, act(g[pick(rng)], t));
      CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST_CASE("the split only changes the constant, n <= 2, p+q <= 4, |nu| <= 3") {
  int compared = 0;
  for (int n = 1; n <= 2; ++n)
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; p + q <= 4; ++q) {
        if (n > p + q) continue;
        const auto pair = DualPairSpec::uu(n, p, q);
        const double shift = pair.central_shift().get_d();
        std::vector<Weight> nus;
        for (int a = -4; a <= 4; ++a) {
          if (n == 1) nus.push_back(W({a + shift}));
          else
            for (int b = -4; b <= a; ++b) nus.push_back(W({a + shift, b + shift}));
        }
        for (const auto& nu : nus) {
          bool small = true;
          for (const auto& x : nu) small = small && std::abs(x.to_double()) <= 3;
          if (!small) continue;
          std::vector<int> splits;
          try {
            const auto cd = validate_weight(pair, nu);
            splits = admissible_splits(pair, support_interval(pair, cd));
          } catch (const NotInCorrespondence&) {
            continue;
          } catch (const OutsideSupport&) {
            continue;
          }
          if (splits.size() < 2) continue;
          const ThetaCharacter base(pair, nu, splits.front());
          for (std::size_t s = 1; s < splits.size(); ++s) {
            const ThetaCharacter other(pair, nu, splits[s]);
            std::vector<Complex> r;
            for (const auto& t : points(base, 10, 100 + s)) r.push_back(theta_eval(base, t) / theta_eval(other, t));
            CHECK(testing::spread(r) <= 1e-9);
            ++compared;
          }
        }
      }
  CHECK(compared > 10);
}

TEST_CASE("numerator form") {
  const ThetaCharacter tc(DualPairSpec::uu(2, 2, 2), W({0, 0}), 1);
  std::vector<Complex> r;
  for (const auto& t : points(tc, 10, 8))
    r.push_back(theta_numerator_form(tc, t) / (weyl_denominator(tc.gprime(), t) * theta_eval(tc, t)));
  CHECK(testing::spread(r) <= 1e-9);

  // no poles: finite on the singular set
  const Complex z = theta_numerator_form(tc, T({0.3, 0.3, 0.3, 0.3}));
  CHECK(std::isfinite(z.real()));
  CHECK(std::isfinite(z.imag()));
  CHECK_THROWS_AS(theta_eval(tc, T({0.3, 0.3, 0.3, 0.3})), SingularPoint);

  // full embedding: nothing vanishes, so the form is theta times the denominator
  const ThetaCharacter full(DualPairSpec::uu(2, 1, 1), W({0, 0}), 1);
  REQUIRE(full.z_group().size() == 1);
  std::vector<Complex> q;
  for (const auto& t : points(full, 10, 9))
    q.push_back(theta_numerator_form(full, t) / (weyl_denominator(full.gprime(), t) * theta_eval(full, t)));
  CHECK(testing::spread(q) <= 1e-9);
  CHECK(std::abs(std::abs(q.front()) - 1) <= 1e-9);
}

TEST_CASE("numerator series evaluates to the numerator form") {
  for (const auto& [pair, nu] : std::vector<std::pair<DualPairSpec, Weight>>{
           {DualPairSpec::uu(2, 2, 2), W({0, 0})}, {DualPairSpec::oeven_sp(1, 2), W({0})}}) {
    const ThetaCharacter tc(pair, nu);
    const auto s = numerator_series(tc);
    for (const auto& t : points(tc, 5, 12)) {
      Complex v = 0;
      for (const auto& [e, c] : s.terms()) v += c.get_d() * eval_monomial(t, e);
      CHECK(testing::close(v, theta_numerator_form(tc, t), 1e-10));
    }
  }
}

TEST_CASE("U(1) closed forms") {
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      const auto pair = DualPairSpec::uu(1, p, q);
      for (int l = -q + 1; l < p; ++l) {
        const ThetaCharacter tc(pair, u1_nu(p, q, l), 1);
        std::vector<Complex> with_theta, between;
        for (const auto& t : points(tc, 10, 40 + p + q)) {
          with_theta.push_back(theta_eval(tc, t) / theta_u1_closed(p, q, l, 1, t));
          between.push_back(theta_u1_closed(p, q, l, 0, t) / theta_u1_closed(p, q, l, 1, t));
        }
        CHECK(testing::spread(with_theta) <= 1e-9);
        // the two single sums are negatives of each other
        CHECK(testing::close(between.front(), -1.0, 1e-9));
        CHECK(testing::spread(between) <= 1e-9);
      }
    }
  CHECK_THROWS_AS(theta_u1_closed(1, 1, 0, 2, T({1, 2})), InvalidArgument);
  CHECK_THROWS_AS(theta_u1_closed(1, 1, 0, 1, T({1, 1})), SingularPoint);
}

TEST_CASE("normalizing constant, all roots compact") {
  // K' = U(2), numerator is the Weyl numerator of (1,0): C = 1
  const auto a2 = build_root_system(Family::A, 2);
  KPrimeData kp{a2.positive_roots(), weyl_group(a2), {}};
  LaurentSeries num(standard_chamber(2));
  const Weight e = W({1, 0}) + rho(a2);
  for (const auto& w : kp.group) num.add_term(act(w, e), sign(w));
  CHECK(normalizing_constant(num, kp, W({1, 0}), HalfInteger(3)) == 1);
  CHECK_THROWS_AS(normalizing_constant(num, kp, W({2, 0}), HalfInteger(3)), NotMinimalKType);
  CHECK_THROWS_AS(normalizing_constant(num, kp, W({0, 1}), HalfInteger(3)), NotDominant);
}

TEST_CASE("normalizing constant is stable in depth") {
  const ThetaCharacter tc(DualPairSpec::uu(1, 1, 1), W({2}));
  const auto k = ktype_expansion(tc, HalfInteger(4));
  const Rational c1 = normalizing_constant(tc, k.minimal, HalfInteger(10));
  const Rational c2 = normalizing_constant(tc, k.minimal, HalfInteger(15));
  CHECK(c1 == c2);
  CHECK(c1 != 0);
  CHECK(c1 == k.constant);
}

TEST_CASE("U(1,1) ladders") {
  for (int l = -3; l <= 3; ++l) {
    const ThetaCharacter tc(DualPairSpec::uu(1, 1, 1), W({double(l)}));
    const auto k = ktype_expansion(tc, HalfInteger(20));
    const Weight minimal = W({std::max(-l, 0) - 0.5, 0.5 - std::max(l, 0)});
    CHECK(k.minimal == minimal);
    std::map<Weight, std::int64_t> want;
    for (int j = 0; j <= 20; ++j) want[minimal - W({double(j), double(-j)})] = 1;
    CHECK(k.multiplicities == want);
  }
}

TEST_CASE("K-type expansion edge cases") {
  const ThetaCharacter tc(DualPairSpec::uu(1, 1, 1), W({1}));
  const auto k0 = ktype_expansion(tc, HalfInteger(0));
  CHECK(k0.multiplicities.size() == 1);
  CHECK(k0.multiplicities.begin()->first == k0.minimal);
  CHECK(k0.multiplicities.begin()->second == 1);
  CHECK_THROWS_AS(ktype_expansion(tc, HalfInteger(-1)), InvalidArgument);
  // the metaplectic half-shift is not in the closed form
  CHECK_THROWS_AS(ktype_expansion(ThetaCharacter(DualPairSpec::oodd_sp(1, 2), W({0})), HalfInteger(4)),
                  FormulaInconsistency);
}

TEST_CASE("multiplicities are nonnegative integers for the other pairs") {
  for (const auto& [pair, nu] : std::vector<std::pair<DualPairSpec, Weight>>{
           {DualPairSpec::oeven_sp(1, 1), W({0})},
           {DualPairSpec::oeven_sp(1, 2), W({1})},
           {DualPairSpec::oodd_sp(1, 1), W({2})},
           {DualPairSpec::uh_ostar(1, 2), W({0})},
           {DualPairSpec::uh_ostar(1, 3), W({1})}}) {
    const auto k = ktype_expansion(ThetaCharacter(pair, nu), HalfInteger(8));
    REQUIRE(k.multiplicities.count(k.minimal));
    CHECK(k.multiplicities.at(k.minimal) == 1);
    for (const auto& [g, m] : k.multiplicities) CHECK(m > 0);
  }
}

TEST_CASE("normalization") {
  ThetaCharacter tc(DualPairSpec::uu(1, 1, 1), W({0}), 1);
  const auto t = T({pi / 2, -pi / 2});
  const Complex raw = theta_eval(tc, t);
  tc.set_normalization(ratio(3, 2));
  CHECK(testing::close(theta_eval(tc, t), 1.5 * raw, 1e-12));
  CHECK_THROWS_AS(tc.set_normalization(Rational(0)), InvalidArgument);
}
