#include <random>
#include <set>

#include "howechar/error.hpp"
#include "howechar/orbits.hpp"
#include "support.hpp"

using namespace howechar;
using testing::pi;
using testing::W;

namespace {

std::vector<double> random_x(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    bool ok = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) ok = ok && std::abs(x[i] - x[j]) > 0.05;
    if (ok) return x;
  }
}

Complex alternating_exp(const RootSystem& rs, const Weight& lambda, const std::vector<double>& x) {
  Complex s = 0;
  for (const auto& w : weyl_group(rs)) {
    const Weight wl = act(w, lambda);
    double phase = 0;
    for (std::size_t k = 0; k < x.size(); ++k) phase += wl[k].to_double() * x[k];
    s += double(sign(w)) * std::polar(1.0, phase);
  }
  return s;
}

}  // namespace

TEST_CASE("orbit parameters") {
  const auto a3 = build_root_system(Family::A, 3);
  const OrbitParameter reg(a3, W({2, 1, 0}));
  CHECK(reg.positive_set.size() == 3);
  CHECK(reg.noncompact_count == 0);
  const OrbitParameter sing(a3, W({1, 1, 0}));
  CHECK(sing.positive_set.size() == 2);
  for (const auto& a : sing.positive_set)
    for (const auto& b : sing.positive_set) CHECK(a != -b);
  const std::vector<Weight> none;
  CHECK(OrbitParameter(a3, W({2, 1, 0}), none).noncompact_count == 3);
  CHECK_THROWS_AS(OrbitParameter(a3, W({1, 0})), DimensionMismatch);
}

TEST_CASE("RDV examples") {
  const auto a2 = build_root_system(Family::A, 2);
  const std::vector<double> x{pi, 0};
  CHECK(testing::close(rdv_fourier(a2, OrbitParameter(a2, W({1, 0})), x), Complex(0, 2 / pi), 1e-12));
  const std::vector<double> y{0.7, -0.2};
  CHECK(testing::close(rdv_fourier(a2, OrbitParameter(a2, W({1, 1})), y), std::polar(1.0, 0.5), 1e-12));
  // no compact roots: one term and the sign of the single noncompact root
  const std::vector<Weight> none;
  CHECK(testing::close(rdv_fourier(a2, none, OrbitParameter(a2, W({1, 0}), none), x), Complex(0, -1 / pi), 1e-12));
  const std::vector<double> bad{0.3, 0.3};
  CHECK_THROWS_AS(rdv_fourier(a2, OrbitParameter(a2, W({1, 0})), bad), SingularPoint);
}

TEST_CASE("RDV is invariant under lambda -> w lambda and X -> w X") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> e(-3, 3);
  const auto a3 = build_root_system(Family::A, 3);
  const auto g = weyl_group(a3);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int s = 0; s < 20; ++s) {
    const Weight lam{HalfInteger(e(rng)), HalfInteger(e(rng)), HalfInteger(e(rng))};
    const auto x = random_x(rng, 3);
    const auto& w = g[pick(rng)];
    const Complex f = rdv_fourier(a3, OrbitParameter(a3, lam), x);
    CHECK(testing::close(rdv_fourier(a3, OrbitParameter(a3, act(w, lam)), x), f, 1e-12 * std::max(1.0, std::abs(f))));
    std::vector<double> moved(3);
    for (int k = 0; k < 3; ++k) moved[k] = x[w.perm[k]];
    CHECK(testing::close(rdv_fourier(a3, OrbitParameter(a3, lam), moved), f, 1e-10 * std::max(1.0, std::abs(f))));
  }
}

TEST_CASE("Liouville normalization") {
  const auto a2 = build_root_system(Family::A, 2);
  CHECK(liouville_normalization(OrbitParameter(a2, W({1, 0}))) == 1);
  CHECK(liouville_normalization(OrbitParameter(a2, rho(a2))) == 1);
  CHECK(liouville_normalization(OrbitParameter(a2, W({1, 1}))) == 1);
  const auto a3 = build_root_system(Family::A, 3);
  const double base = liouville_normalization(OrbitParameter(a3, W({2, 1, 0})));
  CHECK(base == 2);
  CHECK(liouville_normalization(OrbitParameter(a3, W({6, 3, 0}))) == doctest::Approx(base * 27));
  CHECK(orbit_volume_constant(1) == 1);
  CHECK(orbit_volume_constant(3) == doctest::Approx(0.5));
}

TEST_CASE("homogeneity") {
  std::mt19937_64 rng(5);
  const auto a3 = build_root_system(Family::A, 3);
  const Weight lam = W({2, 0, -1});
  const Weight lam2 = 2 * lam;
  for (int s = 0; s < 10; ++s) {
    const auto x = random_x(rng, 3);
    std::vector<double> x2(x);
    for (auto& v : x2) v *= 2;
    const Complex a = rdv_fourier(a3, OrbitParameter(a3, lam), x2);
    const Complex b = rdv_fourier(a3, OrbitParameter(a3, lam2), x) / 8.0;
    CHECK(testing::close(a, b, 1e-12 * std::max(1.0, std::abs(a))));
  }
}

TEST_CASE("root product times RDV is the alternating exponential sum") {
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 3; ++n) {
    const auto rs = build_root_system(Family::A, n);
    const Weight lam = n == 2 ? W({1, -1}) : W({3, 1, 0});
    for (int s = 0; s < 10; ++s) {
      auto x = random_x(rng, n);
      for (double scale : {1.0, 1e-3}) {
        std::vector<double> y(x);
        for (auto& v : y) v *= scale;
        Complex prod = 1;
        for (const auto& a : rs.positive_roots()) {
          double ax = 0;
          for (int k = 0; k < n; ++k) ax += a[k].to_double() * y[k];
          prod *= Complex(0, ax);
        }
        const Complex lhs = prod * rdv_fourier(rs, OrbitParameter(rs, lam), y);
        CHECK(testing::close(lhs, alternating_exp(rs, lam, y), 1e-9));
      }
    }
  }
}

TEST_CASE("HCIZ oracle") {
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 3; ++n) {
    const auto rs = build_root_system(Family::A, n);
    for (int s = 0; s < 20; ++s) {
      std::uniform_int_distribution<int> e(-4, 4);
      std::set<int, std::greater<>> l;
      while (static_cast<int>(l.size()) < n) l.insert(e(rng));
      std::vector<std::int64_t> li(l.begin(), l.end());
      std::vector<double> ld(l.begin(), l.end());
      const auto x = random_x(rng, n);
      const Complex h = hciz_oracle(ld, x);
      CHECK(std::abs(rdv_fourier(rs, OrbitParameter(rs, Weight::from_integers(li)), x) - h) <= 1e-10 * std::abs(h));
    }
  }
  const std::vector<double> rep{1, 1}, x{0.2, 0.5};
  CHECK_THROWS_AS(hciz_oracle(rep, x), MonteCarloOnly);
}

TEST_CASE("Haar Monte Carlo") {
  const auto a2 = build_root_system(Family::A, 2);
  const std::vector<double> lam{1, 0}, x{1.0, -0.5};
  const auto est = orbit_integral_monte_carlo(lam, x, 200000, 77);
  CHECK(est.samples == 200000);
  CHECK(est.standard_error > 0);
  const Complex f = rdv_fourier(a2, OrbitParameter(a2, W({1, 0})), x);
  CHECK(std::abs(est.value - f) <= 3 * est.standard_error);

  const auto serial = orbit_integral_monte_carlo(lam, x, 200000, 77, kernels::Exec::serial);
  CHECK(serial.value == est.value);
  CHECK(serial.standard_error == est.standard_error);

  const std::vector<double> l4{3, 2, 1, 0}, x4{0.1, 0.2, 0.3, 0.4};
  CHECK_THROWS_AS(orbit_integral_monte_carlo(l4, x4, 100000, 1), CapExceeded);
  CHECK_THROWS_AS(orbit_integral_monte_carlo(lam, x, 1000, 1), InvalidArgument);
}

TEST_CASE("near X = 0 the transform is the orbit volume") {
  for (int n = 2; n <= 3; ++n) {
    const auto rs = build_root_system(Family::A, n);
    const Weight lam = n == 2 ? W({1, 0}) : W({2, 1, 0});
    std::vector<double> x = n == 2 ? std::vector<double>{1e-4, -0.5e-4} : std::vector<double>{0.9e-4, -0.3e-4, 0.4e-4};
    const OrbitParameter op(rs, lam);
    const double vol = orbit_volume_constant(n) * liouville_normalization(op);
    CHECK(std::abs(rdv_fourier(rs, op, x) - vol) <= 1e-2 * vol);
  }
}

TEST_CASE("bilinear form") {
  const std::vector<double> x{1, 2}, y{3, -1};
  CHECK(BilinearFormB::for_pair(PairKind::UU)(x, y) == doctest::Approx(-pi));
  CHECK(BilinearFormB::for_pair(PairKind::OoddSp)(x, y) == doctest::Approx(-pi));
  CHECK(BilinearFormB::for_pair(PairKind::UHOstar)(x, y) == doctest::Approx(-2 * pi));
  CHECK(BilinearFormB::for_pair(PairKind::UU)(x, y) == BilinearFormB::for_pair(PairKind::UU)(y, x));
  const std::vector<double> z{1};
  CHECK_THROWS_AS(BilinearFormB::for_pair(PairKind::UU)(x, z), DimensionMismatch);
}
