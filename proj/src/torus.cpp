#include "howechar/torus.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "howechar/error.hpp"

namespace howechar {

double canonical_angle(double theta) {
  double r = std::remainder(theta, 2 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2 * std::numbers::pi;
  return r;
}

TorusPoint::TorusPoint(std::vector<double> angles) : angles_(std::move(angles)) {
  for (auto& a : angles_) {
    if (!std::isfinite(a)) throw InvalidArgument("torus angle is not finite");
    a = canonical_angle(a);
  }
}

TorusPoint act(const WeylElement& w, const TorusPoint& t) { return TorusPoint(act(w, t.angles())); }

Complex checked(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InvalidArgument("non-finite complex value");
  return z;
}

Complex eval_monomial(const TorusPoint& t, const Weight& mu) {
  if (mu.size() != t.size()) throw DimensionMismatch("monomial exponent and torus point of different rank");
  return std::polar(1.0, pairing(mu, t.angles()));
}

Complex root_factor(const Weight& alpha, const TorusPoint& t) {
  return Complex(0.0, 2.0 * std::sin(0.5 * pairing(alpha, t.angles())));
}

Complex weyl_denominator(const RootSystem& rs, const TorusPoint& t) {
  Complex d = 1.0;
  for (const auto& a : rs.positive_roots()) d *= root_factor(a, t);
  return d;
}

Complex restricted_denominator(const RootSystem& rs, const std::function<bool(const Weight&)>& keep,
                               const TorusPoint& t) {
  Complex d = 1.0;
  for (const auto& a : rs.positive_roots())
    if (keep(a)) d *= root_factor(a, t);
  return d;
}

bool is_regular(std::span<const Weight> roots, const TorusPoint& t, double tol) {
  if (!(tol > 0)) throw InvalidArgument("regularity tolerance must be positive");
  for (const auto& a : roots)
    if (std::abs(std::sin(0.5 * pairing(a, t.angles()))) < tol) return false;
  return true;
}

bool is_regular(const RootSystem& rs, const TorusPoint& t, double tol) {
  if (static_cast<std::size_t>(rs.rank()) != t.size()) throw DimensionMismatch("torus point of wrong rank");
  return is_regular(rs.positive_roots(), t, tol);
}

std::vector<TorusPoint> random_regular_points(std::span<const Weight> roots, std::size_t rank, int count,
                                              std::uint64_t seed, double margin) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<TorusPoint> out;
  std::vector<double> a(rank);
  while (static_cast<int>(out.size()) < count) {
    for (auto& x : a) x = u(rng);
    TorusPoint t(a);
    if (is_regular(roots, t, margin)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace howechar
