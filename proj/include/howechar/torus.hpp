#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "howechar/rootsys.hpp"
#include "howechar/weight.hpp"

namespace howechar {

using Complex = std::complex<double>;

inline constexpr double kRegularTol = 1e-9;

// Maps an angle to its representative in (-pi, pi].
double canonical_angle(double theta);

// Point on the compact torus, stored by angles in (-pi, pi].  Monomials with
// half-integral exponents are evaluated on this representative literally.
class TorusPoint {
 public:
  TorusPoint() = default;
  // Throws InvalidArgument on non-finite input.
  explicit TorusPoint(std::vector<double> angles);

  std::size_t size() const { return angles_.size(); }
  double operator[](std::size_t i) const { return angles_[i]; }
  std::span<const double> angles() const { return angles_; }

 private:
  std::vector<double> angles_;
};

TorusPoint act(const WeylElement& w, const TorusPoint& t);

// Throws InvalidArgument if the value is NaN or infinite.
Complex checked(Complex z);

// e^{i <mu, theta>}
Complex eval_monomial(const TorusPoint& t, const Weight& mu);

// h^{a/2} - h^{-a/2} = 2i sin(a(theta)/2)
Complex root_factor(const Weight& alpha, const TorusPoint& t);

// Product of root_factor over all positive roots.
Complex weyl_denominator(const RootSystem& rs, const TorusPoint& t);

// Product of root_factor over the positive roots selected by `keep`.
Complex restricted_denominator(const RootSystem& rs, const std::function<bool(const Weight&)>& keep,
                               const TorusPoint& t);

// |sin(a(theta)/2)| >= tol for every positive root.
bool is_regular(const RootSystem& rs, const TorusPoint& t, double tol = kRegularTol);
bool is_regular(std::span<const Weight> roots, const TorusPoint& t, double tol = kRegularTol);

// Uniform angles in (-pi, pi], redrawn until |sin(a(theta)/2)| >= margin for
// every listed root.  Same seed, same points.
std::vector<TorusPoint> random_regular_points(std::span<const Weight> roots, std::size_t rank, int count,
                                              std::uint64_t seed, double margin = 1e-2);

}  // namespace howechar
