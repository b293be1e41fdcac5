#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <string>
#include <vector>

#include "howechar/torus.hpp"
#include "howechar/weight.hpp"

namespace testing {

using howechar::Complex;
using howechar::HalfInteger;
using howechar::Weight;

inline constexpr double pi = std::numbers::pi;

// Entries must be integers or halves.
inline Weight W(std::initializer_list<double> v) {
  std::vector<HalfInteger> c;
  for (double x : v) c.push_back(HalfInteger::from_twice(std::llround(2 * x)));
  return Weight(c);
}

inline howechar::TorusPoint T(std::initializer_list<double> v) { return howechar::TorusPoint(std::vector<double>(v)); }

inline bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

inline double spread(const std::vector<Complex>& r) {
  double worst = 0;
  for (const auto& v : r) worst = std::max(worst, std::abs(v - r.front()) / std::abs(r.front()));
  return worst;
}

}  // namespace testing
