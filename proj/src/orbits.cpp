#include "howechar/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include <Eigen/Dense>

#include "howechar/error.hpp"

namespace howechar {

OrbitParameter::OrbitParameter(const RootSystem& rs, Weight l) : OrbitParameter(rs, l, rs.positive_roots()) {}

OrbitParameter::OrbitParameter(const RootSystem& rs, Weight l, std::span<const Weight> compact_roots)
    : lambda(std::move(l)) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw DimensionMismatch("orbit parameter of wrong rank");
  for (const auto& a : rs.positive_roots()) {
    Rational p = dot(lambda, a);
    if (p == 0) continue;
    Weight chosen = p > 0 ? a : -a;
    positive_set.push_back(chosen);
    bool compact = std::find(compact_roots.begin(), compact_roots.end(), a) != compact_roots.end();
    if (!compact) ++noncompact_count;
  }
}

BilinearFormB BilinearFormB::for_pair(PairKind kind) {
  return {kind == PairKind::UHOstar ? -2 * std::numbers::pi : -std::numbers::pi};
}

double BilinearFormB::operator()(std::span<const double> x, std::span<const double> y) const {
  if (x.size() != y.size()) throw DimensionMismatch("B(x, y) on vectors of different length");
  double s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return scale * s;
}

Complex rdv_fourier(const RootSystem& rs, std::span<const Weight> compact_roots, const OrbitParameter& op,
                    std::span<const double> x, double tol) {
  if (x.size() != static_cast<std::size_t>(rs.rank())) throw DimensionMismatch("point of wrong rank");
  const auto group = reflection_group(compact_roots, x.size());
  std::set<Weight> seen;
  const Complex I(0.0, 1.0);
  Complex total = 0.0;
  for (const auto& w : group) {
    Weight wl = act(w, op.lambda);
    if (!seen.insert(wl).second) continue;
    Complex den = 1.0;
    for (const auto& a : op.positive_set) {
      double v = pairing(act(w, a), x);
      if (std::abs(v) < tol) throw SingularPoint("root " + to_string(act(w, a)) + " vanishes at the point");
      den *= I * v;
    }
    total += std::polar(1.0, pairing(wl, x)) / den;
  }
  if (op.noncompact_count % 2) total = -total;
  return checked(total);
}

Complex rdv_fourier(const RootSystem& rs, const OrbitParameter& op, std::span<const double> x, double tol) {
  return rdv_fourier(rs, rs.positive_roots(), op, x, tol);
}

double liouville_normalization(const OrbitParameter& op) {
  double l = 1;
  for (const auto& a : op.positive_set) l *= dot(op.lambda, a).get_d();
  return l;
}

double orbit_volume_constant(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  double c = 1, f = 1;
  for (int j = 1; j < n; ++j) {
    f *= j;
    c /= f;
  }
  return c;
}

namespace {

double vandermonde(std::span<const double> a) {
  double v = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) v *= a[i] - a[j];
  return v;
}

}  // namespace

Complex hciz_oracle(std::span<const double> lambda, std::span<const double> x) {
  const std::size_t n = lambda.size();
  if (x.size() != n) throw DimensionMismatch("lambda and x of different length");
  if (n < 1) throw InvalidArgument("empty orbit parameter");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (lambda[i] == lambda[j]) throw MonteCarloOnly("repeated lambda entries; use the Monte Carlo oracle");
  Eigen::MatrixXcd m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = std::polar(1.0, lambda[j] * x[k]);
  const double dl = vandermonde(lambda);
  double liouville = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) liouville *= std::abs(lambda[i] - lambda[j]);
  const Complex dx = std::pow(Complex(0, 1), static_cast<double>(n * (n - 1) / 2)) * vandermonde(x);
  if (std::abs(dx) < kRegularTol) throw SingularPoint("x has repeated entries");
  return checked(liouville * m.determinant() / (dl * dx));
}

MonteCarloEstimate orbit_integral_monte_carlo(std::span<const double> lambda, std::span<const double> x,
                                              std::uint64_t samples, std::uint64_t seed, kernels::Exec exec) {
  const std::size_t n = lambda.size();
  if (x.size() != n) throw DimensionMismatch("lambda and x of different length");
  if (n < 1 || n > 3) throw CapExceeded("Monte Carlo oracle supports n <= 3");
  if (samples < 100000) throw InvalidArgument("Monte Carlo oracle needs at least 1e5 samples");
  using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;

  double liouville = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) liouville *= std::abs(lambda[i] - lambda[j]);
  const double scale = orbit_volume_constant(static_cast<int>(n)) * liouville;

  constexpr std::uint64_t chunks = 64;
  std::vector<Complex> partial(chunks);
  kernels::for_each_block(
      chunks,
      [&](std::uint64_t c) {
        auto [lo, hi] = kernels::block_range(samples, chunks, c);
        std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(c)};
        std::mt19937_64 rng(ss);
        std::normal_distribution<double> g(0.0, std::sqrt(0.5));
        Mat z(n, n);
        Complex acc = 0.0;
        for (auto s = lo; s < hi; ++s) {
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              const double re = g(rng);
              z(i, j) = Complex(re, g(rng));
            }
          Eigen::HouseholderQR<Mat> qr(z);
          Mat q = qr.householderQ();
          const Mat& r = qr.matrixQR();
          for (std::size_t j = 0; j < n; ++j) {
            Complex d = r(j, j);
            q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0);
          }
          double phase = 0;
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) phase += x[j] * std::norm(q(j, k)) * lambda[k];
          acc += std::polar(1.0, phase);
        }
        partial[c] = acc;
      },
      exec);

  Complex sum = 0.0;
  for (const auto& p : partial) sum += p;
  const double N = static_cast<double>(samples);
  const Complex mean = sum / N;
  // |f| = 1, so E|f - Ef|^2 = 1 - |Ef|^2.
  const double var = std::max(0.0, 1.0 - std::norm(mean));
  return {scale * mean, scale * std::sqrt(var / N), samples};
}

}  // namespace howechar
