#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "howechar/howe.hpp"
#include "howechar/kernels.hpp"
#include "howechar/rootsys.hpp"
#include "howechar/torus.hpp"

namespace howechar {

// Orbit parameter lambda with P_lambda = {alpha : <lambda, alpha> > 0}
// taken over all roots +-alpha.  Compact roots are those of `compact`.
struct OrbitParameter {
  Weight lambda;
  std::vector<Weight> positive_set;  // P_lambda
  int noncompact_count = 0;          // n(lambda)

  // All roots compact.
  OrbitParameter(const RootSystem& rs, Weight lambda);
  OrbitParameter(const RootSystem& rs, Weight lambda, std::span<const Weight> compact_roots);
};

// B(x, y) = scale * sum x_k y_k on the torus coordinates.
struct BilinearFormB {
  double scale = 0;
  static BilinearFormB for_pair(PairKind kind);  // -pi, or -2 pi for UHOstar
  double operator()(std::span<const double> x, std::span<const double> y) const;
};

// (-1)^{n(lambda)} sum_{w lambda distinct} e^{i <w lambda, x>} / prod_{alpha in P_lambda} i <w alpha, x>
// with w over the group generated by `compact_roots`.  Throws SingularPoint
// when some |<w alpha, x>| < tol.
Complex rdv_fourier(const RootSystem& rs, std::span<const Weight> compact_roots, const OrbitParameter& op,
                    std::span<const double> x, double tol = kRegularTol);
// Compact group: every root is compact.
Complex rdv_fourier(const RootSystem& rs, const OrbitParameter& op, std::span<const double> x,
                    double tol = kRegularTol);

// prod_{alpha in P_lambda} <lambda, alpha>
double liouville_normalization(const OrbitParameter& op);

// 1 / prod_{j=1}^{n-1} j!, the U(n) Haar-integral constant in the Liouville
// normalization; the orbit volume is this times liouville_normalization.
double orbit_volume_constant(int n);

// L * det[e^{i lambda_j x_k}] / (Delta(lambda) Delta(i x)) for U(n).
// Throws MonteCarloOnly for repeated lambda entries.
Complex hciz_oracle(std::span<const double> lambda, std::span<const double> x);

struct MonteCarloEstimate {
  Complex value;
  double standard_error = 0;  // of the complex mean
  std::uint64_t samples = 0;
};

// kappa * L * E_U[e^{i sum_jk x_j |U_jk|^2 lambda_k}] with U Haar on U(n).
// n <= 3 and samples >= 1e5.  Deterministic for a fixed seed regardless of
// thread count.
MonteCarloEstimate orbit_integral_monte_carlo(std::span<const double> lambda, std::span<const double> x,
                                              std::uint64_t samples, std::uint64_t seed,
                                              kernels::Exec exec = kernels::Exec::parallel);

}  // namespace howechar
