#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "howechar/howe.hpp"
#include "howechar/kernels.hpp"
#include "howechar/laurent.hpp"
#include "howechar/torus.hpp"

namespace howechar {

// Character of the representation of G' attached to nu by the correspondence,
// realised through one admissible torus embedding (`split`, the UU block
// parameter; always 0 for the other pairs).  Defined up to a constant.
class ThetaCharacter {
 public:
  // Without a split, the smallest admissible one is used.
  ThetaCharacter(const DualPairSpec& pair, const Weight& nu, std::optional<int> split = std::nullopt,
                 ConeOrientation orientation = ConeOrientation::lower_block_negative);

  const DualPairSpec& pair() const { return pair_; }
  const CorrespondenceData& data() const { return cd_; }
  const SupportInterval& interval() const { return iv_; }
  int split() const { return split_; }
  const RootSystem& gprime() const { return gprime_; }
  const std::vector<int>& index_set() const { return index_set_; }
  const std::vector<WeylElement>& kprime_group() const { return kprime_; }
  const std::vector<WeylElement>& etas() const { return etas_; }
  // -eta^{-1} mu' placed on the G' coordinates, one per eta.
  const std::vector<Weight>& eta_exponents() const { return eta_exponents_; }
  const std::vector<int>& eta_signs() const { return eta_signs_; }
  const std::vector<Weight>& restricted() const { return restricted_; }
  const Weight& rho_z() const { return rho_z_; }
  const std::vector<WeylElement>& z_group() const { return z_group_; }

  const std::optional<Rational>& normalization() const { return normalization_; }
  // Throws InvalidArgument for C = 0.
  void set_normalization(const Rational& c);

 private:
  DualPairSpec pair_;
  CorrespondenceData cd_;
  SupportInterval iv_;
  int split_ = 0;
  RootSystem gprime_;
  std::vector<int> index_set_;
  std::vector<WeylElement> kprime_, etas_, z_group_;
  std::vector<Weight> eta_exponents_, restricted_;
  std::vector<int> eta_signs_;
  Weight rho_z_;
  std::optional<Rational> normalization_;
};

// sum_tau sum_eta sgn(eta) pr(tau t)^{-eta^{-1} mu'} / prod_{beta restricted} (tau t)^{beta/2} - (tau t)^{-beta/2}
// Multiplied by the normalization when one is set.  Throws SingularPoint.
Complex theta_eval(const ThetaCharacter& tc, const TorusPoint& t);

// Delta * Theta written as an alternating sum, with no denominator.
Complex theta_numerator_form(const ThetaCharacter& tc, const TorusPoint& t);

// The same numerator as an exact Laurent polynomial on the G' torus.
LaurentSeries numerator_series(const ThetaCharacter& tc);

// Direction (r, r-1, ..., 1) on an r-dimensional torus.
LaurentSeries::Direction standard_chamber(int rank);

// U(1) x U(p,q) single-sum closed forms; split 1 sums over the first block,
// split 0 over the second.  Throws SingularPoint if two h_b coincide.
Complex theta_u1_closed(int p, int q, std::int64_t lambda1, int split, const TorusPoint& t);

// Sum_{b>p} h_b^k / prod_{a!=b} (h_b - h_a) = - Sum_{b<=p} (same), k in [0, p+q-2].
enum class IdentityMode { random_rational, grid };
enum class IdentityVerdict { proved, holds_at_samples, fails, not_asserted };
std::string to_string(IdentityVerdict v);

struct IdentityReport {
  IdentityVerdict verdict = IdentityVerdict::fails;
  std::uint64_t points = 0;
  // Both sides at the first failing point, or at h = (2, 3, ...) for k
  // outside the asserted range.  `rhs` is -Sum_{b<=p}.
  std::optional<Rational> lhs, rhs;
};

IdentityReport vandermonde_identity_check(int p, int q, int k, IdentityMode mode, std::uint64_t seed = 1,
                                          int samples = 20, kernels::Exec exec = kernels::Exec::parallel);

// Polynomial form of every (p, k) identity for p+q = N on the grid
// {1..N}^N.  failures[p-1][k] counts grid points where it fails.
struct GridSweep {
  int total = 0;
  std::uint64_t points = 0;
  std::vector<std::vector<std::uint64_t>> failures;
  bool all_hold() const;
};
GridSweep vandermonde_grid_sweep(int total, kernels::Exec exec = kernels::Exec::parallel);

// Exact value of both sides at a rational point (PoleAtPoint on repeats).
std::pair<Rational, Rational> vandermonde_sides(int p, int q, int k, const RationalPoint& h);

// Compact data of G' needed to read off K'-types.
struct KPrimeData {
  std::vector<Weight> compact_positive;
  std::vector<WeylElement> group;
  std::vector<Weight> noncompact_positive;
};
KPrimeData kprime_data(const DualPairSpec& pair);

// C with C^{-1} = CT[ sum_sigma sgn(sigma) h^{-sigma(lambda+rho_c)} * P / Delta_noncompact ] / |W(K')|.
// The noncompact inverse factors are expanded `depth` deep along the chamber
// of `numerator`; depth and depth+5 must agree.  Throws NotDominant,
// TruncationTooSmall, NotMinimalKType.
Rational normalizing_constant(const LaurentSeries& numerator, const KPrimeData& kp, const Weight& lambda,
                              HalfInteger depth);
Rational normalizing_constant(const ThetaCharacter& tc, const Weight& lambda, HalfInteger depth);

struct KTypeExpansion {
  Weight minimal;  // highest weight of the minimal K'-type
  Rational constant;
  HalfInteger depth;
  std::map<Weight, std::int64_t> multiplicities;  // nonzero only
};

// K'-types gamma with <minimal - gamma, d> <= depth.  Throws
// FormulaInconsistency on a negative or fractional multiplicity, or (when
// check_skew) if the expansion is not W(K')-skew where it is known.
KTypeExpansion ktype_expansion(const ThetaCharacter& tc, HalfInteger depth, bool check_skew = true);

}  // namespace howechar
