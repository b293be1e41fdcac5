#include "howechar/thetachar.hpp"

#include <algorithm>
#include <cmath>

#include "howechar/error.hpp"

namespace howechar {

ThetaCharacter::ThetaCharacter(const DualPairSpec& pair, const Weight& nu, std::optional<int> split,
                               ConeOrientation orientation)
    : pair_(pair),
      cd_(validate_weight(pair, nu)),
      iv_(support_interval(pair, cd_)),
      gprime_(pair.gprime_roots()) {
  auto allowed = admissible_splits(pair_, iv_);
  if (split) {
    if (pair_.kind == PairKind::UU && std::find(allowed.begin(), allowed.end(), *split) == allowed.end())
      throw OutsideSupport("m = " + std::to_string(*split) + " is not admissible for " + pair_.name() + " at nu = " +
                           to_string(nu) + " (interval [" + std::to_string(iv_.lo) + ", " + std::to_string(iv_.hi) +
                           "])");
    split_ = pair_.kind == PairKind::UU ? *split : 0;
  } else {
    split_ = allowed.front();
  }
  index_set_ = embedded_index_set(pair_, iv_, split_);
  kprime_ = kprime_weyl(pair_);
  etas_ = eta_cosets(pair_, iv_, split_, orientation);
  const auto r = static_cast<std::size_t>(gprime_.rank());
  for (const auto& eta : etas_) {
    eta_exponents_.push_back(embed(index_set_, -act(inverse(eta), cd_.mu_prime), r));
    eta_signs_.push_back(sign(eta));
  }
  restricted_ = restricted_roots(gprime_, index_set_);
  auto vanishing = vanishing_roots(gprime_, index_set_);
  rho_z_ = rho_of(vanishing, r);
  z_group_ = reflection_group(vanishing, r);
}

void ThetaCharacter::set_normalization(const Rational& c) {
  if (c == 0) throw InvalidArgument("normalization must be nonzero");
  normalization_ = c;
}

Complex theta_eval(const ThetaCharacter& tc, const TorusPoint& t) {
  if (t.size() != static_cast<std::size_t>(tc.gprime().rank()))
    throw DimensionMismatch("torus point of length " + std::to_string(t.size()) + " for a rank " +
                            std::to_string(tc.gprime().rank()) + " torus");
  if (!is_regular(tc.gprime(), t)) throw SingularPoint("point is not regular for " + tc.pair().name());
  Complex total = 0.0;
  for (const auto& tau : tc.kprime_group()) {
    const TorusPoint s = act(tau, t);
    Complex den = 1.0;
    for (const auto& beta : tc.restricted()) {
      Complex f = root_factor(beta, s);
      if (std::abs(f) < kRegularTol) throw SingularPoint("denominator factor vanishes at " + to_string(beta));
      den *= f;
    }
    Complex num = 0.0;
    for (std::size_t e = 0; e < tc.etas().size(); ++e)
      num += static_cast<double>(tc.eta_signs()[e]) * eval_monomial(s, tc.eta_exponents()[e]);
    total += num / den;
  }
  if (tc.normalization()) total *= tc.normalization()->get_d();
  return checked(total);
}

Complex theta_numerator_form(const ThetaCharacter& tc, const TorusPoint& t) {
  if (t.size() != static_cast<std::size_t>(tc.gprime().rank())) throw DimensionMismatch("torus point of wrong length");
  Complex total = 0.0;
  for (const auto& tau : tc.kprime_group()) {
    const TorusPoint s = act(tau, t);
    Complex eta_sum = 0.0;
    for (std::size_t e = 0; e < tc.etas().size(); ++e)
      eta_sum += static_cast<double>(tc.eta_signs()[e]) * eval_monomial(s, tc.eta_exponents()[e]);
    Complex z_sum = 0.0;
    for (const auto& sigma : tc.z_group())
      z_sum += static_cast<double>(sign(sigma)) * eval_monomial(s, act(sigma, tc.rho_z()));
    total += static_cast<double>(sign(tau)) * eta_sum * z_sum;
  }
  if (tc.normalization()) total *= tc.normalization()->get_d();
  return checked(total);
}

LaurentSeries::Direction standard_chamber(int rank) {
  LaurentSeries::Direction d(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k) d[k] = rank - k;
  return d;
}

namespace {

// Exponent f' with (tau t)^f = t^{f'}.
Weight pullback(const WeylElement& tau, const Weight& f) {
  Weight out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[tau.perm[k]] += f[k] * tau.signs[k];
  return out;
}

}  // namespace

LaurentSeries numerator_series(const ThetaCharacter& tc) {
  LaurentSeries s(standard_chamber(tc.gprime().rank()));
  std::vector<Weight> z_exps;
  std::vector<int> z_signs;
  for (const auto& sigma : tc.z_group()) {
    z_exps.push_back(act(sigma, tc.rho_z()));
    z_signs.push_back(sign(sigma));
  }
  for (const auto& tau : tc.kprime_group()) {
    const int st = sign(tau);
    for (std::size_t e = 0; e < tc.etas().size(); ++e)
      for (std::size_t z = 0; z < z_exps.size(); ++z)
        s.add_term(pullback(tau, tc.eta_exponents()[e] + z_exps[z]), st * tc.eta_signs()[e] * z_signs[z]);
  }
  if (tc.normalization()) s *= *tc.normalization();
  return s;
}

Complex theta_u1_closed(int p, int q, std::int64_t lambda1, int split, const TorusPoint& t) {
  if (p < 1 || q < 1) throw InvalidArgument("closed form needs p, q >= 1");
  if (split != 0 && split != 1) throw InvalidArgument("closed form needs m in {0, 1}");
  const int N = p + q;
  if (t.size() != static_cast<std::size_t>(N)) throw DimensionMismatch("closed form needs p+q angles");
  std::vector<Complex> h(N);
  double half_sum = 0;
  for (int b = 0; b < N; ++b) {
    h[b] = std::polar(1.0, t[b]);
    half_sum += t[b] / 2;
  }
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (std::abs(h[a] - h[b]) < kRegularTol) throw SingularPoint("h_a = h_b in the closed form");
  const std::int64_t k = p - 1 - lambda1;
  const int from = split == 1 ? 0 : p, to = split == 1 ? p : N;
  Complex sum = 0.0;
  for (int b = from; b < to; ++b) {
    Complex den = 1.0;
    for (int a = 0; a < N; ++a)
      if (a != b) den *= h[b] - h[a];
    sum += std::pow(h[b], static_cast<double>(k)) / den;
  }
  return checked(std::polar(1.0, half_sum) * sum);
}

}  // namespace howechar
