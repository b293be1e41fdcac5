#include <algorithm>
#include <cstdlib>

#include "howechar/error.hpp"
#include "howechar/thetachar.hpp"

namespace howechar {

KPrimeData kprime_data(const DualPairSpec& pair) {
  const RootSystem gp = pair.gprime_roots();
  return {gp.compact_positive_roots(), kprime_weyl(pair), gp.noncompact_positive_roots()};
}

namespace {

bool strictly_dominant(const Weight& e, const std::vector<Weight>& compact) {
  for (const auto& a : compact)
    if (dot(e, a) <= 0) return false;
  return true;
}

LaurentSeries divide_noncompact(const LaurentSeries& numerator, const std::vector<Weight>& noncompact,
                                HalfInteger depth) {
  LaurentSeries f = numerator;
  for (const auto& beta : noncompact) f = f * expand_inverse_root_factor_to_depth(beta, numerator.chamber(), depth);
  return f;
}

LaurentSeries alternating(const Weight& e, const std::vector<WeylElement>& group, const LaurentSeries::Direction& d) {
  LaurentSeries s(d);
  for (const auto& w : group) s.add_term(-act(w, e), sign(w));
  return s;
}

// Depth needed so that F * alt(e) is known down to pairing 0.
HalfInteger depth_for_constant(const LaurentSeries& numerator, const std::vector<Weight>& noncompact, const Weight& e,
                               const std::vector<WeylElement>& group) {
  const auto& d = numerator.chamber();
  HalfInteger top_f = numerator.top_pairing().value_or(HalfInteger(0));
  for (const auto& beta : noncompact) {
    // lead of 1/(h^{b/2} - h^{-b/2}) sits at -|<b,d>|/2
    top_f = top_f - HalfInteger::from_twice(std::abs(pairing(beta, d).twice()) / 2);
  }
  HalfInteger top_alt = -pairing(e, d);
  for (const auto& w : group) top_alt = std::max(top_alt, -pairing(act(w, e), d));
  HalfInteger need = top_f + top_alt;
  return need > 0 ? need : HalfInteger(0);
}

}  // namespace

Rational normalizing_constant(const LaurentSeries& numerator, const KPrimeData& kp, const Weight& lambda,
                              HalfInteger depth) {
  if (lambda.size() != numerator.rank()) throw DimensionMismatch("K'-weight of wrong length");
  for (const auto& a : kp.compact_positive)
    if (dot(lambda, a) < 0) throw NotDominant(to_string(lambda) + " is not dominant for K'");
  const Weight e = lambda + rho_of(kp.compact_positive, numerator.rank());
  const LaurentSeries alt = alternating(e, kp.group, numerator.chamber());
  auto at = [&](HalfInteger D) {
    LaurentSeries prod = alt * divide_noncompact(numerator, kp.noncompact_positive, D);
    return constant_term(prod);
  };
  const Rational c1 = at(depth);
  const Rational c2 = at(depth + 5);
  if (c1 != c2)
    throw TruncationTooSmall("constant term moved from " + to_string(c1) + " to " + to_string(c2) +
                             " between depth " + to_string(depth) + " and " + to_string(depth + 5));
  if (c1 == 0) throw NotMinimalKType(to_string(lambda) + " does not occur in the expansion");
  return Rational(static_cast<long>(kp.group.size())) / c1;
}

Rational normalizing_constant(const ThetaCharacter& tc, const Weight& lambda, HalfInteger depth) {
  LaurentSeries p = numerator_series(tc);
  if (tc.normalization()) p *= 1 / *tc.normalization();
  return normalizing_constant(p, kprime_data(tc.pair()), lambda, depth);
}

KTypeExpansion ktype_expansion(const ThetaCharacter& tc, HalfInteger depth, bool check_skew) {
  if (depth < 0) throw InvalidArgument("negative expansion depth");
  LaurentSeries numerator = numerator_series(tc);
  if (tc.normalization()) numerator *= 1 / *tc.normalization();
  const KPrimeData kp = kprime_data(tc.pair());
  const std::size_t r = numerator.rank();
  const Weight rho_c = rho_of(kp.compact_positive, r);
  if (numerator.empty()) throw FormulaInconsistency("numerator vanishes identically");
  // OoddSp with m > n lands here: the embedded coordinates are half-integral,
  // the rest integral, so no term is a K'-weight.
  for (const auto& [e, c] : numerator.terms())
    for (const auto& a : kp.compact_positive) {
      const Rational v = dot(e, a);
      if (v.get_den() != 1)
        throw FormulaInconsistency("numerator term " + to_string(e) + " mixes integral and half-integral coordinates");
    }

  HalfInteger D = depth;
  std::optional<LaurentSeries> f;
  std::optional<Weight> top;
  for (int attempt = 0; attempt < 8; ++attempt) {
    f = divide_noncompact(numerator, kp.noncompact_positive, D);
    top.reset();
    for (const auto& [e, c] : f->by_pairing())
      if (strictly_dominant(e, kp.compact_positive)) {
        top = e;
        break;
      }
    if (top) {
      HalfInteger floor = f->depth_pairing(*top) - depth;
      if (!f->horizon() || *f->horizon() <= floor) break;
      D = D + (*f->horizon() - floor);
      top.reset();
    } else {
      D = D + depth + 1;
    }
  }
  if (!top) throw TruncationTooSmall("no dominant term found within the expansion depth");

  KTypeExpansion out;
  out.minimal = *top - rho_c;
  out.depth = depth;
  HalfInteger cd = std::max(D, depth_for_constant(numerator, kp.noncompact_positive, *top, kp.group));
  out.constant = normalizing_constant(numerator, kp, out.minimal, cd);

  const HalfInteger floor = f->depth_pairing(*top) - depth;
  for (const auto& [e, c] : f->terms()) {
    if (f->depth_pairing(e) < floor) continue;
    if (check_skew) {
      for (const auto& w : kp.group) {
        Weight we = act(w, e);
        if (f->horizon() && f->depth_pairing(we) < *f->horizon()) continue;
        if (f->coefficient(we) != c * sign(w))
          throw FormulaInconsistency("expansion is not W(K')-skew at " + to_string(e));
      }
    }
    if (!strictly_dominant(e, kp.compact_positive)) continue;
    Rational m = out.constant * c;
    if (m.get_den() != 1 || m < 0 || !m.get_num().fits_slong_p())
      throw FormulaInconsistency("multiplicity " + to_string(m) + " at " + to_string(e - rho_c));
    if (m != 0) out.multiplicities[e - rho_c] = m.get_num().get_si();
  }
  return out;
}

}  // namespace howechar
