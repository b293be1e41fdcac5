#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "howechar/weight.hpp"

namespace howechar {

// Finite sum of monomials h^e with rational coefficients, ordered along an
// integer chamber direction d.  A series may be known only above a horizon:
// every term with <e, d> >= horizon is exact, terms below are absent.  A
// series without a horizon is an exact Laurent polynomial.
class LaurentSeries {
 public:
  using Direction = std::vector<std::int64_t>;

  explicit LaurentSeries(Direction chamber);
  static LaurentSeries monomial(Direction chamber, const Weight& exponent, const Rational& coeff = 1);

  std::size_t rank() const { return chamber_.size(); }
  const Direction& chamber() const { return chamber_; }
  const std::optional<HalfInteger>& horizon() const { return horizon_; }
  bool is_exact() const { return !horizon_.has_value(); }
  const std::map<Weight, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Rational coefficient(const Weight& e) const;
  HalfInteger depth_pairing(const Weight& e) const { return pairing(e, chamber_); }
  // Largest pairing among stored terms.
  std::optional<HalfInteger> top_pairing() const;
  // Terms sorted by decreasing pairing, ties by exponent.
  std::vector<std::pair<Weight, Rational>> by_pairing() const;

  void add_term(const Weight& e, const Rational& c);
  // Drops terms below h and records h as the horizon (keeps the higher one).
  LaurentSeries truncated(HalfInteger h) const;
  // Declares the series exact down to h (replacing any previous horizon);
  // terms below h are dropped.
  LaurentSeries with_horizon(HalfInteger h) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const Rational& k);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

 private:
  void check_compatible(const LaurentSeries& o) const;
  void drop_below_horizon();

  Direction chamber_;
  std::optional<HalfInteger> horizon_;
  std::map<Weight, Rational> terms_;
};

// 1/(h^{b/2} - h^{-b/2}) expanded in the chamber, keeping `terms` terms of
// the geometric series.  Throws NonConvergentDirection if <b, d> = 0.
LaurentSeries expand_inverse_root_factor(const Weight& beta, const LaurentSeries::Direction& chamber, int terms);
// Same expansion, exact down to `depth` below its leading term.
LaurentSeries expand_inverse_root_factor_to_depth(const Weight& beta, const LaurentSeries::Direction& chamber,
                                                  HalfInteger depth);

// h^{b/2} - h^{-b/2} as an exact series.
LaurentSeries root_factor_series(const Weight& beta, const LaurentSeries::Direction& chamber);

// Coefficient of h^0.  Throws TruncationTooSmall if the horizon is above 0.
Rational constant_term(const LaurentSeries& s);

// Substitution values for h_1..h_r.
class RationalPoint {
 public:
  RationalPoint() = default;
  // Throws InvalidArgument on a zero entry.
  explicit RationalPoint(std::vector<Rational> values);
  std::size_t size() const { return v_.size(); }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  bool pairwise_distinct() const;

 private:
  std::vector<Rational> v_;
};

// Symbolic rational function in h_1..h_r, built from variables, constants,
// + - * / and integer powers; evaluated exactly.
class RationalExpr {
 public:
  static RationalExpr constant(const Rational& c);
  static RationalExpr variable(std::size_t index);

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  RationalExpr operator-() const;
  RationalExpr pow(int exponent) const;

  struct Node;

 private:
  explicit RationalExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend Rational eval_exact(const RationalExpr& e, const RationalPoint& p);
};

// Throws PoleAtPoint when a denominator vanishes at p.
Rational eval_exact(const RationalExpr& e, const RationalPoint& p);
// Requires an exact series with integral exponents (NonRationalExponent
// otherwise) and a point of matching rank.
Rational eval_exact(const LaurentSeries& s, const RationalPoint& p);

}  // namespace howechar
