#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace howechar {

using Rational = mpq_class;

std::string to_string(const Rational& r);
// num/den in lowest terms (mpq_class's two-argument constructor does not
// canonicalize).
Rational ratio(long num, long den);
// Accepts "a", "-a", "a/b".  Throws InvalidArgument on anything else.
Rational parse_rational(std::string_view text);

// Element of (1/2)Z, stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  constexpr HalfInteger(std::int64_t n) : twice_(2 * n) {}  // NOLINT: integers are half-integers

  static constexpr HalfInteger from_twice(std::int64_t t) {
    HalfInteger h;
    h.twice_ = t;
    return h;
  }
  // Throws InvalidArgument unless r has denominator 1 or 2.
  static HalfInteger from_rational(const Rational& r);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // Only meaningful when is_integer().
  constexpr std::int64_t integer() const { return twice_ / 2; }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  Rational to_rational() const { return ratio(twice_, 2); }

  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  constexpr HalfInteger& operator+=(HalfInteger o) { twice_ += o.twice_; return *this; }
  constexpr HalfInteger& operator-=(HalfInteger o) { twice_ -= o.twice_; return *this; }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return a += b; }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) { return a -= b; }
  friend constexpr HalfInteger operator*(HalfInteger a, std::int64_t k) { return from_twice(a.twice_ * k); }
  friend constexpr HalfInteger operator*(std::int64_t k, HalfInteger a) { return a * k; }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  std::int64_t twice_ = 0;
};

std::string to_string(HalfInteger h);

// Coordinate vector in the e_k basis with entries in (1/2)Z.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank) {}
  explicit Weight(std::vector<HalfInteger> coords) : c_(std::move(coords)) {}
  Weight(std::initializer_list<HalfInteger> coords) : c_(coords) {}

  static Weight from_integers(std::span<const std::int64_t> v);
  static Weight from_rationals(std::span<const Rational> v);

  std::size_t size() const { return c_.size(); }
  HalfInteger operator[](std::size_t i) const { return c_[i]; }
  HalfInteger& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<HalfInteger>& coords() const { return c_; }

  bool is_integral() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(std::int64_t k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.c_ <=> b.c_; }

 private:
  std::vector<HalfInteger> c_;
};

// Halves an integral weight (used for the half-root exponents beta/2).
Weight half(const Weight& integral);

// Standard inner product sum a_k b_k, exact.
Rational dot(const Weight& a, const Weight& b);
// Pairing with an integer direction; lands in (1/2)Z.
HalfInteger pairing(const Weight& w, std::span<const std::int64_t> direction);
// Pairing with a real vector, sum w_k x_k.
double pairing(const Weight& w, std::span<const double> x);

std::string to_string(const Weight& w);

}  // namespace howechar
