#include "howechar/weight.hpp"

#include <charconv>

#include "howechar/error.hpp"

namespace howechar {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational ratio(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return InvalidArgument("not a rational number: '" + std::string(text) + "'"); };
  // Accept the typographic minus sign as well as '-'.
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      s += '-';
      i += 2;
    } else if (text[i] != ' ') {
      s += text[i];
    }
  }
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  const mpz_class n(num), d(den);
  if (d == 0) throw bad();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

HalfInteger HalfInteger::from_rational(const Rational& r) {
  Rational t = 2 * r;
  t.canonicalize();
  if (t.get_den() != 1 || !t.get_num().fits_slong_p())
    throw InvalidArgument("expected an integer or half-integer, got " + r.get_str());
  return from_twice(t.get_num().get_si());
}

std::string to_string(HalfInteger h) {
  if (h.is_integer()) return std::to_string(h.integer());
  return std::to_string(h.twice()) + "/2";
}

Weight Weight::from_integers(std::span<const std::int64_t> v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w.c_[i] = v[i];
  return w;
}

Weight Weight::from_rationals(std::span<const Rational> v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w.c_[i] = HalfInteger::from_rational(v[i]);
  return w;
}

bool Weight::is_integral() const {
  for (auto h : c_)
    if (!h.is_integer()) return false;
  return true;
}

bool Weight::is_zero() const {
  for (auto h : c_)
    if (h.twice() != 0) return false;
  return true;
}

static void check_same_size(const Weight& a, const Weight& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("weights of length " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
}

Weight& Weight::operator+=(const Weight& o) {
  check_same_size(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  check_same_size(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (auto& h : r.c_) h = -h;
  return r;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& h : a.c_) h = h * k;
  return a;
}

Weight half(const Weight& integral) {
  Weight r(integral.size());
  for (std::size_t i = 0; i < integral.size(); ++i) {
    if (!integral[i].is_integer()) throw InvalidArgument("half() of a non-integral weight");
    r[i] = HalfInteger::from_twice(integral[i].integer());
  }
  return r;
}

Rational dot(const Weight& a, const Weight& b) {
  check_same_size(a, b);
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += mpz_class(static_cast<long>(a[i].twice())) * static_cast<long>(b[i].twice());
  Rational r(s, 4);
  r.canonicalize();
  return r;
}

HalfInteger pairing(const Weight& w, std::span<const std::int64_t> direction) {
  if (w.size() != direction.size()) throw DimensionMismatch("pairing with direction of wrong length");
  std::int64_t t = 0;
  for (std::size_t i = 0; i < w.size(); ++i) t += w[i].twice() * direction[i];
  return HalfInteger::from_twice(t);
}

double pairing(const Weight& w, std::span<const double> x) {
  if (w.size() != x.size()) throw DimensionMismatch("pairing with vector of wrong length");
  double s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i].to_double() * x[i];
  return s;
}

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += to_string(w[i]);
  }
  return s + ")";
}

}  // namespace howechar
