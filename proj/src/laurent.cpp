#include "howechar/laurent.hpp"

#include <algorithm>
#include <set>

#include "howechar/error.hpp"

namespace howechar {

LaurentSeries::LaurentSeries(Direction chamber) : chamber_(std::move(chamber)) {
  if (chamber_.empty()) throw InvalidArgument("chamber direction must have positive length");
}

LaurentSeries LaurentSeries::monomial(Direction chamber, const Weight& exponent, const Rational& coeff) {
  LaurentSeries s(std::move(chamber));
  s.add_term(exponent, coeff);
  return s;
}

Rational LaurentSeries::coefficient(const Weight& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<HalfInteger> LaurentSeries::top_pairing() const {
  std::optional<HalfInteger> top;
  for (const auto& [e, c] : terms_) {
    HalfInteger p = depth_pairing(e);
    if (!top || p > *top) top = p;
  }
  return top;
}

std::vector<std::pair<Weight, Rational>> LaurentSeries::by_pairing() const {
  std::vector<std::pair<Weight, Rational>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    return depth_pairing(a.first) > depth_pairing(b.first);
  });
  return v;
}

void LaurentSeries::add_term(const Weight& e, const Rational& c) {
  if (e.size() != rank()) throw DimensionMismatch("exponent of length " + std::to_string(e.size()));
  if (c == 0) return;
  if (horizon_ && depth_pairing(e) < *horizon_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentSeries::drop_below_horizon() {
  if (!horizon_) return;
  std::erase_if(terms_, [&](const auto& kv) { return depth_pairing(kv.first) < *horizon_; });
}

LaurentSeries LaurentSeries::truncated(HalfInteger h) const {
  LaurentSeries s(*this);
  if (!s.horizon_ || *s.horizon_ < h) s.horizon_ = h;
  s.drop_below_horizon();
  return s;
}

LaurentSeries LaurentSeries::with_horizon(HalfInteger h) const {
  LaurentSeries s(*this);
  s.horizon_ = h;
  s.drop_below_horizon();
  return s;
}

void LaurentSeries::check_compatible(const LaurentSeries& o) const {
  if (o.chamber_ != chamber_) throw ChamberMismatch("series built on different chamber directions");
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  check_compatible(o);
  if (o.horizon_ && (!horizon_ || *horizon_ < *o.horizon_)) horizon_ = o.horizon_;
  drop_below_horizon();
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  check_compatible(o);
  if (o.horizon_ && (!horizon_ || *horizon_ < *o.horizon_)) horizon_ = o.horizon_;
  drop_below_horizon();
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  a.check_compatible(b);
  LaurentSeries r(a.chamber_);
  const bool a_zero = a.is_exact() && a.empty();
  const bool b_zero = b.is_exact() && b.empty();
  if (a_zero || b_zero) return r;

  // The unknown part of a (below its horizon) times the known part of b
  // lands below horizon_a + top_b, and symmetrically.
  std::optional<HalfInteger> h;
  auto raise = [&](HalfInteger v) {
    if (!h || *h < v) h = v;
  };
  auto top_or_horizon = [](const LaurentSeries& s) { return s.empty() ? *s.horizon_ : *s.top_pairing(); };
  if (a.horizon_) raise(*a.horizon_ + top_or_horizon(b));
  if (b.horizon_) raise(*b.horizon_ + top_or_horizon(a));
  r.horizon_ = h;

  auto av = a.by_pairing();
  auto bv = b.by_pairing();
  for (const auto& [ea, ca] : av) {
    HalfInteger pa = a.depth_pairing(ea);
    for (const auto& [eb, cb] : bv) {
      if (h && pa + b.depth_pairing(eb) < *h) break;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

namespace {

struct GeometricData {
  Weight lead;  // first exponent
  Weight step;  // ratio exponent
  Rational sign;
  HalfInteger step_pairing;  // > 0
};

GeometricData geometric(const Weight& beta, const LaurentSeries::Direction& chamber) {
  if (beta.size() != chamber.size()) throw DimensionMismatch("root and chamber of different rank");
  HalfInteger p = pairing(beta, chamber);
  if (p.twice() == 0) throw NonConvergentDirection("root " + to_string(beta) + " is orthogonal to the chamber");
  Weight hb = half(beta);
  if (p.twice() > 0) return {-hb, -beta, Rational(1), p};
  // 1/(h^{b/2} - h^{-b/2}) = -h^{b/2} sum_k h^{k b}
  return {hb, beta, Rational(-1), -p};
}

}  // namespace

LaurentSeries expand_inverse_root_factor(const Weight& beta, const LaurentSeries::Direction& chamber, int terms) {
  if (terms < 1) throw InvalidArgument("expansion needs at least one term");
  auto g = geometric(beta, chamber);
  LaurentSeries s(chamber);
  Weight e = g.lead;
  for (int k = 0; k < terms; ++k) {
    s.add_term(e, g.sign);
    if (k + 1 < terms) e += g.step;
  }
  return s.truncated(pairing(e, chamber));
}

LaurentSeries expand_inverse_root_factor_to_depth(const Weight& beta, const LaurentSeries::Direction& chamber,
                                                  HalfInteger depth) {
  if (depth.twice() < 0) throw InvalidArgument("negative expansion depth");
  auto g = geometric(beta, chamber);
  int terms = static_cast<int>(depth.twice() / g.step_pairing.twice()) + 1;
  LaurentSeries s = expand_inverse_root_factor(beta, chamber, terms);
  return s.with_horizon(pairing(g.lead, chamber) - depth);
}

LaurentSeries root_factor_series(const Weight& beta, const LaurentSeries::Direction& chamber) {
  LaurentSeries s(chamber);
  Weight hb = half(beta);
  s.add_term(hb, 1);
  s.add_term(-hb, -1);
  return s;
}

Rational constant_term(const LaurentSeries& s) {
  if (s.horizon() && s.horizon()->twice() > 0)
    throw TruncationTooSmall("constant term lies below the truncation horizon " + to_string(*s.horizon()));
  return s.coefficient(Weight(s.rank()));
}

RationalPoint::RationalPoint(std::vector<Rational> values) : v_(std::move(values)) {
  for (const auto& x : v_)
    if (x == 0) throw InvalidArgument("rational point coordinates must be nonzero");
}

bool RationalPoint::pairwise_distinct() const {
  std::set<Rational> s(v_.begin(), v_.end());
  return s.size() == v_.size();
}

struct RationalExpr::Node {
  enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow } kind;
  Rational value;
  std::size_t var = 0;
  int exponent = 0;
  std::shared_ptr<const Node> lhs, rhs;
};

RationalExpr RationalExpr::constant(const Rational& c) {
  return RationalExpr(std::make_shared<const Node>(Node{Node::Kind::Const, c, 0, 0, nullptr, nullptr}));
}

RationalExpr RationalExpr::variable(std::size_t index) {
  return RationalExpr(std::make_shared<const Node>(Node{Node::Kind::Var, 0, index, 0, nullptr, nullptr}));
}

static RationalExpr::Node binary(RationalExpr::Node::Kind k, std::shared_ptr<const RationalExpr::Node> a,
                                 std::shared_ptr<const RationalExpr::Node> b) {
  return RationalExpr::Node{k, 0, 0, 0, std::move(a), std::move(b)};
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr(std::make_shared<const RationalExpr::Node>(binary(RationalExpr::Node::Kind::Add, a.node_, b.node_)));
}
RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr(std::make_shared<const RationalExpr::Node>(binary(RationalExpr::Node::Kind::Sub, a.node_, b.node_)));
}
RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr(std::make_shared<const RationalExpr::Node>(binary(RationalExpr::Node::Kind::Mul, a.node_, b.node_)));
}
RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr(std::make_shared<const RationalExpr::Node>(binary(RationalExpr::Node::Kind::Div, a.node_, b.node_)));
}
RationalExpr RationalExpr::operator-() const {
  return RationalExpr(std::make_shared<const Node>(binary(Node::Kind::Neg, node_, nullptr)));
}
RationalExpr RationalExpr::pow(int exponent) const {
  auto n = binary(Node::Kind::Pow, node_, nullptr);
  n.exponent = exponent;
  return RationalExpr(std::make_shared<const Node>(std::move(n)));
}

namespace {

Rational power(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw PoleAtPoint("negative power of zero");
    return power(Rational(1) / x, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

Rational eval_node(const RationalExpr::Node& n, const RationalPoint& p) {
  using K = RationalExpr::Node::Kind;
  switch (n.kind) {
    case K::Const: return n.value;
    case K::Var:
      if (n.var >= p.size()) throw DimensionMismatch("variable index outside the point");
      return p[n.var];
    case K::Add: return eval_node(*n.lhs, p) + eval_node(*n.rhs, p);
    case K::Sub: return eval_node(*n.lhs, p) - eval_node(*n.rhs, p);
    case K::Mul: return eval_node(*n.lhs, p) * eval_node(*n.rhs, p);
    case K::Div: {
      Rational d = eval_node(*n.rhs, p);
      if (d == 0) throw PoleAtPoint("denominator vanishes at the evaluation point");
      return eval_node(*n.lhs, p) / d;
    }
    case K::Neg: return -eval_node(*n.lhs, p);
    case K::Pow: return power(eval_node(*n.lhs, p), n.exponent);
  }
  throw InternalConsistency("unknown expression node");
}

}  // namespace

Rational eval_exact(const RationalExpr& e, const RationalPoint& p) { return eval_node(*e.node_, p); }

Rational eval_exact(const LaurentSeries& s, const RationalPoint& p) {
  if (!s.is_exact()) throw InvalidArgument("cannot evaluate a truncated series at a point");
  if (s.rank() != p.size()) throw DimensionMismatch("series and point of different rank");
  Rational total = 0;
  for (const auto& [e, c] : s.terms()) {
    Rational m = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k].is_integer()) throw NonRationalExponent("half-integral exponent at a rational point");
      m *= power(p[k], e[k].integer());
    }
    total += m;
  }
  return total;
}

}  // namespace howechar
