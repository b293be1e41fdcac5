#include "howechar/howe.hpp"

#include <algorithm>
#include <cctype>

#include "howechar/error.hpp"

namespace howechar {

std::string to_string(PairKind k) {
  switch (k) {
    case PairKind::UU: return "UU";
    case PairKind::OevenSp: return "OevenSp";
    case PairKind::OoddSp: return "OoddSp";
    case PairKind::UHOstar: return "UHOstar";
  }
  return "?";
}

PairKind parse_pair_kind(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != '-' && c != '_') t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "uu") return PairKind::UU;
  if (t == "oevensp") return PairKind::OevenSp;
  if (t == "ooddsp") return PairKind::OoddSp;
  if (t == "uhostar") return PairKind::UHOstar;
  throw InvalidArgument("unknown dual pair '" + std::string(s) + "' (expected uu, oeven-sp, oodd-sp, uh-ostar)");
}

DualPairSpec DualPairSpec::uu(int n, int p, int q) {
  if (n < 1 || p < 1 || q < 1) throw InvalidArgument("UU needs n, p, q >= 1");
  if (n > p + q) throw InvalidArgument("UU needs n <= p+q");
  DualPairSpec s;
  s.kind = PairKind::UU;
  s.n = n;
  s.p = p;
  s.q = q;
  return s;
}

static DualPairSpec other(PairKind k, int n, int m) {
  if (n < 1) throw InvalidArgument(to_string(k) + " needs n >= 1");
  if (n > m) throw InvalidArgument(to_string(k) + " needs n <= m");
  DualPairSpec s;
  s.kind = k;
  s.n = n;
  s.m = m;
  return s;
}

DualPairSpec DualPairSpec::oeven_sp(int n, int m) { return other(PairKind::OevenSp, n, m); }
DualPairSpec DualPairSpec::oodd_sp(int n, int m) { return other(PairKind::OoddSp, n, m); }
DualPairSpec DualPairSpec::uh_ostar(int n, int m) {
  // O*(2) has no roots; its D_1 torus is excluded like D_1 itself.
  if (m < 2) throw InvalidArgument("UHOstar needs m >= 2");
  return other(PairKind::UHOstar, n, m);
}

int DualPairSpec::gprime_rank() const { return kind == PairKind::UU ? p + q : m; }

RootSystem DualPairSpec::g_roots() const {
  switch (kind) {
    case PairKind::UU: return build_root_system(Family::A, n);
    case PairKind::OevenSp: return build_root_system_allow_degenerate(Family::D, n);
    case PairKind::OoddSp: return build_root_system(Family::B, n);
    case PairKind::UHOstar: return build_root_system(Family::C, n);
  }
  throw InternalConsistency("unknown pair kind");
}

RootSystem DualPairSpec::gprime_roots() const {
  const int r = gprime_rank();
  RootSystem rs = [&] {
    switch (kind) {
      case PairKind::UU: return build_root_system(Family::A, r);
      case PairKind::OevenSp:
      case PairKind::OoddSp: return build_root_system(Family::C, r);
      case PairKind::UHOstar: return build_root_system(Family::D, r);
    }
    throw InternalConsistency("unknown pair kind");
  }();
  std::vector<Weight> compact;
  for (const auto& a : rs.positive_roots()) {
    // e_i - e_j; for UU both indices in the same block.
    int i = -1, j = -1;
    bool difference = true;
    for (int k = 0; k < r; ++k) {
      if (a[k].twice() == 2) i = k;
      else if (a[k].twice() == -2) j = k;
      else if (a[k].twice() != 0) difference = false;
    }
    if (!difference || i < 0 || j < 0) continue;
    if (kind == PairKind::UU && ((i < p) != (j < p))) continue;
    compact.push_back(a);
  }
  return rs.with_compact_roots(std::move(compact));
}

Rational DualPairSpec::support_shift() const {
  switch (kind) {
    case PairKind::UU: return ratio(p + q - n - 1, 2);
    case PairKind::OevenSp: return Rational(m - n);
    case PairKind::OoddSp: return ratio(2 * (m - n) - 1, 2);
    case PairKind::UHOstar: return Rational(m - n - 1);
  }
  throw InternalConsistency("unknown pair kind");
}

Rational DualPairSpec::central_shift() const {
  switch (kind) {
    case PairKind::UU: return ratio(q - p, 2);
    case PairKind::OevenSp: return Rational(-n);
    case PairKind::OoddSp: return ratio(-(2 * n + 1), 2);
    case PairKind::UHOstar: return Rational(-n);
  }
  throw InternalConsistency("unknown pair kind");
}

std::string DualPairSpec::name() const {
  if (kind == PairKind::UU)
    return "UU(" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
  return to_string(kind) + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

Weight reverse(const Weight& w) {
  std::vector<HalfInteger> c(w.begin(), w.end());
  std::reverse(c.begin(), c.end());
  return Weight(std::move(c));
}

CorrespondenceData validate_weight(const DualPairSpec& pair, const Weight& nu) {
  if (nu.size() != static_cast<std::size_t>(pair.n))
    throw DimensionMismatch("nu has " + std::to_string(nu.size()) + " entries, expected n = " + std::to_string(pair.n));
  const Rational shift = pair.central_shift();
  std::vector<Rational> parts;
  for (const auto& v : nu) {
    Rational x = v.to_rational();
    if (pair.kind == PairKind::UU) x -= shift;
    if (x.get_den() != 1) {
      if (pair.kind == PairKind::UU)
        throw NotInCorrespondence("nu_a - (q-p)/2 must be an integer, got " + to_string(v));
      throw NotInCorrespondence("nu must have integer entries, got " + to_string(v));
    }
    parts.push_back(x);
  }
  for (std::size_t a = 1; a < parts.size(); ++a)
    if (parts[a] > parts[a - 1]) throw NotInCorrespondence("nu must be weakly decreasing");
  if (pair.kind == PairKind::UU) {
    auto pos = std::count_if(parts.begin(), parts.end(), [](const Rational& x) { return x > 0; });
    auto neg = std::count_if(parts.begin(), parts.end(), [](const Rational& x) { return x < 0; });
    if (pos > pair.q) throw NotInCorrespondence("more than q = " + std::to_string(pair.q) + " positive entries");
    if (neg > pair.p) throw NotInCorrespondence("more than p = " + std::to_string(pair.p) + " negative entries");
  } else if (!parts.empty() && parts.back() < 0) {
    throw NotInCorrespondence("nu must have nonnegative entries");
  }
  CorrespondenceData cd;
  cd.nu = nu;
  cd.mu = nu + rho(pair.g_roots());
  cd.mu_prime = reverse(cd.mu);
  cd.central_shift = shift;
  return cd;
}

SupportInterval support_interval(const DualPairSpec& pair, const CorrespondenceData& cd) {
  const Rational c = pair.support_shift();
  SupportInterval iv;
  iv.lo = 0;
  iv.hi = pair.n;
  bool hi_found = false;
  for (int k = 0; k < pair.n; ++k) {
    Rational mp = cd.mu_prime[k].to_rational();
    iv.a.push_back(mp - c);
    iv.b.push_back(-mp - c);
    if (iv.b.back() >= 1) iv.lo = k + 1;
    if (!hi_found && iv.a.back() >= 1) {
      iv.hi = k;
      hi_found = true;
    }
  }
  if (iv.lo > iv.hi) throw InternalConsistency("support interval with lo > hi");
  return iv;
}

std::vector<int> admissible_splits(const DualPairSpec& pair, const SupportInterval& iv) {
  if (pair.kind != PairKind::UU) return {0};
  std::vector<int> out;
  const int from = std::max({0, pair.n - pair.q, iv.lo});
  const int to = std::min({pair.p, pair.n, iv.hi});
  for (int s = from; s <= to; ++s) out.push_back(s);
  if (out.empty()) throw OutsideSupport("no embedding parameter fits both the interval and the block sizes");
  return out;
}

std::vector<int> embedded_index_set(const DualPairSpec& pair, int split) {
  std::vector<int> s;
  if (pair.kind != PairKind::UU) {
    for (int k = 0; k < pair.n; ++k) s.push_back(k);
    return s;
  }
  const int n = pair.n, N = pair.p + pair.q;
  if (split < std::max(0, n - pair.q) || split > std::min(pair.p, n))
    throw OutsideSupport("embedding parameter " + std::to_string(split) + " does not fit the blocks of " + pair.name());
  for (int k = 0; k < split; ++k) s.push_back(k);
  for (int k = N - n + split; k < N; ++k) s.push_back(k);
  return s;
}

std::vector<int> embedded_index_set(const DualPairSpec& pair, const SupportInterval& iv, int split) {
  if (pair.kind == PairKind::UU && (split < iv.lo || split > iv.hi))
    throw OutsideSupport("m = " + std::to_string(split) + " outside [" + std::to_string(iv.lo) + ", " +
                         std::to_string(iv.hi) + "]");
  return embedded_index_set(pair, split);
}

TorusPoint project(std::span<const int> index_set, const TorusPoint& t) {
  std::vector<double> a;
  a.reserve(index_set.size());
  for (int k : index_set) {
    if (k < 0 || static_cast<std::size_t>(k) >= t.size()) throw DimensionMismatch("index outside the torus");
    a.push_back(t[k]);
  }
  return TorusPoint(std::move(a));
}

Weight embed(std::span<const int> index_set, const Weight& w, std::size_t gprime_rank) {
  if (w.size() != index_set.size()) throw DimensionMismatch("weight and index set of different length");
  Weight out(gprime_rank);
  for (std::size_t j = 0; j < index_set.size(); ++j) out[index_set[j]] = w[j];
  return out;
}

std::vector<WeylElement> kprime_weyl(const DualPairSpec& pair) {
  const RootSystem gp = pair.gprime_roots();
  return reflection_group(gp.compact_positive_roots(), static_cast<std::size_t>(gp.rank()));
}

namespace {

// Subsets of {0..n-1} of the given size in lexicographic order.
void subsets(int n, int size, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, size, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<WeylElement> eta_cosets(const DualPairSpec& pair, const SupportInterval& iv, int split,
                                    ConeOrientation orientation) {
  const int n = pair.n;
  if (n > kWeylRankCap) throw CapExceeded("coset enumeration beyond rank " + std::to_string(kWeylRankCap));
  std::vector<WeylElement> out;
  if (pair.kind == PairKind::UU) {
    if (split < iv.lo || split > iv.hi) throw OutsideSupport("m outside the support interval");
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    subsets(n, split, 0, cur, all);
    for (const auto& first : all) {
      // first block must contain 1..lo and avoid hi+1..n
      bool ok = true;
      for (int k = 0; k < iv.lo && ok; ++k) ok = std::binary_search(first.begin(), first.end(), k);
      for (int k : first) ok = ok && k < iv.hi;
      if (!ok) continue;
      // eta sends position j to the j-th index of (first, rest)
      WeylElement inv = WeylElement::identity(n);
      std::size_t j = 0;
      for (int k : first) inv.perm[j++] = k;
      for (int k = 0; k < n; ++k)
        if (!std::binary_search(first.begin(), first.end(), k)) inv.perm[j++] = k;
      out.push_back(inverse(inv));
    }
  } else {
    const std::int8_t low = orientation == ConeOrientation::lower_block_negative ? -1 : 1;
    std::vector<int> free;
    WeylElement base = WeylElement::identity(n);
    for (int k = 0; k < n; ++k) {
      if (k < iv.lo) base.signs[k] = low;
      else if (k >= iv.hi) base.signs[k] = static_cast<std::int8_t>(-low);
      else free.push_back(k);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      WeylElement e = base;
      for (std::size_t f = 0; f < free.size(); ++f) e.signs[free[f]] = (mask >> f) & 1 ? -1 : 1;
      if (pair.kind == PairKind::OevenSp) {
        auto flips = std::count(e.signs.begin(), e.signs.end(), std::int8_t{-1});
        if (flips % 2) continue;
      }
      out.push_back(std::move(e));
    }
  }
  if (out.empty()) throw EmptyCosetSet("no Weyl element of G is compatible with the support of " + pair.name());
  return out;
}

std::vector<Weight> restricted_roots(const RootSystem& gp, std::span<const int> index_set) {
  std::vector<Weight> out;
  for (const auto& a : gp.positive_roots())
    if (std::any_of(index_set.begin(), index_set.end(), [&](int k) { return a[k].twice() != 0; })) out.push_back(a);
  return out;
}

std::vector<Weight> vanishing_roots(const RootSystem& gp, std::span<const int> index_set) {
  std::vector<Weight> out;
  for (const auto& a : gp.positive_roots())
    if (std::none_of(index_set.begin(), index_set.end(), [&](int k) { return a[k].twice() != 0; })) out.push_back(a);
  return out;
}

Weight rho_z(const DualPairSpec& pair, int split) {
  const RootSystem gp = pair.gprime_roots();
  auto s = embedded_index_set(pair, split);
  auto v = vanishing_roots(gp, s);
  return rho_of(v, static_cast<std::size_t>(gp.rank()));
}

std::vector<WeylElement> z_weyl(const DualPairSpec& pair, int split) {
  const RootSystem gp = pair.gprime_roots();
  auto s = embedded_index_set(pair, split);
  auto v = vanishing_roots(gp, s);
  return reflection_group(v, static_cast<std::size_t>(gp.rank()));
}

}  // namespace howechar
