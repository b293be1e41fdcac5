#include "howechar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "howechar/error.hpp"
#include "howechar/howe.hpp"
#include "howechar/orbits.hpp"
#include "howechar/thetachar.hpp"
#include "howechar/weylchar.hpp"

namespace howechar {

namespace {

using Partition = std::vector<int>;

void partitions_into(int len, int max_part, int budget, Partition& cur, std::vector<Partition>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= std::min(max_part, budget); ++v) {
    cur.push_back(v);
    partitions_into(len, v, budget - v, cur, out);
    cur.pop_back();
  }
}

// Decreasing nonnegative sequences of length n with sum <= size.
std::vector<Partition> partitions(int n, int size) {
  std::vector<Partition> out;
  Partition cur;
  partitions_into(n, size, size, cur, out);
  return out;
}

Weight to_weight(const Partition& p) {
  std::vector<std::int64_t> v(p.begin(), p.end());
  return Weight::from_integers(v);
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

// max |r_i - r_0| / |r_0|
double spread(const std::vector<Complex>& r) {
  double worst = 0;
  for (const auto& v : r) worst = std::max(worst, std::abs(v - r.front()) / std::abs(r.front()));
  return worst;
}

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

// nu for UU(1,p,q) from the U(1) weight lambda_1.
Weight uu1_nu(int p, int q, std::int64_t lambda1) {
  return Weight{HalfInteger(lambda1) + HalfInteger::from_twice(q - p)};
}

struct Instance {
  DualPairSpec pair;
  Weight nu;
};

// Decreasing sequences with entries shift + {lo..hi}.
void decreasing(int n, int lo, int hi, HalfInteger shift, std::vector<Weight>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == n) {
      Weight w(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) w[k] = HalfInteger(cur[k]) + shift;
      out.push_back(w);
      return;
    }
    for (int v = top; v >= lo; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(hi);
}

std::vector<Instance> corollary_instances() {
  std::vector<Instance> out;
  for (int n = 1; n <= 2; ++n)
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; p + q <= 4; ++q) {
        if (n > p + q) continue;
        const DualPairSpec pair = DualPairSpec::uu(n, p, q);
        std::vector<Weight> nus;
        decreasing(n, -2, 2, HalfInteger::from_twice(q - p), nus);
        for (const auto& nu : nus) out.push_back({pair, nu});
      }
  auto add = [&](const DualPairSpec& pair, std::vector<std::int64_t> nu) {
    out.push_back({pair, Weight::from_integers(nu)});
  };
  add(DualPairSpec::oeven_sp(1, 1), {1});
  add(DualPairSpec::oeven_sp(1, 2), {0});
  add(DualPairSpec::oeven_sp(2, 2), {1, 0});
  add(DualPairSpec::oeven_sp(2, 3), {0, 0});
  add(DualPairSpec::oeven_sp(2, 3), {2, 1});
  add(DualPairSpec::oodd_sp(1, 1), {0});
  add(DualPairSpec::oodd_sp(1, 2), {1});
  add(DualPairSpec::oodd_sp(2, 2), {1, 0});
  add(DualPairSpec::oodd_sp(2, 3), {1, 0});
  add(DualPairSpec::uh_ostar(1, 2), {0});
  add(DualPairSpec::uh_ostar(1, 3), {2});
  add(DualPairSpec::uh_ostar(2, 2), {1, 1});
  add(DualPairSpec::uh_ostar(2, 3), {1, 0});
  return out;
}

// --- 1, 2: Weyl character and dimension against Gelfand-Tsetlin ----------

CheckResult check_schur(const VerifyOptions& opt) {
  CheckResult r{.id = 1, .title = "Weyl character vs Schur oracle (n <= 4, |lambda| <= 6)"};
  double worst = 0;
  std::size_t cases = 0;
  for (int n = 1; n <= 4; ++n) {
    const RootSystem rs = build_root_system(Family::A, n);
    int idx = 0;
    for (const auto& lam : partitions(n, 6)) {
      const auto pts = random_regular_points(rs.positive_roots(), n, 20, opt.seed + 1000 * n + idx++);
      for (const auto& t : pts) {
        std::vector<Complex> x(n);
        for (int k = 0; k < n; ++k) x[k] = std::polar(1.0, t[k]);
        const Complex a = weyl_character(rs, to_weight(lam), t);
        const Complex b = schur_oracle<Complex>(lam, std::span<const Complex>(x));
        worst = std::max(worst, rel_err(a, b));
        ++cases;
      }
    }
  }
  r.passed = worst <= 1e-10;
  r.detail = std::to_string(cases) + " evaluations, worst relative error " + fmt(worst);
  return r;
}

CheckResult check_dimension(const VerifyOptions&) {
  CheckResult r{.id = 2, .title = "Weyl dimension equals Gelfand-Tsetlin count"};
  std::size_t cases = 0, bad = 0;
  std::string first;
  for (int n = 1; n <= 4; ++n) {
    const RootSystem rs = build_root_system(Family::A, n);
    for (const auto& lam : partitions(n, 6)) {
      const auto d = weyl_dimension(rs, to_weight(lam));
      const auto g = gelfand_tsetlin_count(lam);
      ++cases;
      if (d != g && bad++ == 0) first = to_string(to_weight(lam)) + ": " + std::to_string(d) + " vs " + std::to_string(g);
    }
  }
  r.passed = bad == 0;
  r.detail = std::to_string(cases) + " weights" + (bad ? ", " + std::to_string(bad) + " mismatches, first " + first : "");
  return r;
}

// --- 3: orthogonality ----------------------------------------------------

CheckResult check_orthogonality(const VerifyOptions& opt) {
  CheckResult r{.id = 3, .title = "Character orthogonality on the 64-point offset grid"};
  double worst = 0;
  std::size_t pairs = 0;
  std::uint64_t skipped = 0;
  for (int n = 1; n <= 3; ++n) {
    const RootSystem rs = build_root_system(Family::A, n);
    const auto lams = partitions(n, 4);
    for (std::size_t i = 0; i < lams.size(); ++i)
      for (std::size_t j = i; j < lams.size(); ++j) {
        const Weight a = to_weight(lams[i]), b = to_weight(lams[j]);
        ClassFunction f = [&rs, a](const TorusPoint& t) { return weyl_character(rs, a, t); };
        ClassFunction g = [&rs, b](const TorusPoint& t) { return weyl_character(rs, b, t); };
        const auto ip = torus_inner_product(f, g, rs, QuadratureGrid{64, n}, opt.exec);
        worst = std::max(worst, std::abs(ip.value - Complex(i == j ? 1.0 : 0.0)));
        skipped += ip.skipped;
        ++pairs;
      }
  }
  r.passed = worst <= 1e-8;
  r.detail = std::to_string(pairs) + " pairs, worst |<chi, chi'> - delta| " + fmt(worst) + ", " +
             std::to_string(skipped) + " singular grid points";
  return r;
}

// --- 4: the Vandermonde identity ------------------------------------------

CheckResult check_identity(const VerifyOptions& opt) {
  CheckResult r{.id = 4, .title = "Vandermonde identity, deterministic grid, p+q <= 8"};
  const int top = opt.quick ? 7 : 8;
  std::uint64_t points = 0;
  bool ok = true;
  std::string bad;
  for (int N = 2; N <= top; ++N) {
    const GridSweep s = vandermonde_grid_sweep(N, opt.exec);
    points += s.points;
    for (int p = 1; p < N; ++p)
      for (int k = 0; k <= N - 2; ++k)
        if (s.failures[p - 1][k]) {
          ok = false;
          bad += " (p=" + std::to_string(p) + ",q=" + std::to_string(N - p) + ",k=" + std::to_string(k) + ")";
        }
  }
  // Just past the range the identity is false.
  const auto out = vandermonde_identity_check(1, 1, 1, IdentityMode::grid);
  const bool flagged = out.verdict == IdentityVerdict::not_asserted && out.lhs != out.rhs;
  r.passed = ok && flagged;
  r.detail = "p+q = 2.." + std::to_string(top) + ", " + std::to_string(points) + " grid points" +
             (ok ? "" : ", failing:" + bad) + (flagged ? "" : ", k = p+q-1 not flagged");
  return r;
}

// --- 5, 6: the U(1) x U(p,q) case ------------------------------------------

CheckResult check_m_independence(const VerifyOptions& opt) {
  CheckResult r{.id = 5, .title = "m-independence for UU(1,p,q)"};
  double worst = 0;
  std::size_t cases = 0;
  std::string u11;
  bool u11_ok = false;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      const DualPairSpec pair = DualPairSpec::uu(1, p, q);
      const RootSystem gp = pair.gprime_roots();
      for (std::int64_t l = -q + 1; l < p; ++l) {
        const Weight nu = uu1_nu(p, q, l);
        const ThetaCharacter t0(pair, nu, 0), t1(pair, nu, 1);
        std::vector<Complex> ratios;
        for (const auto& t : random_regular_points(gp.positive_roots(), p + q, 10, opt.seed + 17 * p + 5 * q + l))
          ratios.push_back(theta_eval(t0, t) / theta_eval(t1, t));
        worst = std::max(worst, spread(ratios));
        ++cases;
        if (p == 1 && q == 1) {
          // The m = 0 embedding sits on the last coordinate, so its
          // denominator carries (-1)^{p+q-1} relative to the closed form.
          const int N = p + q;
          const double orient = (N - 1) % 2 ? -1.0 : 1.0;
          const double fac = double(factorial(p - 1) * factorial(q)) / double(factorial(p) * factorial(q - 1));
          const Complex factored = ratios.front() * fac * orient;
          u11_ok = std::abs(factored - Complex(-1.0)) <= 1e-9;
          u11 = "UU(1,1,1) raw ratio " + fmt(ratios.front().real()) + ", factored " + fmt(factored.real());
        }
      }
    }
  r.passed = worst <= 1e-9 && u11_ok;
  r.detail = std::to_string(cases) + " instances, worst spread " + fmt(worst) + "; " + u11;
  return r;
}

CheckResult check_closed_form(const VerifyOptions& opt) {
  CheckResult r{.id = 6, .title = "theta_eval vs the U(1) closed forms"};
  double worst = 0;
  std::size_t cases = 0;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      const DualPairSpec pair = DualPairSpec::uu(1, p, q);
      const RootSystem gp = pair.gprime_roots();
      for (std::int64_t l = -q - 2; l <= p + 2; ++l) {
        const Weight nu = uu1_nu(p, q, l);
        const auto splits = admissible_splits(pair, support_interval(pair, validate_weight(pair, nu)));
        for (int m : splits) {
          const ThetaCharacter tc(pair, nu, m);
          std::vector<Complex> ratios;
          for (const auto& t : random_regular_points(gp.positive_roots(), p + q, 10, opt.seed + 31 * p + 7 * q + l + m))
            ratios.push_back(theta_eval(tc, t) / theta_u1_closed(p, q, l, m, t));
          worst = std::max(worst, spread(ratios));
          ++cases;
        }
      }
    }
  r.passed = worst <= 1e-9;
  r.detail = std::to_string(cases) + " (p, q, lambda_1, m) instances, worst spread " + fmt(worst);
  return r;
}

// --- 7: numerator form ----------------------------------------------------

CheckResult check_corollary(const VerifyOptions& opt) {
  CheckResult r{.id = 7, .title = "Numerator form / (Delta * theta) is constant"};
  double worst = 0;
  std::size_t cases = 0, skipped = 0;
  std::set<std::string> kinds;
  std::uint64_t s = opt.seed;
  for (const auto& inst : corollary_instances()) {
    CorrespondenceData cd;
    try {
      cd = validate_weight(inst.pair, inst.nu);
    } catch (const NotInCorrespondence&) {
      continue;
    }
    const auto iv = support_interval(inst.pair, cd);
    std::vector<int> splits;
    try {
      splits = admissible_splits(inst.pair, iv);
    } catch (const OutsideSupport&) {
      ++skipped;
      continue;
    }
    const RootSystem gp = inst.pair.gprime_roots();
    for (int m : splits) {
      std::optional<ThetaCharacter> tc;
      try {
        tc.emplace(inst.pair, inst.nu, m);
      } catch (const EmptyCosetSet&) {
        ++skipped;
        continue;
      }
      std::vector<Complex> ratios;
      for (const auto& t : random_regular_points(gp.positive_roots(), gp.rank(), 10, ++s))
        ratios.push_back(theta_numerator_form(*tc, t) / (weyl_denominator(gp, t) * theta_eval(*tc, t)));
      worst = std::max(worst, spread(ratios));
      ++cases;
      kinds.insert(to_string(inst.pair.kind));
    }
  }
  r.passed = worst <= 1e-9 && kinds.size() == 4;
  r.detail = std::to_string(cases) + " instances over " + std::to_string(kinds.size()) + " pair kinds (" +
             std::to_string(skipped) + " without a character), worst spread " + fmt(worst);
  return r;
}

// --- 8: support intervals -------------------------------------------------

// m_min, m_max from the U(1) x U(p,q) case table.
std::vector<int> u1_table(int p, int q, std::int64_t l) {
  if (l <= -q) return {1};
  if (l >= p) return {0};
  return {0, 1};
}

struct AbOracle {
  std::vector<Rational> a, b;
  int lo = 0, hi = 0;
};

// a_k, b_k written directly in nu for O(2n) x Sp(2m) (odd = false) and
// O(2n+1) x Sp(2m) (odd = true), k = 1..n.
AbOracle sp_oracle(bool odd, int n, int m, const Weight& nu) {
  AbOracle o;
  o.hi = n;
  bool hi_set = false;
  for (int k = 1; k <= n; ++k) {
    const Rational v = nu[n - k].to_rational();
    const Rational a = v + k - m + n - (odd ? 0 : 1);
    const Rational b = -v - k - m + n + 1;
    o.a.push_back(a);
    o.b.push_back(b);
    if (b >= 1) o.lo = k;
    if (a >= 1 && !hi_set) {
      o.hi = k - 1;
      hi_set = true;
    }
  }
  return o;
}

CheckResult check_support(const VerifyOptions&) {
  CheckResult r{.id = 8, .title = "Support intervals vs the case tables"};
  std::size_t table = 0, bad = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (bad++ == 0) first = what;
  };
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) {
      const DualPairSpec pair = DualPairSpec::uu(1, p, q);
      for (std::int64_t l = -q - 2; l <= p + 2; ++l) {
        const auto splits = admissible_splits(pair, support_interval(pair, validate_weight(pair, uu1_nu(p, q, l))));
        ++table;
        if (splits != u1_table(p, q, l)) fail(pair.name() + " lambda_1 = " + std::to_string(l));
      }
    }
  std::size_t sp[2] = {0, 0};
  for (int odd = 0; odd <= 1; ++odd)
    for (int n = 1; n <= 2; ++n)
      for (int m = n; m <= 4; ++m) {
        const DualPairSpec pair = odd ? DualPairSpec::oodd_sp(n, m) : DualPairSpec::oeven_sp(n, m);
        std::vector<Weight> nus;
        decreasing(n, 0, 3, HalfInteger(0), nus);
        for (const auto& nu : nus) {
          const auto iv = support_interval(pair, validate_weight(pair, nu));
          const AbOracle o = sp_oracle(odd, n, m, nu);
          ++sp[odd];
          if (iv.a != o.a || iv.b != o.b || iv.lo != o.lo || iv.hi != o.hi)
            fail(pair.name() + " nu = " + to_string(nu) + ": [" + std::to_string(iv.lo) + ", " +
                 std::to_string(iv.hi) + "] vs [" + std::to_string(o.lo) + ", " + std::to_string(o.hi) + "]");
        }
      }
  r.passed = bad == 0 && sp[0] >= 20 && sp[1] >= 20;
  r.detail = std::to_string(table) + " UU(1,p,q) table entries, " + std::to_string(sp[0]) + " O(2n) and " +
             std::to_string(sp[1]) + " O(2n+1) instances" +
             (bad ? ", " + std::to_string(bad) + " mismatches, first " + first : "");
  return r;
}

// --- 9: orbit Fourier transforms -------------------------------------------

CheckResult check_orbits(const VerifyOptions& opt) {
  CheckResult r{.id = 9, .title = "RDV formula vs HCIZ and Haar Monte Carlo"};
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<int> entry(-4, 4);
  double worst_hciz = 0, worst_small = 0, worst_mc = 0;
  for (int n = 2; n <= 3; ++n) {
    const RootSystem rs = build_root_system(Family::A, n);
    for (int s = 0; s < 20; ++s) {
      std::set<int, std::greater<>> lam;
      while (static_cast<int>(lam.size()) < n) lam.insert(entry(rng));
      std::vector<std::int64_t> li(lam.begin(), lam.end());
      std::vector<double> ld(lam.begin(), lam.end()), x(n);
      bool spaced = false;
      while (!spaced) {
        for (auto& v : x) v = angle(rng);
        spaced = true;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) spaced = spaced && std::abs(x[i] - x[j]) > 0.05;
      }
      const OrbitParameter op(rs, Weight::from_integers(li));
      const Complex f = rdv_fourier(rs, op, x), h = hciz_oracle(ld, x);
      worst_hciz = std::max(worst_hciz, std::abs(f - h) / std::abs(h));
    }
  }
  const std::uint64_t samples = opt.quick ? 100000 : 1000000;
  struct Case {
    std::vector<std::int64_t> lambda;
    std::vector<double> x;
  };
  const std::vector<Case> mc_cases = {{{1, 0}, {1.0, -0.5}}, {{2, 1, 0}, {0.9, -0.3, 0.4}}};
  std::string mc_detail;
  for (const auto& c : mc_cases) {
    const int n = static_cast<int>(c.lambda.size());
    const RootSystem rs = build_root_system(Family::A, n);
    const OrbitParameter op(rs, Weight::from_integers(c.lambda));
    std::vector<double> ld(c.lambda.begin(), c.lambda.end());
    const auto est = orbit_integral_monte_carlo(ld, c.x, samples, opt.seed + n, opt.exec);
    const double z = std::abs(rdv_fourier(rs, op, c.x) - est.value) / est.standard_error;
    worst_mc = std::max(worst_mc, z);
    // Near X = 0 the transform is the orbit volume.
    std::vector<double> small(c.x);
    for (auto& v : small) v *= 1e-4;
    const double vol = orbit_volume_constant(n) * liouville_normalization(op);
    worst_small = std::max(worst_small, std::abs(rdv_fourier(rs, op, small) - vol) / vol);
  }
  r.passed = worst_hciz <= 1e-10 && worst_mc <= 3 && worst_small <= 1e-2;
  r.detail = "HCIZ worst relative " + fmt(worst_hciz) + " over 40 samples; Monte Carlo (" + std::to_string(samples) +
             " samples) worst " + fmt(worst_mc) + " SE; small-X relative " + fmt(worst_small);
  return r;
}

// --- 10: K-types ------------------------------------------------------------

// Dual weight of the minimal K'-type for the Sp / O* pairs with n = 1:
// tau_a = shift - nu_{m+1-a}, nu padded with zeros.
Weight dual_minimal(const DualPairSpec& pair, const Weight& nu) {
  const int m = pair.m;
  const HalfInteger shift = HalfInteger::from_rational(pair.central_shift());
  Weight w(static_cast<std::size_t>(m));
  for (int a = 1; a <= m; ++a) {
    const int j = m + 1 - a;
    w[a - 1] = shift - (j <= pair.n ? nu[j - 1] : HalfInteger(0));
  }
  return w;
}

CheckResult check_ktypes(const VerifyOptions&) {
  CheckResult r{.id = 10, .title = "K'-type expansion at depth 20"};
  const HalfInteger depth(20);
  std::size_t bad = 0, cases = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (bad++ == 0) first = what;
  };
  auto sane = [&](const KTypeExpansion& k, const std::string& name) {
    for (const auto& [g, mult] : k.multiplicities)
      if (mult < 0) fail(name + ": negative multiplicity");
    auto it = k.multiplicities.find(k.minimal);
    if (it == k.multiplicities.end() || it->second != 1) fail(name + ": minimal K-type multiplicity not 1");
  };
  // U(1) x U(1,1): 1 / (1 - h^{-beta}) ladder below the minimal K-type.
  const DualPairSpec u11 = DualPairSpec::uu(1, 1, 1);
  const Weight beta{HalfInteger(1), HalfInteger(-1)};
  for (std::int64_t l = -3; l <= 3; ++l) {
    const std::string name = "UU(1,1,1) lambda_1 = " + std::to_string(l);
    const KTypeExpansion k = ktype_expansion(ThetaCharacter(u11, Weight{HalfInteger(l)}), depth);
    ++cases;
    sane(k, name);
    const Weight expect_min{HalfInteger(std::max<std::int64_t>(-l, 0)) - HalfInteger::from_twice(1),
                            HalfInteger::from_twice(1) - HalfInteger(std::max<std::int64_t>(l, 0))};
    std::map<Weight, std::int64_t> ladder;
    for (std::int64_t j = 0; j <= 20; ++j) ladder[expect_min - j * beta] = 1;
    if (k.minimal != expect_min) fail(name + ": minimal " + to_string(k.minimal) + ", expected " + to_string(expect_min));
    else if (k.multiplicities != ladder) fail(name + ": ladder differs from the geometric series");
  }
  const std::vector<DualPairSpec> others = {DualPairSpec::oeven_sp(1, 1), DualPairSpec::oeven_sp(1, 2),
                                            DualPairSpec::oodd_sp(1, 1), DualPairSpec::uh_ostar(1, 2),
                                            DualPairSpec::uh_ostar(1, 3)};
  for (const auto& pair : others)
    for (std::int64_t v = 0; v <= 2; ++v) {
      const Weight nu{HalfInteger(v)};
      const std::string name = pair.name() + " nu = " + to_string(nu);
      const KTypeExpansion k = ktype_expansion(ThetaCharacter(pair, nu), depth);
      ++cases;
      sane(k, name);
      if (k.minimal != dual_minimal(pair, nu))
        fail(name + ": minimal " + to_string(k.minimal) + ", expected " + to_string(dual_minimal(pair, nu)));
    }
  r.passed = bad == 0;
  r.detail = std::to_string(cases) + " expansions" + (bad ? ", " + std::to_string(bad) + " problems, first " + first : "");
  return r;
}

// --- 11: Weyl denominator identity -----------------------------------------

CheckResult check_denominator(const VerifyOptions& opt) {
  CheckResult r{.id = 11, .title = "Weyl denominator: product vs alternating sum"};
  std::set<std::pair<std::size_t, std::vector<Weight>>> systems;
  for (int n = 1; n <= 4; ++n) systems.insert({n, build_root_system(Family::A, n).positive_roots()});
  for (int n = 1; n <= 3; ++n) {
    systems.insert({n, build_root_system(Family::B, n).positive_roots()});
    systems.insert({n, build_root_system(Family::C, n).positive_roots()});
    if (n >= 2) systems.insert({n, build_root_system(Family::D, n).positive_roots()});
  }
  for (const auto& inst : corollary_instances()) {
    try {
      const auto iv = support_interval(inst.pair, validate_weight(inst.pair, inst.nu));
      const RootSystem gp = inst.pair.gprime_roots();
      for (int m : admissible_splits(inst.pair, iv)) {
        auto v = vanishing_roots(gp, embedded_index_set(inst.pair, iv, m));
        if (!v.empty()) systems.insert({static_cast<std::size_t>(gp.rank()), v});
      }
    } catch (const Error&) {
    }
  }
  double worst = 0;
  std::uint64_t s = opt.seed;
  for (const auto& [rank, roots] : systems) {
    const Weight rho = rho_of(roots, rank);
    const auto group = reflection_group(roots, rank);
    for (const auto& t : random_regular_points(roots, rank, 50, ++s, 1e-12)) {
      Complex prod = 1.0, alt = 0.0;
      for (const auto& a : roots) prod *= root_factor(a, t);
      for (const auto& w : group) alt += static_cast<double>(sign(w)) * eval_monomial(t, act(w, rho));
      worst = std::max(worst, rel_err(alt, prod));
    }
  }
  r.passed = worst <= 1e-10;
  r.detail = std::to_string(systems.size()) + " root subsystems x 50 points, worst error " + fmt(worst);
  return r;
}

using CheckFn = CheckResult (*)(const VerifyOptions&);
constexpr CheckFn kChecks[kCheckCount] = {check_schur,     check_dimension, check_orthogonality, check_identity,
                                          check_m_independence, check_closed_form, check_corollary,
                                          check_support,   check_orbits,    check_ktypes,        check_denominator};
const char* kTitles[kCheckCount] = {"Weyl character vs Schur oracle",
                                    "Weyl dimension equals Gelfand-Tsetlin count",
                                    "Character orthogonality",
                                    "Vandermonde identity",
                                    "m-independence for UU(1,p,q)",
                                    "theta_eval vs the U(1) closed forms",
                                    "Numerator form consistency",
                                    "Support intervals",
                                    "Orbit Fourier transforms",
                                    "K'-type expansion",
                                    "Weyl denominator identity"};

}  // namespace

CheckResult run_check(int id, const VerifyOptions& opt) {
  if (id < 1 || id > kCheckCount) throw InvalidArgument("no check " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = kChecks[id - 1](opt);
  } catch (const Error& e) {
    r = {.id = id, .title = kTitles[id - 1], .passed = false, .detail = e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id, opt));
  return out;
}

}  // namespace howechar
