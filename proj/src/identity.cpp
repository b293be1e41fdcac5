#include <algorithm>
#include <random>
#include <set>

#include "howechar/error.hpp"
#include "howechar/thetachar.hpp"

namespace howechar {

__extension__ typedef __int128 i128;

std::string to_string(IdentityVerdict v) {
  switch (v) {
    case IdentityVerdict::proved: return "proved";
    case IdentityVerdict::holds_at_samples: return "holds at samples";
    case IdentityVerdict::fails: return "fails";
    case IdentityVerdict::not_asserted: return "not in asserted range";
  }
  return "?";
}

namespace {

RationalExpr block_sum(int from, int to, int total, int k) {
  RationalExpr sum = RationalExpr::constant(0);
  for (int b = from; b < to; ++b) {
    RationalExpr den = RationalExpr::constant(1);
    for (int a = 0; a < total; ++a)
      if (a != b) den = den * (RationalExpr::variable(b) - RationalExpr::variable(a));
    sum = sum + RationalExpr::variable(b).pow(k) / den;
  }
  return sum;
}

}  // namespace

std::pair<Rational, Rational> vandermonde_sides(int p, int q, int k, const RationalPoint& h) {
  if (p < 1 || q < 1) throw InvalidArgument("identity needs p, q >= 1");
  if (k < 0) throw InvalidArgument("identity needs k >= 0");
  const int N = p + q;
  if (h.size() != static_cast<std::size_t>(N)) throw DimensionMismatch("point must have p+q coordinates");
  RationalExpr lhs = block_sum(p, N, N, k);
  RationalExpr rhs = -block_sum(0, p, N, k);
  return {eval_exact(lhs, h), eval_exact(rhs, h)};
}

bool GridSweep::all_hold() const {
  for (const auto& row : failures)
    for (auto f : row)
      if (f) return false;
  return true;
}

GridSweep vandermonde_grid_sweep(int total, kernels::Exec exec) {
  if (total < 2) throw InvalidArgument("grid sweep needs p+q >= 2");
  if (total > 9) throw CapExceeded("grid sweep limited to p+q <= 9");
  const int N = total;
  std::uint64_t count = 1;
  for (int i = 0; i < N; ++i) count *= static_cast<std::uint64_t>(N);
  const int K = N - 1;  // k = 0..N-2
  const std::uint64_t blocks = std::min<std::uint64_t>(count, 256);
  using Counts = std::vector<std::uint64_t>;
  std::vector<Counts> partial(blocks, Counts(static_cast<std::size_t>((N - 1) * K), 0));

  // Times the full Vandermonde prod_{a<c}(h_a - h_c), the b-th term is
  // (-1)^b h_b^k prod_{pairs without b}(h_a - h_c), a polynomial of degree
  // <= N-2 in each variable; N grid values per axis decide it.
  kernels::for_each_block(
      blocks,
      [&](std::uint64_t blk) {
        auto [lo, hi] = kernels::block_range(count, blocks, blk);
        Counts& fail = partial[blk];
        std::vector<i128> h(N), term(N), power(N), t(N);
        std::vector<char> candidate(N);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          std::uint64_t rest = idx;
          for (int i = 0; i < N; ++i) {
            h[i] = static_cast<i128>(rest % N) + 1;
            rest /= N;
          }
          // A term survives only if b lies in every coinciding pair.
          std::fill(candidate.begin(), candidate.end(), 1);
          for (int a = 0; a < N; ++a)
            for (int c = a + 1; c < N; ++c)
              if (h[a] == h[c])
                for (int b = 0; b < N; ++b)
                  if (b != a && b != c) candidate[b] = 0;
          bool any = false;
          for (int b = 0; b < N; ++b) {
            term[b] = 0;
            power[b] = 1;
            if (!candidate[b]) continue;
            i128 prod = (b % 2) ? -1 : 1;
            for (int a = 0; a < N; ++a)
              for (int c = a + 1; c < N; ++c)
                if (a != b && c != b) prod *= h[a] - h[c];
            term[b] = prod;
            any = true;
          }
          if (!any) continue;
          for (int k = 0; k < K; ++k) {
            for (int b = 0; b < N; ++b) t[b] = term[b] * power[b];
            i128 prefix = 0, all = 0;
            for (int b = 0; b < N; ++b) all += t[b];
            for (int p = 1; p < N; ++p) {
              prefix += t[p - 1];
              i128 lhs = all - prefix;  // b >= p
              i128 rhs = -prefix;
              if (lhs != rhs) ++fail[static_cast<std::size_t>((p - 1) * K + k)];
            }
            for (int b = 0; b < N; ++b) power[b] *= h[b];
          }
        }
      },
      exec);

  GridSweep out;
  out.total = N;
  out.points = count;
  out.failures.assign(N - 1, std::vector<std::uint64_t>(K, 0));
  for (const auto& part : partial)
    for (int p = 1; p < N; ++p)
      for (int k = 0; k < K; ++k) out.failures[p - 1][k] += part[static_cast<std::size_t>((p - 1) * K + k)];
  return out;
}

IdentityReport vandermonde_identity_check(int p, int q, int k, IdentityMode mode, std::uint64_t seed, int samples,
                                          kernels::Exec exec) {
  if (p < 1 || q < 1) throw InvalidArgument("identity needs p, q >= 1");
  if (k < 0) throw InvalidArgument("identity needs k >= 0");
  const int N = p + q;
  IdentityReport rep;
  if (k > N - 2) {
    std::vector<Rational> v;
    for (int b = 0; b < N; ++b) v.emplace_back(b + 2);
    auto [l, r] = vandermonde_sides(p, q, k, RationalPoint(v));
    rep.verdict = IdentityVerdict::not_asserted;
    rep.points = 1;
    rep.lhs = l;
    rep.rhs = r;
    return rep;
  }
  if (mode == IdentityMode::grid) {
    GridSweep s = vandermonde_grid_sweep(N, exec);
    rep.points = s.points;
    rep.verdict = s.failures[p - 1][k] == 0 ? IdentityVerdict::proved : IdentityVerdict::fails;
    return rep;
  }
  if (samples < 1) throw InvalidArgument("need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 17);
  rep.verdict = IdentityVerdict::holds_at_samples;
  for (int s = 0; s < samples; ++s) {
    std::set<Rational> used;
    std::vector<Rational> v;
    while (static_cast<int>(v.size()) < N) {
      const int a = num(rng);
      Rational x(a, den(rng));
      x.canonicalize();
      if (x == 0 || !used.insert(x).second) continue;
      v.push_back(x);
    }
    auto [l, r] = vandermonde_sides(p, q, k, RationalPoint(v));
    ++rep.points;
    if (l != r) {
      rep.verdict = IdentityVerdict::fails;
      rep.lhs = l;
      rep.rhs = r;
      break;
    }
  }
  return rep;
}

}  // namespace howechar
