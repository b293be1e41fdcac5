#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "howechar/rootsys.hpp"
#include "howechar/torus.hpp"
#include "howechar/weight.hpp"

namespace howechar {

// The four compact dual pairs (G compact, G' its partner):
//   UU(n,p,q)       U(n) x U(p,q)
//   OevenSp(n,m)    O(2n) x Sp(2m,R)
//   OoddSp(n,m)     O(2n+1) x Sp(2m,R)
//   UHOstar(n,m)    U(n,H) x O*(2m)
enum class PairKind { UU, OevenSp, OoddSp, UHOstar };

std::string to_string(PairKind k);
// Accepts "uu", "oeven-sp", "oodd-sp", "uh-ostar" (and a few spellings).
PairKind parse_pair_kind(std::string_view s);

struct DualPairSpec {
  PairKind kind = PairKind::UU;
  int n = 1;
  int p = 0, q = 0;  // UU only
  int m = 0;         // the other three

  static DualPairSpec uu(int n, int p, int q);
  static DualPairSpec oeven_sp(int n, int m);
  static DualPairSpec oodd_sp(int n, int m);
  static DualPairSpec uh_ostar(int n, int m);

  // Coordinates of the G' torus: p+q or m.
  int gprime_rank() const;
  RootSystem g_roots() const;
  // With the K' roots marked compact.
  RootSystem gprime_roots() const;
  // ch-exponent offset: a_k = mu'_k - shift, b_k = -mu'_k - shift.
  Rational support_shift() const;
  // Constant part of the dual weights: (q-p)/2, -n, -(2n+1)/2, -n.
  Rational central_shift() const;
  std::string name() const;
};

struct CorrespondenceData {
  Weight nu;
  Weight mu;        // nu + rho
  Weight mu_prime;  // mu reversed
  Rational central_shift;
};

struct SupportInterval {
  int lo = 0;
  int hi = 0;
  std::vector<Rational> a, b;
};

// Throws NotInCorrespondence naming the violated condition.
CorrespondenceData validate_weight(const DualPairSpec& pair, const Weight& nu);
Weight reverse(const Weight& w);

SupportInterval support_interval(const DualPairSpec& pair, const CorrespondenceData& cd);

// Embedding parameters allowed by the interval (UU: also by the block sizes);
// a single 0 for the other pairs.  Throws OutsideSupport if none is left.
std::vector<int> admissible_splits(const DualPairSpec& pair, const SupportInterval& iv);

// 0-based positions of the embedded small torus inside the G' torus, in
// h-coordinate order.  `split` is ignored except for UU.
std::vector<int> embedded_index_set(const DualPairSpec& pair, int split);
// Same, checking split against the interval (OutsideSupport).
std::vector<int> embedded_index_set(const DualPairSpec& pair, const SupportInterval& iv, int split);

TorusPoint project(std::span<const int> index_set, const TorusPoint& t);
// Places an h-weight on the G' coordinates listed in index_set.
Weight embed(std::span<const int> index_set, const Weight& w, std::size_t gprime_rank);

// W(K',h') acting on all G' coordinates.  CapExceeded above kWeylRankCap.
std::vector<WeylElement> kprime_weyl(const DualPairSpec& pair);

// Sign placement for the B/C/D coset rule.  `lower_block_negative` puts the
// forced -1 signs on 1..lo and +1 on hi+1..n; `lower_block_positive` is the
// opposite placement.
enum class ConeOrientation { lower_block_negative, lower_block_positive };

// Representatives eta of W(G,h,m) / W(G,h)_m.
std::vector<WeylElement> eta_cosets(const DualPairSpec& pair, const SupportInterval& iv, int split,
                                    ConeOrientation orientation = ConeOrientation::lower_block_negative);

// Positive roots of G' with a nonzero coordinate in the index set, and the rest.
std::vector<Weight> restricted_roots(const RootSystem& gp, std::span<const int> index_set);
std::vector<Weight> vanishing_roots(const RootSystem& gp, std::span<const int> index_set);

Weight rho_z(const DualPairSpec& pair, int split);
std::vector<WeylElement> z_weyl(const DualPairSpec& pair, int split);

}  // namespace howechar
