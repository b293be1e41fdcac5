#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "howechar/weight.hpp"

namespace howechar {

enum class Family { A, B, C, D };

std::string to_string(Family f);
Family parse_family(std::string_view s);

inline constexpr int kWeylRankCap = 10;

// Classical root data in the e_k basis.  Type A carries `rank` coordinates
// (roots e_i - e_j), so "A on n coordinates" is the root system of u(n).
class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const std::vector<Weight>& compact_positive_roots() const { return compact_; }
  // Positive roots not in the compact subset.
  std::vector<Weight> noncompact_positive_roots() const;

  // Copy with a compact subset marked.  Every root must be a positive root.
  RootSystem with_compact_roots(std::vector<Weight> compact) const;

  bool is_positive_root(const Weight& w) const;
  bool is_root(const Weight& w) const;

 private:
  friend RootSystem build_root_system(Family, int);
  friend RootSystem build_root_system_allow_degenerate(Family, int);
  RootSystem(Family f, int rank, std::vector<Weight> positive)
      : family_(f), rank_(rank), positive_(std::move(positive)) {}

  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<Weight> positive_;
  std::vector<Weight> compact_;
};

// Throws InvalidArgument for rank 0 and for D with rank 1.
RootSystem build_root_system(Family family, int rank);
// Same, but D with rank 1 is allowed and has no roots (the torus of SO(2)).
RootSystem build_root_system_allow_degenerate(Family family, int rank);

// Half the sum of the positive roots.
Weight rho(const RootSystem& rs);
Weight rho_of(std::span<const Weight> positive_roots, std::size_t rank);

// Signed permutation acting by (w.mu)_k = signs_k * mu_{perm(k)}.
struct WeylElement {
  std::vector<int> perm;           // 0-based
  std::vector<std::int8_t> signs;  // +1 / -1

  static WeylElement identity(std::size_t rank);
  std::size_t rank() const { return perm.size(); }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

// (a o b).mu = a.(b.mu)
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);
int sign(const WeylElement& w);
Weight act(const WeylElement& w, const Weight& mu);
std::vector<double> act(const WeylElement& w, std::span<const double> x);
// Reflection in a root whose reflection is a signed permutation (all
// classical roots are).
WeylElement reflection(const Weight& root);

// Lazy enumeration of the full Weyl group: permutations in lexicographic
// order, and for each permutation the admissible sign patterns in binary
// order.  Independent per instance.
class WeylStream {
 public:
  explicit WeylStream(const RootSystem& rs);
  std::optional<WeylElement> next();
  std::uint64_t size() const { return size_; }

 private:
  bool even_signs_only_ = false;
  bool with_signs_ = false;
  std::vector<int> perm_;
  std::uint64_t mask_ = 0;
  bool done_ = false;
  std::uint64_t size_ = 0;
};

// Throws CapExceeded if rank > kWeylRankCap.
WeylStream weyl_elements(const RootSystem& rs);
std::uint64_t weyl_group_order(const RootSystem& rs);
// Materialised group; same cap.
std::vector<WeylElement> weyl_group(const RootSystem& rs);

// Group generated by the reflections in `roots`, acting on `rank`
// coordinates, sorted.  Throws CapExceeded above `max_order` elements.
std::vector<WeylElement> reflection_group(std::span<const Weight> roots, std::size_t rank,
                                          std::size_t max_order = 4'000'000);

// Number of positive roots sent to negative roots by w.
int inversion_count(const RootSystem& rs, const WeylElement& w);

}  // namespace howechar
