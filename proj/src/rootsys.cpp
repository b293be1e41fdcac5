#include "howechar/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "howechar/error.hpp"

namespace howechar {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw InvalidArgument("unknown root system family '" + std::string(s) + "'");
}

namespace {

Weight unit(int rank, int i, std::int64_t a, int j = -1, std::int64_t b = 0) {
  Weight w(static_cast<std::size_t>(rank));
  w[i] = a;
  if (j >= 0) w[j] = b;
  return w;
}

std::vector<Weight> classical_positive_roots(Family f, int n) {
  std::vector<Weight> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      roots.push_back(unit(n, i, 1, j, -1));
      if (f != Family::A) roots.push_back(unit(n, i, 1, j, 1));
    }
  for (int i = 0; i < n; ++i) {
    if (f == Family::B) roots.push_back(unit(n, i, 1));
    if (f == Family::C) roots.push_back(unit(n, i, 2));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

RootSystem build_root_system_allow_degenerate(Family family, int rank) {
  if (rank < 1) throw InvalidArgument("root system rank must be at least 1");
  return RootSystem(family, rank, classical_positive_roots(family, rank));
}

RootSystem build_root_system(Family family, int rank) {
  if (family == Family::D && rank == 1)
    throw InvalidArgument("D with rank 1 has no roots; not a root system");
  return build_root_system_allow_degenerate(family, rank);
}

std::vector<Weight> RootSystem::noncompact_positive_roots() const {
  std::vector<Weight> out;
  for (const auto& a : positive_)
    if (std::find(compact_.begin(), compact_.end(), a) == compact_.end()) out.push_back(a);
  return out;
}

RootSystem RootSystem::with_compact_roots(std::vector<Weight> compact) const {
  for (const auto& a : compact)
    if (!is_positive_root(a)) throw InvalidArgument("compact root " + to_string(a) + " is not a positive root");
  std::sort(compact.begin(), compact.end());
  compact.erase(std::unique(compact.begin(), compact.end()), compact.end());
  RootSystem r(*this);
  r.compact_ = std::move(compact);
  return r;
}

bool RootSystem::is_positive_root(const Weight& w) const {
  return std::binary_search(positive_.begin(), positive_.end(), w);
}

bool RootSystem::is_root(const Weight& w) const { return is_positive_root(w) || is_positive_root(-w); }

Weight rho_of(std::span<const Weight> positive_roots, std::size_t rank) {
  Weight sum(rank);
  for (const auto& a : positive_roots) sum += a;
  return half(sum);
}

Weight rho(const RootSystem& rs) {
  return rho_of(rs.positive_roots(), static_cast<std::size_t>(rs.rank()));
}

WeylElement WeylElement::identity(std::size_t rank) {
  WeylElement w;
  w.perm.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) w.perm[i] = static_cast<int>(i);
  w.signs.assign(rank, 1);
  return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("composing Weyl elements of different rank");
  // (a.(b.mu))_k = sa_k * (b.mu)_{pa(k)} = sa_k * sb_{pa(k)} * mu_{pb(pa(k))}
  WeylElement r;
  r.perm.resize(a.rank());
  r.signs.resize(a.rank());
  for (std::size_t k = 0; k < a.rank(); ++k) {
    int j = a.perm[k];
    r.perm[k] = b.perm[j];
    r.signs[k] = static_cast<std::int8_t>(a.signs[k] * b.signs[j]);
  }
  return r;
}

WeylElement inverse(const WeylElement& w) {
  // w maps e_{perm(k)} to signs_k e_k, so the inverse maps e_k to signs_k e_{perm(k)}.
  WeylElement r;
  r.perm.resize(w.rank());
  r.signs.resize(w.rank());
  for (std::size_t k = 0; k < w.rank(); ++k) {
    r.perm[w.perm[k]] = static_cast<int>(k);
    r.signs[w.perm[k]] = w.signs[k];
  }
  return r;
}

int sign(const WeylElement& w) {
  int s = 1;
  std::vector<bool> seen(w.rank(), false);
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w.perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  for (auto e : w.signs) s *= e;
  return s;
}

Weight act(const WeylElement& w, const Weight& mu) {
  if (mu.size() != w.rank()) throw DimensionMismatch("Weyl element and weight of different rank");
  Weight r(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) r[k] = w.signs[k] * mu[w.perm[k]];
  return r;
}

std::vector<double> act(const WeylElement& w, std::span<const double> x) {
  if (x.size() != w.rank()) throw DimensionMismatch("Weyl element and vector of different rank");
  std::vector<double> r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = w.signs[k] * x[w.perm[k]];
  return r;
}

WeylElement reflection(const Weight& root) {
  const std::size_t n = root.size();
  Rational norm = dot(root, root);
  if (norm == 0) throw InvalidArgument("reflection in the zero vector");
  WeylElement w = WeylElement::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    // s(e_j) = e_j - 2 <e_j, root>/<root, root> root
    Rational c = 2 * root[j].to_rational() / norm;
    int target = -1;
    int sg = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Rational v = (k == j ? Rational(1) : Rational(0)) - c * root[k].to_rational();
      if (v == 0) continue;
      if (target >= 0 || (v != 1 && v != -1))
        throw InvalidArgument("reflection in " + to_string(root) + " is not a signed permutation");
      target = static_cast<int>(k);
      sg = v > 0 ? 1 : -1;
    }
    // s(e_j) = sg e_target, i.e. perm(target) = j with sign sg.
    w.perm[target] = static_cast<int>(j);
    w.signs[target] = static_cast<std::int8_t>(sg);
  }
  return w;
}

std::uint64_t weyl_group_order(const RootSystem& rs) {
  std::uint64_t f = 1;
  for (int i = 2; i <= rs.rank(); ++i) f *= static_cast<std::uint64_t>(i);
  switch (rs.family()) {
    case Family::A: return f;
    case Family::B:
    case Family::C: return f << rs.rank();
    case Family::D: return f << (rs.rank() - 1);
  }
  return f;
}

WeylStream::WeylStream(const RootSystem& rs)
    : even_signs_only_(rs.family() == Family::D),
      with_signs_(rs.family() != Family::A),
      size_(weyl_group_order(rs)) {
  perm_.resize(static_cast<std::size_t>(rs.rank()));
  for (std::size_t i = 0; i < perm_.size(); ++i) perm_[i] = static_cast<int>(i);
}

std::optional<WeylElement> WeylStream::next() {
  if (done_) return std::nullopt;
  WeylElement w;
  w.perm = perm_;
  w.signs.resize(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) w.signs[k] = (mask_ >> k) & 1u ? -1 : 1;

  // advance
  const std::uint64_t limit = with_signs_ ? (std::uint64_t{1} << perm_.size()) : 1;
  std::uint64_t m = mask_ + 1;
  if (even_signs_only_)
    while (m < limit && std::popcount(m) % 2 != 0) ++m;
  if (m < limit) {
    mask_ = m;
  } else {
    mask_ = 0;
    if (!std::next_permutation(perm_.begin(), perm_.end())) done_ = true;
  }
  return w;
}

WeylStream weyl_elements(const RootSystem& rs) {
  if (rs.rank() > kWeylRankCap)
    throw CapExceeded("Weyl group enumeration capped at rank " + std::to_string(kWeylRankCap) + ", got " +
                      std::to_string(rs.rank()));
  return WeylStream(rs);
}

std::vector<WeylElement> weyl_group(const RootSystem& rs) {
  auto stream = weyl_elements(rs);
  std::vector<WeylElement> out;
  out.reserve(stream.size());
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

std::vector<WeylElement> reflection_group(std::span<const Weight> roots, std::size_t rank,
                                          std::size_t max_order) {
  if (rank > static_cast<std::size_t>(kWeylRankCap))
    throw CapExceeded("reflection group on " + std::to_string(rank) + " coordinates exceeds the cap");
  std::vector<WeylElement> gens;
  for (const auto& r : roots) gens.push_back(reflection(r));
  std::set<WeylElement> seen{WeylElement::identity(rank)};
  std::deque<WeylElement> todo{WeylElement::identity(rank)};
  while (!todo.empty()) {
    WeylElement w = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : gens) {
      WeylElement v = compose(g, w);
      if (seen.insert(v).second) {
        if (seen.size() > max_order) throw CapExceeded("reflection group larger than " + std::to_string(max_order));
        todo.push_back(std::move(v));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int c = 0;
  for (const auto& a : rs.positive_roots())
    if (rs.is_positive_root(-act(w, a))) ++c;
  return c;
}

}  // namespace howechar
