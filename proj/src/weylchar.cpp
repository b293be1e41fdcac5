#include "howechar/weylchar.hpp"

#include <cmath>
#include <numbers>

namespace howechar {

namespace {

// 4 <a, b>, exact in int64 for the sizes in use.
std::int64_t dot4(const Weight& a, const Weight& b) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k].twice() * b[k].twice();
  return s;
}

}  // namespace

bool is_dominant(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw DimensionMismatch("weight of wrong rank");
  for (const auto& a : rs.positive_roots())
    if (dot4(lambda, a) < 0) return false;
  return true;
}

void require_dominant(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda)) throw NotDominant(to_string(lambda) + " is not dominant");
}

Complex weyl_character(const RootSystem& rs, const Weight& lambda, const TorusPoint& t) {
  require_dominant(rs, lambda);
  if (!is_regular(rs, t)) throw SingularPoint("torus point is not regular");
  const Weight shifted = lambda + rho(rs);
  std::vector<double> e(shifted.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = shifted[k].to_double();
  Complex num = 0.0;
  auto stream = weyl_elements(rs);
  while (auto w = stream.next()) {
    // <w e, t> without building the weight
    double phase = 0;
    for (std::size_t k = 0; k < e.size(); ++k) phase += w->signs[k] * e[w->perm[k]] * t[k];
    num += static_cast<double>(sign(*w)) * std::polar(1.0, phase);
  }
  return checked(num / weyl_denominator(rs, t));
}

std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  const Weight r = rho(rs);
  const Weight shifted = lambda + r;
  Rational d = 1;
  for (const auto& a : rs.positive_roots()) d *= dot(shifted, a) / dot(r, a);
  d.canonicalize();
  if (d.get_den() != 1 || !d.get_num().fits_slong_p())
    throw InternalConsistency("Weyl dimension " + d.get_str() + " is not an integer");
  return d.get_num().get_si();
}

namespace detail {
void check_schur_caps(std::span<const int> partition, std::size_t variables) {
  if (variables < 1) throw InvalidArgument("need at least one variable");
  if (variables > static_cast<std::size_t>(kSchurMaxVariables))
    throw CapExceeded("schur oracle limited to " + std::to_string(kSchurMaxVariables) + " variables");
  int size = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] < 0 || (i > 0 && partition[i] > partition[i - 1]))
      throw InvalidArgument("partition must be weakly decreasing and nonnegative");
    size += partition[i];
  }
  if (size > kSchurMaxSize) throw CapExceeded("schur oracle limited to |lambda| <= " + std::to_string(kSchurMaxSize));
}
}  // namespace detail

std::int64_t gelfand_tsetlin_count(std::span<const int> partition) {
  std::vector<std::int64_t> ones(partition.size(), 1);
  return schur_oracle<std::int64_t>(partition, ones);
}

std::vector<double> QuadratureGrid::offsets() const {
  std::vector<double> o(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k)
    o[k] = (k + 0.5) * std::numbers::pi / (static_cast<double>(points_per_axis) * rank);
  return o;
}

InnerProduct torus_inner_product(const ClassFunction& f, const ClassFunction& g, const RootSystem& rs,
                                 const QuadratureGrid& grid, kernels::Exec exec) {
  if (grid.rank != rs.rank()) throw DimensionMismatch("quadrature grid rank differs from the root system rank");
  auto integrand = [&](const TorusPoint& t) -> std::optional<Complex> {
    try {
      Complex d = weyl_denominator(rs, t);
      return f(t) * std::conj(g(t)) * std::norm(d);
    } catch (const SingularPoint&) {
      return std::nullopt;
    }
  };
  auto s = kernels::grid_sum(grid.points_per_axis, grid.offsets(), integrand, exec);
  const double total = static_cast<double>(s.evaluated + s.skipped);
  if (static_cast<double>(s.skipped) > 0.01 * total)
    throw QuadratureUnreliable(std::to_string(s.skipped) + " of " + std::to_string(s.evaluated + s.skipped) +
                               " grid points were singular");
  const double order = static_cast<double>(weyl_group_order(rs));
  return {s.sum / (total * order), s.skipped};
}

}  // namespace howechar
