#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "howechar/error.hpp"
#include "howechar/kernels.hpp"
#include "howechar/rootsys.hpp"
#include "howechar/torus.hpp"

namespace howechar {

// <lambda, alpha> >= 0 for every positive root.
bool is_dominant(const RootSystem& rs, const Weight& lambda);
// Throws NotDominant.
void require_dominant(const RootSystem& rs, const Weight& lambda);

// Weyl's quotient sum_w sgn(w) e^{i w(lambda+rho)(theta)} / prod 2i sin(alpha(theta)/2).
// Throws SingularPoint off the regular set and NotDominant for bad lambda.
Complex weyl_character(const RootSystem& rs, const Weight& lambda, const TorusPoint& t);

// prod <lambda+rho, alpha> / <rho, alpha>, exact.
std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lambda);

inline constexpr int kSchurMaxSize = 12;
inline constexpr int kSchurMaxVariables = 5;

namespace detail {
void check_schur_caps(std::span<const int> partition, std::size_t variables);

// Walks Gelfand-Tsetlin patterns row by row; `upper` is the row above.
template <class T>
void gt_rows(std::span<const int> upper, std::span<const T> x, std::vector<int>& row, std::size_t pos,
             T weight, T& total, std::int64_t upper_sum) {
  const std::size_t len = upper.size() - 1;
  if (pos == len) {
    std::int64_t row_sum = 0;
    for (int v : row) row_sum += v;
    // x_{len+1} carries the content difference of the two rows.
    T w = weight;
    for (std::int64_t e = 0; e < upper_sum - row_sum; ++e) w = w * x[len];
    if (len == 0) {
      total = total + w;
      return;
    }
    std::vector<int> next;
    gt_rows<T>(std::span<const int>(row), x, next, 0, w, total, row_sum);
    return;
  }
  for (int v = upper[pos + 1]; v <= upper[pos]; ++v) {
    row.push_back(v);
    gt_rows<T>(upper, x, row, pos + 1, weight, total, upper_sum);
    row.pop_back();
  }
}
}  // namespace detail

// s_lambda(x) as a sum over Gelfand-Tsetlin patterns with top row lambda.
// T needs +, * and construction from int.
template <class T>
T schur_oracle(std::span<const int> partition, std::span<const T> x) {
  detail::check_schur_caps(partition, x.size());
  if (partition.size() != x.size()) throw DimensionMismatch("partition length must equal the number of variables");
  std::int64_t top = 0;
  for (int v : partition) top += v;
  T total = T(0);
  std::vector<int> row;
  detail::gt_rows<T>(partition, x, row, 0, T(1), total, top);
  return total;
}

// Number of Gelfand-Tsetlin patterns with top row `partition`.
std::int64_t gelfand_tsetlin_count(std::span<const int> partition);

// Uniform grid with N points per angle.  Coordinate k is shifted by
// (k + 1/2) pi / (N r) so that no difference or sum of two angles, and no
// single angle, lands on a multiple of 2 pi / N.
struct QuadratureGrid {
  int points_per_axis = 64;
  int rank = 1;
  std::vector<double> offsets() const;
};

struct InnerProduct {
  Complex value;
  std::uint64_t skipped = 0;
};

using ClassFunction = std::function<Complex(const TorusPoint&)>;

// (1/|W|) * grid average of f conj(g) |Delta|^2.  Points where f or g throws
// SingularPoint are skipped; more than 1% skipped throws QuadratureUnreliable.
InnerProduct torus_inner_product(const ClassFunction& f, const ClassFunction& g, const RootSystem& rs,
                                 const QuadratureGrid& grid, kernels::Exec exec = kernels::Exec::parallel);

}  // namespace howechar
