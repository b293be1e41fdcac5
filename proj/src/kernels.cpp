#include "howechar/kernels.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <string_view>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "howechar/error.hpp"

namespace howechar::kernels {

void apply_thread_cap_from_env() {
  const char* env = std::getenv("HOWECHAR_THREADS");
  if (!env) return;
  std::string_view s(env);
  int n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size() || n < 1)
    throw InvalidArgument("HOWECHAR_THREADS must be a positive integer");
#if defined(_OPENMP)
  omp_set_num_threads(n);
#endif
}

int worker_count() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

BlockRange block_range(std::uint64_t total, std::uint64_t blocks, std::uint64_t b) {
  return {total * b / blocks, total * (b + 1) / blocks};
}

void for_each_block(std::uint64_t blocks, const std::function<void(std::uint64_t)>& body, Exec exec) {
  std::vector<std::exception_ptr> errors(blocks);
  auto run = [&](std::uint64_t b) {
    try {
      body(b);
    } catch (...) {
      errors[b] = std::current_exception();
    }
  };
  if (exec == Exec::parallel) {
    const auto n = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < n; ++b) run(static_cast<std::uint64_t>(b));
  } else {
    for (std::uint64_t b = 0; b < blocks; ++b) run(b);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

GridSum grid_sum(int points_per_axis, std::span<const double> offsets, const GridIntegrand& f, Exec exec) {
  if (points_per_axis < 2) throw InvalidArgument("quadrature grid needs at least 2 points per axis");
  const std::size_t rank = offsets.size();
  const auto N = static_cast<std::uint64_t>(points_per_axis);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < rank; ++k) {
    if (total > (std::uint64_t{1} << 40) / N) throw CapExceeded("quadrature grid too large");
    total *= N;
  }
  const std::uint64_t blocks = std::min<std::uint64_t>(total, 256);
  std::vector<GridSum> partial(blocks);
  const double step = 2 * std::numbers::pi / static_cast<double>(N);

  for_each_block(
      blocks,
      [&](std::uint64_t b) {
        auto [lo, hi] = block_range(total, blocks, b);
        GridSum acc;
        std::vector<double> angles(rank);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          std::uint64_t rest = idx;
          for (std::size_t k = 0; k < rank; ++k) {
            angles[k] = step * static_cast<double>(rest % N) + offsets[k];
            rest /= N;
          }
          auto v = f(TorusPoint(angles));
          if (v) {
            acc.sum += *v;
            ++acc.evaluated;
          } else {
            ++acc.skipped;
          }
        }
        partial[b] = acc;
      },
      exec);

  GridSum out;
  for (const auto& p : partial) {
    out.sum += p.sum;
    out.evaluated += p.evaluated;
    out.skipped += p.skipped;
  }
  return out;
}

std::vector<Complex> evaluate_batch(std::span<const TorusPoint> points,
                                    const std::function<Complex(const TorusPoint&)>& f, Exec exec) {
  std::vector<Complex> out(points.size());
  const std::uint64_t blocks = std::min<std::uint64_t>(points.size(), 64);
  for_each_block(
      blocks,
      [&](std::uint64_t b) {
        auto [lo, hi] = block_range(points.size(), blocks, b);
        for (auto i = lo; i < hi; ++i) out[i] = f(points[i]);
      },
      exec);
  return out;
}

}  // namespace howechar::kernels
