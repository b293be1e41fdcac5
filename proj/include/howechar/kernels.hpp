#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "howechar/torus.hpp"

namespace howechar::kernels {

// Every data-parallel kernel takes an Exec.  Work is always split into the
// same fixed blocks and block results are combined in block order, so the
// serial and parallel paths return bit-identical results.
enum class Exec { serial, parallel };

// Reads HOWECHAR_THREADS (if set) and caps the OpenMP worker count.
void apply_thread_cap_from_env();
int worker_count();

struct BlockRange {
  std::uint64_t begin, end;
};
BlockRange block_range(std::uint64_t total, std::uint64_t blocks, std::uint64_t b);

// Runs body(b) for b in [0, blocks).  An exception escaping a block is
// rethrown after all blocks finish (the lowest-numbered one wins).
void for_each_block(std::uint64_t blocks, const std::function<void(std::uint64_t)>& body, Exec exec);

// Sum of f over the N^r product grid theta_k = 2 pi j / N + offsets[k].
// f returns nullopt for a point it refuses (singular); those are counted.
struct GridSum {
  Complex sum{0.0, 0.0};
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
};
using GridIntegrand = std::function<std::optional<Complex>(const TorusPoint&)>;
GridSum grid_sum(int points_per_axis, std::span<const double> offsets, const GridIntegrand& f, Exec exec);

// f at every point, in order.
std::vector<Complex> evaluate_batch(std::span<const TorusPoint> points,
                                    const std::function<Complex(const TorusPoint&)>& f, Exec exec);

}  // namespace howechar::kernels
