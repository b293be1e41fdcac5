#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "howechar/error.hpp"
#include "howechar/kernels.hpp"
#include "howechar/thetachar.hpp"
#include "howechar/weylchar.hpp"
#include "support.hpp"

using namespace howechar;
using kernels::Exec;

TEST_CASE("block ranges tile the work") {
  for (std::uint64_t total : {0u, 1u, 7u, 64u, 1000u}) {
    std::uint64_t next = 0;
    for (std::uint64_t b = 0; b < 16; ++b) {
      const auto r = kernels::block_range(total, 16, b);
      CHECK(r.begin == next);
      CHECK(r.end >= r.begin);
      next = r.end;
    }
    CHECK(next == total);
  }
}

TEST_CASE("for_each_block visits each block once and rethrows the first failure") {
  for (Exec e : {Exec::serial, Exec::parallel}) {
    std::vector<std::atomic<int>> hits(100);
    kernels::for_each_block(100, [&](std::uint64_t b) { ++hits[b]; }, e);
    for (const auto& h : hits) CHECK(h.load() == 1);

    std::atomic<int> ran{0};
    try {
      kernels::for_each_block(
          50,
          [&](std::uint64_t b) {
            ++ran;
            if (b == 7 || b == 30) throw std::runtime_error("block " + std::to_string(b));
          },
          e);
      FAIL("no exception");
    } catch (const std::runtime_error& err) {
      CHECK(std::string(err.what()) == "block 7");
    }
    CHECK(ran.load() == 50);
  }
}

TEST_CASE("grid sum: serial and parallel agree bit for bit") {
  const std::vector<double> off{0.01, 0.02, 0.03};
  kernels::GridIntegrand f = [](const TorusPoint& t) -> std::optional<Complex> {
    if (std::abs(t[0] - t[1]) < 0.05) return std::nullopt;
    return std::polar(std::cos(t[2]) + 2.0, 3 * t[0] - t[1]);
  };
  const auto a = kernels::grid_sum(24, off, f, Exec::serial);
  const auto b = kernels::grid_sum(24, off, f, Exec::parallel);
  CHECK(a.sum == b.sum);
  CHECK(a.evaluated == b.evaluated);
  CHECK(a.skipped == b.skipped);
  CHECK(a.evaluated + a.skipped == 24 * 24 * 24);
  CHECK(a.skipped > 0);
  CHECK_THROWS_AS(kernels::grid_sum(1, off, f, Exec::serial), InvalidArgument);
}

TEST_CASE("batch evaluation keeps order") {
  const auto rs = build_root_system(Family::C, 3);
  const auto pts = random_regular_points(rs.positive_roots(), 3, 300, 12);
  const auto lam = testing::W({2, 1, 0});
  auto chi = [&](const TorusPoint& t) { return weyl_character(rs, lam, t); };
  const auto a = kernels::evaluate_batch(pts, chi, Exec::serial);
  const auto b = kernels::evaluate_batch(pts, chi, Exec::parallel);
  REQUIRE(a.size() == pts.size());
  CHECK(a == b);
  for (std::size_t i = 0; i < pts.size(); i += 37) CHECK(a[i] == chi(pts[i]));
}

TEST_CASE("library kernels give identical results on both paths") {
  const auto a = vandermonde_grid_sweep(5, Exec::serial);
  const auto b = vandermonde_grid_sweep(5, Exec::parallel);
  CHECK(a.points == b.points);
  CHECK(a.failures == b.failures);

  const auto rs = build_root_system(Family::A, 3);
  ClassFunction f = [&](const TorusPoint& t) { return weyl_character(rs, testing::W({2, 1, 0}), t); };
  ClassFunction g = [&](const TorusPoint& t) { return weyl_character(rs, testing::W({1, 0, 0}), t); };
  const QuadratureGrid grid{24, 3};
  CHECK(torus_inner_product(f, g, rs, grid, Exec::serial).value ==
        torus_inner_product(f, g, rs, grid, Exec::parallel).value);

  const auto r1 = vandermonde_identity_check(3, 2, 2, IdentityMode::random_rational, 4, 20, Exec::serial);
  const auto r2 = vandermonde_identity_check(3, 2, 2, IdentityMode::random_rational, 4, 20, Exec::parallel);
  CHECK(r1.verdict == r2.verdict);
  CHECK(r1.points == r2.points);
}

TEST_CASE("HOWECHAR_THREADS") {
  ::setenv("HOWECHAR_THREADS", "3", 1);
  kernels::apply_thread_cap_from_env();
#if defined(_OPENMP)
  CHECK(kernels::worker_count() == 3);
#endif
  ::setenv("HOWECHAR_THREADS", "zero", 1);
  CHECK_THROWS_AS(kernels::apply_thread_cap_from_env(), InvalidArgument);
  ::setenv("HOWECHAR_THREADS", "0", 1);
  CHECK_THROWS_AS(kernels::apply_thread_cap_from_env(), InvalidArgument);
  ::setenv("HOWECHAR_THREADS", "2x", 1);
  CHECK_THROWS_AS(kernels::apply_thread_cap_from_env(), InvalidArgument);
  ::unsetenv("HOWECHAR_THREADS");
  CHECK_NOTHROW(kernels::apply_thread_cap_from_env());
}
