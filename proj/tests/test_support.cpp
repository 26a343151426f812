#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "suppgeo/support.hpp"

using namespace suppgeo;

namespace {

PointConfiguration line_config(std::initializer_list<double> xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(Point::x1(x));
  return PointConfiguration(MetricSpace::euclidean(1), pts);
}

PointConfiguration equilateral_config(long long n) {
  std::vector<Point> pts;
  for (long long i = 0; i < n; ++i) pts.push_back(Point::at_index(i));
  return PointConfiguration(MetricSpace::equilateral(n), pts);
}

PointConfiguration grid5x5() {
  std::vector<Point> pts;
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) pts.push_back(Point::xy(x, y));
  }
  return PointConfiguration(MetricSpace::euclidean(2), pts);
}

std::vector<std::size_t> all_indices(const PointConfiguration& c) {
  std::vector<std::size_t> v(c.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("isolation radius examples") {
  const auto c = line_config({0, 1, 3});
  CHECK(isolation_radius(c, 0) == 1.0);
  CHECK(isolation_radius(c, 1) == 1.0);
  CHECK(isolation_radius(c, 2) == 2.0);

  const auto eq = equilateral_config(6);
  for (std::size_t w = 0; w < 6; ++w) CHECK(isolation_radius(eq, w) == 1.0);

  const PointConfiguration snow(
      MetricSpace::snowflake(MetricSpace::euclidean(1), 0.5),
      {Point::x1(0), Point::x1(4), Point::x1(9)});
  CHECK(isolation_radius(snow, 0) == doctest::Approx(2.0));
}

TEST_CASE("max ball coverage: three collinear points") {
  const auto c = line_config({0, 0.5, 1});
  const auto res = max_ball_coverage(c, all_indices(c), 0.6, SolverMode::euclidean_exact_2d());
  const long long expect =
      oracle::grid_max_coverage(oracle::planar_points(c), all_indices(c), 0.6);
  CHECK(expect == 3);
  CHECK(res.count == expect);
  CHECK(res.center.coords.size() == 1);
  CHECK(std::abs(res.center.coords[0] - 0.5) < 0.15);
}

TEST_CASE("max ball coverage: tiny balls in an equilateral space") {
  const auto eq = equilateral_config(9);
  const auto res = max_ball_coverage(eq, all_indices(eq), 1.0 / 20.0,
                                     SolverMode::restricted_to_c());
  CHECK(res.count == 1);
}

TEST_CASE("max ball coverage: two points at unit distance") {
  const auto c = line_config({0, 1});
  const auto res = max_ball_coverage(c, all_indices(c), 0.5, SolverMode::euclidean_exact_2d());
  const long long expect =
      oracle::grid_max_coverage(oracle::planar_points(c), all_indices(c), 0.5);
  CHECK(expect == 1);
  CHECK(res.count == expect);
}

TEST_CASE("deficit: two points, delta one half") {
  const auto c = line_config({0, 1});
  CHECK(supported_deficit(c, 0, 0.5, SolverMode::euclidean_exact_2d()) == 1);
  CHECK(oracle::grid_deficit(oracle::planar_points(c), 0, 0.5) == 1);
}

TEST_CASE("deficit: center of the 5x5 grid") {
  const auto c = grid5x5();
  const std::size_t center = 12;
  CHECK(supported_deficit(c, center, 0.5, SolverMode::euclidean_exact_2d()) == 8);
  CHECK(oracle::grid_deficit(oracle::planar_points(c), center, 0.5) == 8);
}

TEST_CASE("deficit: equilateral family at delta = 1/20") {
  for (long long n : {4, 10, 23}) {
    const auto eq = equilateral_config(n);
    for (std::size_t w : {std::size_t{0}, static_cast<std::size_t>(n - 1)}) {
      CHECK(supported_deficit(eq, w, 1.0 / 20.0, SolverMode::restricted_to_c()) == n - 1);
    }
  }
}

TEST_CASE("supported points examples") {
  const auto two = line_config({0, 1});
  const auto none = supported_points(two, {0.5, 2}, SolverMode::euclidean_exact_2d());
  CHECK(none.indices.empty());

  const auto eq = equilateral_config(10);
  const auto all10 = supported_points(eq, {1.0 / 20.0, 9}, SolverMode::restricted_to_c());
  CHECK(all10.indices == all_indices(eq));

  // s above |C| can never be reached.
  const auto big_s = supported_points(eq, {1.0 / 20.0, 11}, SolverMode::restricted_to_c());
  CHECK(big_s.indices.empty());
}

TEST_CASE("parameter validation") {
  const auto c = line_config({0, 1});
  CHECK_THROWS_AS(supported_points(c, {1.5, 2}, SolverMode::restricted_to_c()),
                  ValidationError);
  CHECK_THROWS_AS(supported_points(c, {0.5, 1}, SolverMode::restricted_to_c()),
                  ValidationError);
  CHECK_THROWS_AS(max_ball_coverage(c, all_indices(c), -1.0, SolverMode::restricted_to_c()),
                  ValidationError);
  CHECK_THROWS_AS(max_ball_coverage(c, {5}, 1.0, SolverMode::restricted_to_c()),
                  ValidationError);
}

TEST_CASE("exact solver rejects non-planar spaces, grid rejects abstract ones") {
  const auto eq = equilateral_config(5);
  CHECK_THROWS_AS(supported_deficit(eq, 0, 0.5, SolverMode::euclidean_exact_2d()),
                  ValidationError);
  CHECK_THROWS_AS(supported_deficit(eq, 0, 0.5, SolverMode::candidate_grid(16)),
                  ValidationError);
  const auto e3 = PointConfiguration(
      MetricSpace::euclidean(3),
      {Point::xyz(0, 0, 0), Point::xyz(1, 0, 0), Point::xyz(0, 1, 0)});
  CHECK_THROWS_AS(supported_deficit(e3, 0, 0.5, SolverMode::euclidean_exact_2d()),
                  ValidationError);
  const auto c = line_config({0, 1});
  CHECK_THROWS_AS(supported_deficit(c, 0, 0.5, SolverMode::candidate_grid(4)),
                  ValidationError);
}

TEST_CASE("exact solver accepts snowflake and scale wrappers over the plane") {
  const auto base = oracle::random_planar(18, 501);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < base.size(); ++i) pts.push_back(base.point(i));
  const PointConfiguration snow(MetricSpace::snowflake(MetricSpace::euclidean(2), 0.5),
                                pts);
  CHECK(exact2d_applicable(snow.space()));
  const auto def = support_deficits(snow, 0.3, SolverMode::euclidean_exact_2d());
  CHECK(def.size() == snow.size());
}

TEST_CASE("property: monotone in s") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto c = oracle::random_planar(20, 1000 + seed);
    auto prev = supported_points(c, {0.4, 2}, SolverMode::euclidean_exact_2d()).indices;
    for (int s : {3, 5, 9}) {
      auto cur = supported_points(c, {0.4, s}, SolverMode::euclidean_exact_2d()).indices;
      CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
      prev = std::move(cur);
    }
  }
}

TEST_CASE("property: deficits monotone as delta shrinks") {
  std::mt19937_64 rng(77);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto c = oracle::random_planar(18, 2000 + seed);
    const double delta = 0.2 + 0.6 * oracle::unit(rng);
    const double delta_small = delta * (0.3 + 0.6 * oracle::unit(rng));
    const auto hi = support_deficits(c, delta, SolverMode::euclidean_exact_2d());
    const auto lo = support_deficits(c, delta_small, SolverMode::euclidean_exact_2d());
    for (std::size_t w = 0; w < c.size(); ++w) CHECK(lo[w] >= hi[w]);
  }
  // Same shape holds for the restricted solver on abstract spaces.
  const auto eq = equilateral_config(12);
  const auto hi = support_deficits(eq, 0.5, SolverMode::restricted_to_c());
  const auto lo = support_deficits(eq, 0.05, SolverMode::restricted_to_c());
  for (std::size_t w = 0; w < eq.size(); ++w) CHECK(lo[w] >= hi[w]);
}

TEST_CASE("property: isometry invariance") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto c = oracle::random_planar(16, 3000 + seed);
    std::vector<Point> rot;    // exact signed coordinate permutation
    std::vector<Point> moved;  // generic rigid motion
    const double th = 0.7;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const double x = c.coord(i)[0];
      const double y = c.coord(i)[1];
      rot.push_back(Point::xy(-y, x));
      moved.push_back(Point::xy(std::cos(th) * x - std::sin(th) * y + 0.25,
                                std::sin(th) * x + std::cos(th) * y - 1.5));
    }
    const PointConfiguration cr(MetricSpace::euclidean(2), rot);
    const PointConfiguration cm(MetricSpace::euclidean(2), moved);
    const auto d0 = support_deficits(c, 0.35, SolverMode::euclidean_exact_2d());
    const auto d1 = support_deficits(cr, 0.35, SolverMode::euclidean_exact_2d());
    const auto d2 = support_deficits(cm, 0.35, SolverMode::euclidean_exact_2d());
    CHECK(d0 == d1);
    CHECK(d0 == d2);
  }
}

TEST_CASE("property: relabeling permutes the supported set") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = oracle::random_planar(14, 4000 + seed);
    std::vector<std::size_t> perm(c.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Point> shuffled(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) shuffled[i] = c.point(perm[i]);
    const PointConfiguration cp(MetricSpace::euclidean(2), shuffled);
    const auto d0 = support_deficits(c, 0.4, SolverMode::euclidean_exact_2d());
    const auto d1 = support_deficits(cp, 0.4, SolverMode::euclidean_exact_2d());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(d1[i] == d0[perm[i]]);
  }
}

TEST_CASE("property: scale invariance") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = oracle::random_planar(15, 5000 + seed);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < c.size(); ++i) pts.push_back(c.point(i));
    const auto d0 = support_deficits(c, 0.4, SolverMode::euclidean_exact_2d());
    for (double lambda : {0.25, 8.0, 3.0}) {
      const PointConfiguration cs(MetricSpace::scaled(MetricSpace::euclidean(2), lambda),
                                  pts);
      const auto d1 = support_deficits(cs, 0.4, SolverMode::euclidean_exact_2d());
      CHECK(d0 == d1);
    }
  }
}

TEST_CASE("property: solver ordering") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto c = oracle::random_planar(12, 6000 + seed);
    const double delta = 0.35;
    const auto exact = support_deficits(c, delta, SolverMode::euclidean_exact_2d());
    const auto restric = support_deficits(c, delta, SolverMode::restricted_to_c());
    const auto grid = support_deficits(c, delta, SolverMode::candidate_grid(16));
    for (std::size_t w = 0; w < c.size(); ++w) {
      CHECK(exact[w] <= restric[w]);
      CHECK(exact[w] <= grid[w]);
    }
  }
}

TEST_CASE("property: deficit bounds when candidates include configuration points") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto c = oracle::random_planar(15, 7000 + seed);
    for (const SolverMode& mode :
         {SolverMode::euclidean_exact_2d(), SolverMode::restricted_to_c()}) {
      const auto rep = compute_support(c, {0.45, 2}, mode);
      for (const auto& ps : rep.points) {
        CHECK(ps.deficit >= 0);
        CHECK(ps.deficit <= ps.outer_count - 1);
      }
    }
  }
}

TEST_CASE("parallel and serial support reports agree") {
  const auto c = oracle::random_planar(60, 8080);
  const auto par = support_deficits(c, 0.3, SolverMode::euclidean_exact_2d(), Exec::Parallel);
  const auto ser = support_deficits(c, 0.3, SolverMode::euclidean_exact_2d(), Exec::Serial);
  CHECK(par == ser);

  const auto eq = equilateral_config(40);
  CHECK(support_deficits(eq, 0.05, SolverMode::restricted_to_c(), Exec::Parallel) ==
        support_deficits(eq, 0.05, SolverMode::restricted_to_c(), Exec::Serial));
}

TEST_CASE("report carries conservativeness and centers") {
  const auto c = line_config({0, 0.5, 1});
  const auto exact = compute_support(c, {0.5, 2}, SolverMode::euclidean_exact_2d());
  CHECK(exact.exact);
  CHECK(std::string(exact.conservativeness()) == "exact");
  const auto restr = compute_support(c, {0.5, 2}, SolverMode::restricted_to_c());
  CHECK_FALSE(restr.exact);
  CHECK(std::string(restr.conservativeness()) == "upper-bound");
  for (const auto& ps : restr.points) CHECK(ps.removal_center.coords.size() == 1);
}
