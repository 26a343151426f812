#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "suppgeo/metric_space.hpp"

using namespace suppgeo;

namespace {

Point random_point_for(const MetricSpace& s, std::mt19937_64& rng) {
  auto u = [&] { return oracle::unit(rng) * 4.0 - 2.0; };
  switch (s.kind()) {
    case SpaceKind::Euclidean: {
      Point p;
      for (int k = 0; k < s.coord_dim(); ++k) p.coords.push_back(u());
      return p;
    }
    case SpaceKind::HyperbolicHalfPlane:
      return Point::xy(u(), 0.05 + 3.0 * oracle::unit(rng));
    case SpaceKind::HeisenbergGauge:
      return Point::xyz(u(), u(), u());
    case SpaceKind::DistanceMatrix:
    case SpaceKind::Equilateral:
      return Point::at_index(static_cast<long long>(rng() % s.universe_size()));
    case SpaceKind::Snowflake:
    case SpaceKind::Scaled:
      return random_point_for(s.base(), rng);
  }
  return Point{};
}

}  // namespace

TEST_CASE("distance examples") {
  const auto e2 = MetricSpace::euclidean(2);
  CHECK(e2.distance(Point::xy(0, 0), Point::xy(3, 4)) == doctest::Approx(5.0));

  const auto snow = MetricSpace::snowflake(MetricSpace::euclidean(1), 0.5);
  CHECK(snow.distance(Point::x1(0), Point::x1(4)) == doctest::Approx(2.0));

  const auto eq = MetricSpace::equilateral(5);
  CHECK(eq.distance(Point::at_index(0), Point::at_index(3)) == 1.0);
  CHECK(eq.distance(Point::at_index(2), Point::at_index(2)) == 0.0);
}

TEST_CASE("hyperbolic half-plane closed form") {
  const auto h = MetricSpace::hyperbolic_half_plane();
  // Vertical geodesic: d((0,1),(0,e)) = 1.
  CHECK(h.distance(Point::xy(0, 1), Point::xy(0, std::exp(1.0))) == doctest::Approx(1.0));
  CHECK_THROWS_AS(h.distance(Point::xy(0, 1), Point::xy(0, -1)), ValidationError);
}

TEST_CASE("scaled multiplies every distance by exactly lambda") {
  std::mt19937_64 rng(11);
  const auto base = MetricSpace::euclidean(3);
  for (double lambda : {0.25, 3.0, 8.0}) {
    const auto sc = MetricSpace::scaled(base, lambda);
    for (int t = 0; t < 200; ++t) {
      const Point a = random_point_for(base, rng);
      const Point b = random_point_for(base, rng);
      CHECK(sc.distance(a, b) == lambda * base.distance(a, b));
    }
  }
}

TEST_CASE("snowflake composes as the base distance raised to epsilon") {
  std::mt19937_64 rng(12);
  const auto base = MetricSpace::scaled(MetricSpace::euclidean(2), 2.0);
  const auto snow = MetricSpace::snowflake(base, 0.7);
  for (int t = 0; t < 200; ++t) {
    const Point a = random_point_for(base, rng);
    const Point b = random_point_for(base, rng);
    CHECK(snow.distance(a, b) == std::pow(base.distance(a, b), 0.7));
  }
}

TEST_CASE("metric axioms on sampled triples for every variant") {
  std::vector<MetricSpace> spaces;
  spaces.push_back(MetricSpace::euclidean(2));
  spaces.push_back(MetricSpace::euclidean(3));
  spaces.push_back(MetricSpace::hyperbolic_half_plane());
  spaces.push_back(MetricSpace::heisenberg_gauge());
  spaces.push_back(MetricSpace::equilateral(9));
  spaces.push_back(MetricSpace::snowflake(MetricSpace::euclidean(2), 0.5));
  spaces.push_back(MetricSpace::scaled(MetricSpace::hyperbolic_half_plane(), 2.5));
  spaces.push_back(MetricSpace::distance_matrix({{0, 1, 2}, {1, 0, 1.5}, {2, 1.5, 0}}));

  std::mt19937_64 rng(99);
  for (const auto& s : spaces) {
    const double K = s.triangle_constant();
    for (int t = 0; t < 400; ++t) {
      const Point a = random_point_for(s, rng);
      const Point b = random_point_for(s, rng);
      const Point c = random_point_for(s, rng);
      const double dab = s.distance(a, b);
      const double dba = s.distance(b, a);
      CHECK(dab == dba);
      CHECK(dab >= 0.0);
      CHECK(s.distance(a, a) == 0.0);
      const double lhs = s.distance(a, c);
      const double rhs = K * (dab + s.distance(b, c));
      CHECK(lhs <= rhs * (1.0 + kEpsTol));
    }
  }
}

TEST_CASE("distance matrix validation") {
  CHECK_THROWS_AS(MetricSpace::distance_matrix({{0, 1}, {2, 0}}), ValidationError);   // asymmetric
  CHECK_THROWS_AS(MetricSpace::distance_matrix({{0, 1}, {1, 0.5}}), ValidationError); // diagonal
  CHECK_THROWS_AS(MetricSpace::distance_matrix({{0, 0}, {0, 0}}), ValidationError);   // zero off-diag
  CHECK_THROWS_AS(MetricSpace::distance_matrix({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}),
                  ValidationError);  // triangle: 5 > 1 + 1
  const auto ok = MetricSpace::distance_matrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(ok.distance(Point::at_index(0), Point::at_index(2)) == 2.0);
}

TEST_CASE("point validation") {
  const auto e2 = MetricSpace::euclidean(2);
  CHECK_THROWS_AS(e2.validate_point(Point::x1(1)), ValidationError);
  CHECK_THROWS_AS(e2.validate_point(Point::at_index(0)), ValidationError);
  const auto eq = MetricSpace::equilateral(4);
  CHECK_THROWS_AS(eq.validate_point(Point::at_index(4)), ValidationError);
  CHECK_THROWS_AS(eq.validate_point(Point::xy(0, 0)), ValidationError);
}

TEST_CASE("configuration rejects duplicates and tiny sizes") {
  const auto e1 = MetricSpace::euclidean(1);
  CHECK_THROWS_AS(PointConfiguration(e1, {Point::x1(0)}), ValidationError);
  CHECK_THROWS_AS(PointConfiguration(e1, {Point::x1(0), Point::x1(0)}), ValidationError);
  CHECK_THROWS_AS(
      PointConfiguration(MetricSpace::equilateral(5),
                         {Point::at_index(1), Point::at_index(1)}),
      ValidationError);
  const PointConfiguration c(e1, {Point::x1(0), Point::x1(1), Point::x1(3)});
  CHECK(c.min_pairwise_distance() == 1.0);
  CHECK(c.diameter() == 3.0);
}

TEST_CASE("ball members are strict") {
  const auto e1 = MetricSpace::euclidean(1);
  const PointConfiguration c(e1, {Point::x1(0), Point::x1(1), Point::x1(2)});
  CHECK(ball_members(c, Point::x1(1), 1.0) == std::vector<std::size_t>{1});
  CHECK(ball_members(c, Point::x1(1), 1.5) == std::vector<std::size_t>{0, 1, 2});

  const PointConfiguration eq(MetricSpace::equilateral(4),
                              {Point::at_index(0), Point::at_index(1), Point::at_index(2),
                               Point::at_index(3)});
  CHECK(ball_members(eq, Point::at_index(2), 1.0 / 20.0) == std::vector<std::size_t>{2});
}

TEST_CASE("integer grid generator emits row-major lattice points") {
  GeneratorSpec g;
  g.family = GeneratorSpec::Family::IntegerGrid;
  g.count = 4;
  g.width = 4;  // one row
  const auto c = generate_configuration(g);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(c.coord(i)[0] == static_cast<double>(i));
    CHECK(c.coord(i)[1] == 0.0);
  }
  GeneratorSpec sq = g;
  sq.count = 6;
  sq.width = 3;
  const auto c2 = generate_configuration(sq);
  CHECK(c2.coord(4)[0] == 1.0);
  CHECK(c2.coord(4)[1] == 1.0);
}

TEST_CASE("equilateral generator as indices 0..n-1") {
  GeneratorSpec g;
  g.family = GeneratorSpec::Family::Equilateral;
  g.count = 7;
  const auto c = generate_configuration(g);
  CHECK(c.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(c.abstract_index(i) == static_cast<long long>(i));
  CHECK(c.diameter() == 1.0);
}

TEST_CASE("uniform square generator is deterministic per seed") {
  GeneratorSpec g;
  g.family = GeneratorSpec::Family::UniformSquare;
  g.count = 100;
  g.seed = 42;
  const auto a = generate_configuration(g);
  const auto b = generate_configuration(g);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.coord(i)[0] == b.coord(i)[0]);
    CHECK(a.coord(i)[1] == b.coord(i)[1]);
  }
  g.seed = 43;
  const auto c = generate_configuration(g);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coord(i)[0] != c.coord(i)[0]) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("hyperbolic circle generator spaces points evenly") {
  GeneratorSpec g;
  g.family = GeneratorSpec::Family::HyperbolicCircle;
  g.count = 16;
  g.radius = 3.0;
  const auto c = generate_configuration(g);
  const auto h = MetricSpace::hyperbolic_half_plane();
  const Point center = Point::xy(0, 1);
  // All points on the circle of radius 3 about (0,1), consecutive gaps equal.
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(h.distance(c.point(i), center) == doctest::Approx(3.0).epsilon(1e-9));
  }
  const double gap = c.distance(0, 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    CHECK(c.distance(i, (i + 1) % c.size()) == doctest::Approx(gap).epsilon(1e-9));
  }
}

TEST_CASE("hyperbolic disk generator stays inside the disk and is deterministic") {
  GeneratorSpec g;
  g.family = GeneratorSpec::Family::HyperbolicDisk;
  g.count = 200;
  g.radius = 4.0;
  g.seed = 7;
  const auto c = generate_configuration(g);
  const auto h = MetricSpace::hyperbolic_half_plane();
  const Point center = Point::xy(0, 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(h.distance(c.point(i), center) <= 4.0 + 1e-9);
  }
  const auto c2 = generate_configuration(g);
  CHECK(c.point(123).coords == c2.point(123).coords);
}

TEST_CASE("generator rejects bad specs") {
  GeneratorSpec g;
  g.family = GeneratorSpec::Family::UniformSquare;
  g.count = 1;
  CHECK_THROWS_AS(generate_configuration(g), ValidationError);
  g.family = GeneratorSpec::Family::HyperbolicDisk;
  g.count = 10;
  g.radius = -1.0;
  CHECK_THROWS_AS(generate_configuration(g), ValidationError);
}
