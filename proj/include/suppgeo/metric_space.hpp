#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "suppgeo/errors.hpp"
#include "suppgeo/parallel.hpp"

namespace suppgeo {

// Slack factor used only where a documented convention calls for it
// (matrix triangle validation, boundary-hit reporting, the exact planar
// solver's open-ball shrink). Ordinary membership tests compare directly.
inline constexpr double kEpsTol = 1e-12;

enum class SpaceKind {
  Euclidean,
  DistanceMatrix,
  Snowflake,
  Scaled,
  HyperbolicHalfPlane,
  HeisenbergGauge,
  Equilateral,
};

// A point is either a coordinate tuple (Euclidean, hyperbolic half-plane,
// Heisenberg) or an index into an abstract universe (distance matrix,
// equilateral space).
struct Point {
  std::vector<double> coords;
  long long index = -1;

  bool is_abstract() const { return index >= 0; }

  static Point x1(double x) { return Point{{x}, -1}; }
  static Point xy(double x, double y) { return Point{{x, y}, -1}; }
  static Point xyz(double x, double y, double z) { return Point{{x, y, z}, -1}; }
  static Point at_index(long long i) { return Point{{}, i}; }
};

// Immutable distance oracle. Balls B(x,r) are open: members satisfy
// d(x,y) < r. Net/cover machinery documents its own closed convention.
class MetricSpace {
 public:
  static MetricSpace euclidean(int dim);
  // Validates symmetry, zero diagonal, off-diagonal positivity and the
  // triangle inequality (with kEpsTol relative slack for rounding).
  static MetricSpace distance_matrix(const std::vector<std::vector<double>>& rows);
  static MetricSpace snowflake(const MetricSpace& base, double epsilon);
  static MetricSpace scaled(const MetricSpace& base, double lambda);
  static MetricSpace hyperbolic_half_plane();
  static MetricSpace heisenberg_gauge();
  static MetricSpace equilateral(long long n);

  SpaceKind kind() const { return kind_; }
  bool is_abstract() const;
  // Coordinate arity (2 for the half-plane, 3 for Heisenberg, the dimension
  // for Euclidean, the base's arity for wrappers), 0 for abstract spaces.
  int coord_dim() const;
  // Universe size for matrix/equilateral spaces, 0 otherwise.
  long long universe_size() const;
  double epsilon() const { return param_; }
  double lambda() const { return param_; }
  const MetricSpace& base() const;
  double matrix_at(long long i, long long j) const;

  // Multiplicative triangle constant K in d(a,c) <= K*(d(a,b)+d(b,c)).
  // 1 for every variant: the Heisenberg distance is the Cygan-normalized
  // Koranyi gauge (|z|^4 + 16 t^2)^(1/4), which is a genuine metric.
  double triangle_constant() const;

  void validate_point(const Point& p) const;
  double distance(const Point& a, const Point& b) const;

  std::string describe() const;

 private:
  MetricSpace() = default;

  SpaceKind kind_ = SpaceKind::Euclidean;
  int dim_ = 0;        // euclidean arity, or universe size for abstract kinds
  double param_ = 0.0; // snowflake epsilon / scale lambda
  std::shared_ptr<const MetricSpace> base_;
  std::shared_ptr<const std::vector<double>> matrix_; // row-major dim_ x dim_
};

// Ordered, duplicate-free finite point list. Construction validates every
// point against the space and rejects any zero pairwise distance; the scan
// also caches min pairwise distance and diameter.
class PointConfiguration {
 public:
  PointConfiguration(MetricSpace space, const std::vector<Point>& points,
                     Exec exec = Exec::Parallel);

  std::size_t size() const { return n_; }
  const MetricSpace& space() const { return space_; }
  Point point(std::size_t i) const;
  double distance(std::size_t i, std::size_t j) const;
  // Distance from member i to an arbitrary (already validated) point.
  double distance_to(std::size_t i, const Point& p) const;

  double min_pairwise_distance() const { return min_dist_; }
  double diameter() const { return max_dist_; }

  int coord_dim() const { return cdim_; }
  const double* coord(std::size_t i) const { return coords_.data() + i * cdim_; }
  long long abstract_index(std::size_t i) const { return idx_[i]; }

 private:
  MetricSpace space_;
  std::size_t n_ = 0;
  int cdim_ = 0;
  std::vector<double> coords_;  // n_ x cdim_ for coordinate spaces
  std::vector<long long> idx_;  // n_ for abstract spaces
  double min_dist_ = 0.0;
  double max_dist_ = 0.0;
};

namespace detail {

inline double euclid_raw(const double* a, const double* b, int dim) {
  double s = 0.0;
  for (int k = 0; k < dim; ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

inline double half_plane_raw(const double* a, const double* b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * a[1] * b[1]));
}

inline double heisenberg_raw(const double* a, const double* b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double twist = a[2] - b[2] - 0.5 * (b[0] * a[1] - a[0] * b[1]);
  const double zz = dx * dx + dy * dy;
  return std::pow(zz * zz + 16.0 * twist * twist, 0.25);
}

inline double pair_distance(const MetricSpace& s, const PointConfiguration& c,
                            std::size_t i, std::size_t j) {
  switch (s.kind()) {
    case SpaceKind::Euclidean:
      return euclid_raw(c.coord(i), c.coord(j), c.coord_dim());
    case SpaceKind::Snowflake:
      return std::pow(pair_distance(s.base(), c, i, j), s.epsilon());
    case SpaceKind::Scaled:
      return s.lambda() * pair_distance(s.base(), c, i, j);
    case SpaceKind::HyperbolicHalfPlane:
      return half_plane_raw(c.coord(i), c.coord(j));
    case SpaceKind::HeisenbergGauge:
      return heisenberg_raw(c.coord(i), c.coord(j));
    case SpaceKind::DistanceMatrix:
      return s.matrix_at(c.abstract_index(i), c.abstract_index(j));
    case SpaceKind::Equilateral:
      return c.abstract_index(i) == c.abstract_index(j) ? 0.0 : 1.0;
  }
  return 0.0;
}

inline double point_distance(const MetricSpace& s, const PointConfiguration& c,
                             std::size_t i, const Point& p) {
  switch (s.kind()) {
    case SpaceKind::Euclidean:
      return euclid_raw(c.coord(i), p.coords.data(), c.coord_dim());
    case SpaceKind::Snowflake:
      return std::pow(point_distance(s.base(), c, i, p), s.epsilon());
    case SpaceKind::Scaled:
      return s.lambda() * point_distance(s.base(), c, i, p);
    case SpaceKind::HyperbolicHalfPlane:
      return half_plane_raw(c.coord(i), p.coords.data());
    case SpaceKind::HeisenbergGauge:
      return heisenberg_raw(c.coord(i), p.coords.data());
    case SpaceKind::DistanceMatrix:
      return s.matrix_at(c.abstract_index(i), p.index);
    case SpaceKind::Equilateral:
      return c.abstract_index(i) == p.index ? 0.0 : 1.0;
  }
  return 0.0;
}

}  // namespace detail

inline double PointConfiguration::distance(std::size_t i, std::size_t j) const {
  return detail::pair_distance(space_, *this, i, j);
}

inline double PointConfiguration::distance_to(std::size_t i, const Point& p) const {
  return detail::point_distance(space_, *this, i, p);
}

// Indices i with distance(center, C[i]) < r; strict inequality (open ball).
std::vector<std::size_t> ball_members(const PointConfiguration& c,
                                      const Point& center, double r);

// --- seeded generators -----------------------------------------------------

struct GeneratorSpec {
  enum class Family {
    UniformSquare,
    IntegerGrid,
    HyperbolicCircle,
    HyperbolicDisk,
    Equilateral,
  };

  Family family = Family::UniformSquare;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double radius = 1.0;    // hyperbolic families
  std::size_t width = 0;  // integer grid columns; 0 means ceil(sqrt(count))
};

std::string family_name(GeneratorSpec::Family f);
GeneratorSpec::Family family_from_name(const std::string& name);

MetricSpace space_for(const GeneratorSpec& spec);
PointConfiguration generate_configuration(const GeneratorSpec& spec);

}  // namespace suppgeo
