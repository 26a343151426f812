#include "suppgeo/metric_space.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace suppgeo {

namespace {

bool finite(double x) { return std::isfinite(x); }

// Uniform double in [0,1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

MetricSpace MetricSpace::euclidean(int dim) {
  if (dim < 1) throw ValidationError("euclidean dimension must be >= 1");
  MetricSpace s;
  s.kind_ = SpaceKind::Euclidean;
  s.dim_ = dim;
  return s;
}

MetricSpace MetricSpace::distance_matrix(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  if (n < 2) throw ValidationError("distance matrix must be at least 2x2");
  auto flat = std::make_shared<std::vector<double>>(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ValidationError("distance matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const double v = rows[i][j];
      if (!finite(v) || v < 0.0)
        throw ValidationError("distance matrix entries must be finite and nonnegative");
      (*flat)[i * n + j] = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if ((*flat)[i * n + i] != 0.0)
      throw ValidationError("distance matrix diagonal must be exactly zero");
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((*flat)[i * n + j] != (*flat)[j * n + i]) {
        std::ostringstream os;
        os << "distance matrix asymmetric at (" << i << "," << j << ")";
        throw ValidationError(os.str());
      }
      if ((*flat)[i * n + j] <= 0.0) {
        std::ostringstream os;
        os << "distance matrix off-diagonal entry (" << i << "," << j
           << ") must be strictly positive";
        throw ValidationError(os.str());
      }
    }
  }
  // O(n^3) triangle check; relative slack absorbs rounding in the sum.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double lhs = (*flat)[i * n + k];
        const double rhs = (*flat)[i * n + j] + (*flat)[j * n + k];
        if (lhs > rhs * (1.0 + kEpsTol)) {
          std::ostringstream os;
          os << "triangle inequality violated: d(" << i << "," << k << ") > d(" << i
             << "," << j << ") + d(" << j << "," << k << ")";
          throw ValidationError(os.str());
        }
      }
    }
  }
  MetricSpace s;
  s.kind_ = SpaceKind::DistanceMatrix;
  s.dim_ = static_cast<int>(n);
  s.matrix_ = std::move(flat);
  return s;
}

MetricSpace MetricSpace::snowflake(const MetricSpace& base, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ValidationError("snowflake exponent must lie in (0,1)");
  MetricSpace s;
  s.kind_ = SpaceKind::Snowflake;
  s.param_ = epsilon;
  s.base_ = std::make_shared<MetricSpace>(base);
  return s;
}

MetricSpace MetricSpace::scaled(const MetricSpace& base, double lambda) {
  if (!(lambda > 0.0) || !finite(lambda))
    throw ValidationError("scale factor must be a positive real");
  MetricSpace s;
  s.kind_ = SpaceKind::Scaled;
  s.param_ = lambda;
  s.base_ = std::make_shared<MetricSpace>(base);
  return s;
}

MetricSpace MetricSpace::hyperbolic_half_plane() {
  MetricSpace s;
  s.kind_ = SpaceKind::HyperbolicHalfPlane;
  s.dim_ = 2;
  return s;
}

MetricSpace MetricSpace::heisenberg_gauge() {
  MetricSpace s;
  s.kind_ = SpaceKind::HeisenbergGauge;
  s.dim_ = 3;
  return s;
}

MetricSpace MetricSpace::equilateral(long long n) {
  if (n < 2) throw ValidationError("equilateral space needs size >= 2");
  MetricSpace s;
  s.kind_ = SpaceKind::Equilateral;
  s.dim_ = static_cast<int>(n);
  return s;
}

bool MetricSpace::is_abstract() const {
  switch (kind_) {
    case SpaceKind::DistanceMatrix:
    case SpaceKind::Equilateral:
      return true;
    case SpaceKind::Snowflake:
    case SpaceKind::Scaled:
      return base_->is_abstract();
    default:
      return false;
  }
}

int MetricSpace::coord_dim() const {
  switch (kind_) {
    case SpaceKind::Euclidean:
    case SpaceKind::HyperbolicHalfPlane:
    case SpaceKind::HeisenbergGauge:
      return dim_;
    case SpaceKind::Snowflake:
    case SpaceKind::Scaled:
      return base_->coord_dim();
    default:
      return 0;
  }
}

long long MetricSpace::universe_size() const {
  switch (kind_) {
    case SpaceKind::DistanceMatrix:
    case SpaceKind::Equilateral:
      return dim_;
    case SpaceKind::Snowflake:
    case SpaceKind::Scaled:
      return base_->universe_size();
    default:
      return 0;
  }
}

const MetricSpace& MetricSpace::base() const {
  if (!base_) throw ValidationError("space has no base");
  return *base_;
}

double MetricSpace::matrix_at(long long i, long long j) const {
  return (*matrix_)[static_cast<std::size_t>(i) * dim_ + static_cast<std::size_t>(j)];
}

double MetricSpace::triangle_constant() const {
  // Cygan's normalization keeps the Heisenberg gauge a true metric, so no
  // variant needs K > 1.
  return 1.0;
}

void MetricSpace::validate_point(const Point& p) const {
  switch (kind_) {
    case SpaceKind::Euclidean:
      if (p.is_abstract() || static_cast<int>(p.coords.size()) != dim_)
        throw ValidationError("point arity does not match euclidean dimension");
      break;
    case SpaceKind::HyperbolicHalfPlane:
      if (p.is_abstract() || p.coords.size() != 2)
        throw ValidationError("half-plane point needs 2 coordinates");
      if (!(p.coords[1] > 0.0))
        throw ValidationError("half-plane point needs second coordinate > 0");
      break;
    case SpaceKind::HeisenbergGauge:
      if (p.is_abstract() || p.coords.size() != 3)
        throw ValidationError("heisenberg point needs 3 coordinates");
      break;
    case SpaceKind::DistanceMatrix:
    case SpaceKind::Equilateral:
      if (!p.is_abstract() || p.index >= dim_)
        throw ValidationError("abstract point index out of range for space");
      break;
    case SpaceKind::Snowflake:
    case SpaceKind::Scaled:
      base_->validate_point(p);
      break;
  }
  for (double v : p.coords) {
    if (!finite(v)) throw ValidationError("point coordinates must be finite");
  }
}

double MetricSpace::distance(const Point& a, const Point& b) const {
  validate_point(a);
  validate_point(b);
  switch (kind_) {
    case SpaceKind::Euclidean:
      return detail::euclid_raw(a.coords.data(), b.coords.data(), dim_);
    case SpaceKind::Snowflake:
      return std::pow(base_->distance(a, b), param_);
    case SpaceKind::Scaled:
      return param_ * base_->distance(a, b);
    case SpaceKind::HyperbolicHalfPlane:
      return detail::half_plane_raw(a.coords.data(), b.coords.data());
    case SpaceKind::HeisenbergGauge:
      return detail::heisenberg_raw(a.coords.data(), b.coords.data());
    case SpaceKind::DistanceMatrix:
      return matrix_at(a.index, b.index);
    case SpaceKind::Equilateral:
      return a.index == b.index ? 0.0 : 1.0;
  }
  return 0.0;
}

std::string MetricSpace::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case SpaceKind::Euclidean: os << "euclidean(" << dim_ << ")"; break;
    case SpaceKind::DistanceMatrix: os << "matrix(" << dim_ << ")"; break;
    case SpaceKind::Snowflake: os << "snowflake(" << base_->describe() << ", " << param_ << ")"; break;
    case SpaceKind::Scaled: os << "scaled(" << base_->describe() << ", " << param_ << ")"; break;
    case SpaceKind::HyperbolicHalfPlane: os << "hyperbolic-half-plane"; break;
    case SpaceKind::HeisenbergGauge: os << "heisenberg-gauge"; break;
    case SpaceKind::Equilateral: os << "equilateral(" << dim_ << ")"; break;
  }
  return os.str();
}

PointConfiguration::PointConfiguration(MetricSpace space, const std::vector<Point>& points,
                                       Exec exec)
    : space_(std::move(space)) {
  n_ = points.size();
  if (n_ < 2) throw ValidationError("configuration needs at least 2 points");
  cdim_ = space_.coord_dim();
  for (const Point& p : points) space_.validate_point(p);
  if (space_.is_abstract()) {
    idx_.reserve(n_);
    for (const Point& p : points) idx_.push_back(p.index);
  } else {
    coords_.resize(n_ * static_cast<std::size_t>(cdim_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (int k = 0; k < cdim_; ++k) coords_[i * cdim_ + k] = points[i].coords[k];
    }
  }

  // Pairwise scan: rejects duplicates (zero distance) and caches extremes.
  std::vector<double> row_min(n_, std::numeric_limits<double>::infinity());
  std::vector<double> row_max(n_, 0.0);
  std::atomic<bool> dup{false};
  parallel_for(n_, exec, [&](std::size_t i) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i) continue;
      const double d = distance(i, j);
      if (d <= 0.0) dup.store(true, std::memory_order_relaxed);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    row_min[i] = lo;
    row_max[i] = hi;
  });
  if (dup.load()) throw ValidationError("configuration has duplicate points (zero pairwise distance)");
  min_dist_ = *std::min_element(row_min.begin(), row_min.end());
  max_dist_ = *std::max_element(row_max.begin(), row_max.end());
}

Point PointConfiguration::point(std::size_t i) const {
  if (space_.is_abstract()) return Point::at_index(idx_[i]);
  Point p;
  p.coords.assign(coord(i), coord(i) + cdim_);
  return p;
}

std::vector<std::size_t> ball_members(const PointConfiguration& c, const Point& center,
                                      double r) {
  if (!(r > 0.0)) throw ValidationError("ball radius must be positive");
  c.space().validate_point(center);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.distance_to(i, center) < r) out.push_back(i);
  }
  return out;
}

// --- generators --------------------------------------------------------------

std::string family_name(GeneratorSpec::Family f) {
  switch (f) {
    case GeneratorSpec::Family::UniformSquare: return "uniform-square";
    case GeneratorSpec::Family::IntegerGrid: return "integer-grid";
    case GeneratorSpec::Family::HyperbolicCircle: return "hyperbolic-circle";
    case GeneratorSpec::Family::HyperbolicDisk: return "hyperbolic-disk";
    case GeneratorSpec::Family::Equilateral: return "equilateral";
  }
  return "?";
}

GeneratorSpec::Family family_from_name(const std::string& name) {
  if (name == "uniform-square") return GeneratorSpec::Family::UniformSquare;
  if (name == "integer-grid") return GeneratorSpec::Family::IntegerGrid;
  if (name == "hyperbolic-circle") return GeneratorSpec::Family::HyperbolicCircle;
  if (name == "hyperbolic-disk") return GeneratorSpec::Family::HyperbolicDisk;
  if (name == "equilateral") return GeneratorSpec::Family::Equilateral;
  throw ValidationError("unknown generator family: " + name);
}

MetricSpace space_for(const GeneratorSpec& spec) {
  switch (spec.family) {
    case GeneratorSpec::Family::UniformSquare:
    case GeneratorSpec::Family::IntegerGrid:
      return MetricSpace::euclidean(2);
    case GeneratorSpec::Family::HyperbolicCircle:
    case GeneratorSpec::Family::HyperbolicDisk:
      return MetricSpace::hyperbolic_half_plane();
    case GeneratorSpec::Family::Equilateral:
      return MetricSpace::equilateral(static_cast<long long>(spec.count));
  }
  throw ValidationError("unknown generator family");
}

namespace {

// Poincare-disk point at geodesic distance t, polar angle phi from the
// origin, pushed to the half-plane by the Cayley map sending 0 to (0,1).
Point disk_polar_to_half_plane(double t, double phi) {
  const double rho = std::tanh(0.5 * t);
  const double u = rho * std::cos(phi);
  const double v = rho * std::sin(phi);
  const double den = (1.0 - u) * (1.0 - u) + v * v;
  return Point::xy(-2.0 * v / den, (1.0 - u * u - v * v) / den);
}

bool has_duplicate(const std::vector<Point>& pts, const Point& cand) {
  for (const Point& p : pts) {
    if (p.coords == cand.coords) return true;
  }
  return false;
}

}  // namespace

PointConfiguration generate_configuration(const GeneratorSpec& spec) {
  if (spec.count < 2) throw ValidationError("generator count must be >= 2");
  const std::size_t n = spec.count;
  std::vector<Point> pts;
  pts.reserve(n);
  std::mt19937_64 rng(spec.seed);
  constexpr int kMaxRetries = 256;

  switch (spec.family) {
    case GeneratorSpec::Family::UniformSquare: {
      for (std::size_t i = 0; i < n; ++i) {
        int attempts = 0;
        for (;;) {
          const double x = next_unit(rng);
          const double y = next_unit(rng);
          Point cand = Point::xy(x, y);
          if (!has_duplicate(pts, cand)) {
            pts.push_back(std::move(cand));
            break;
          }
          if (++attempts > kMaxRetries)
            throw ValidationError("generator failed to produce distinct points");
        }
      }
      break;
    }
    case GeneratorSpec::Family::IntegerGrid: {
      const std::size_t w = spec.width > 0
                                ? spec.width
                                : static_cast<std::size_t>(
                                      std::ceil(std::sqrt(static_cast<double>(n))));
      for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(Point::xy(static_cast<double>(i % w), static_cast<double>(i / w)));
      }
      break;
    }
    case GeneratorSpec::Family::HyperbolicCircle: {
      if (!(spec.radius > 0.0)) throw ValidationError("hyperbolic radius must be > 0");
      for (std::size_t i = 0; i < n; ++i) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) /
                           static_cast<double>(n);
        pts.push_back(disk_polar_to_half_plane(spec.radius, phi));
      }
      break;
    }
    case GeneratorSpec::Family::HyperbolicDisk: {
      if (!(spec.radius > 0.0)) throw ValidationError("hyperbolic radius must be > 0");
      const double coshR = std::cosh(spec.radius);
      for (std::size_t i = 0; i < n; ++i) {
        int attempts = 0;
        for (;;) {
          const double u = next_unit(rng);
          const double phi = 2.0 * std::numbers::pi * next_unit(rng);
          // Area-uniform radius: dA = sinh(t) dt dphi.
          const double t = std::acosh(1.0 + u * (coshR - 1.0));
          Point cand = disk_polar_to_half_plane(t, phi);
          if (!has_duplicate(pts, cand)) {
            pts.push_back(std::move(cand));
            break;
          }
          if (++attempts > kMaxRetries)
            throw ValidationError("generator failed to produce distinct points");
        }
      }
      break;
    }
    case GeneratorSpec::Family::Equilateral: {
      for (std::size_t i = 0; i < n; ++i) pts.push_back(Point::at_index(static_cast<long long>(i)));
      break;
    }
  }

  return PointConfiguration(space_for(spec), pts);
}

}  // namespace suppgeo
