#pragma once

#include <string>
#include <vector>

#include "suppgeo/metric_space.hpp"
#include "suppgeo/parallel.hpp"

namespace suppgeo {

struct SupportParams {
  double delta = 0.0;  // in (0,1)
  int s = 2;           // >= 2; counts points, so integral
};

// Realization of the inner optimization over removal-ball centers p.
//
//  RestrictedToC    p ranges over the configuration's own points. Default for
//                   abstract spaces, where the configuration is the ambient
//                   universe. Deficits are upper bounds on the true infimum.
//  EuclideanExact2D exact fixed-radius maximum coverage over the whole plane
//                   (or line). Accepts Euclidean(1), Euclidean(2) and
//                   snowflake/scale wrappers over them, whose balls are
//                   Euclidean disks of a transformed radius.
//  CandidateGrid    axis-aligned grid over the eligible bounding box inflated
//                   by r. Approximate; deficits are upper bounds.
struct SolverMode {
  enum class Kind { RestrictedToC, EuclideanExact2D, CandidateGrid };

  Kind kind = Kind::RestrictedToC;
  int grid_resolution = 64;  // nodes per axis, >= 8

  static SolverMode restricted_to_c() { return {Kind::RestrictedToC, 0}; }
  static SolverMode euclidean_exact_2d() { return {Kind::EuclideanExact2D, 0}; }
  static SolverMode candidate_grid(int resolution) {
    return {Kind::CandidateGrid, resolution};
  }

  std::string name() const;
};

struct CoverageResult {
  long long count = 0;
  Point center;
};

struct PointSupport {
  double isolation_radius = 0.0;
  long long outer_count = 0;  // |B(w, rho_w/delta) ∩ C|
  long long deficit = 0;      // outer_count minus the best removal coverage
  bool supported = false;     // deficit >= s
  Point removal_center;       // attaining center, informational
};

struct SupportReport {
  double delta = 0.0;
  int s = 0;
  SolverMode mode;
  // True when deficits realize the infimum over the whole ambient space;
  // false means they are upper bounds (restricting p can only raise the
  // infimum), which over-approximates the supported set.
  bool exact = false;
  std::vector<PointSupport> points;

  std::vector<std::size_t> supported_indices() const;
  const char* conservativeness() const { return exact ? "exact" : "upper-bound"; }
};

struct SupportedSet {
  std::vector<std::size_t> indices;
  SupportReport report;
};

// min over v != w of d(C[w], C[v]); positive by the configuration invariant.
double isolation_radius(const PointConfiguration& c, std::size_t w);
std::vector<double> all_isolation_radii(const PointConfiguration& c,
                                        Exec exec = Exec::Parallel);

// Largest number of eligible points a single open ball of radius r can
// swallow, with the center chosen per the solver mode. Ties break toward the
// earliest candidate in the deterministic enumeration order.
CoverageResult max_ball_coverage(const PointConfiguration& c,
                                 const std::vector<std::size_t>& eligible, double r,
                                 const SolverMode& mode);

long long supported_deficit(const PointConfiguration& c, std::size_t w, double delta,
                            const SolverMode& mode);

// Per-point deficits for one delta; the cheap core of a sweep cell, reused
// across every s threshold.
std::vector<long long> support_deficits(const PointConfiguration& c, double delta,
                                        const SolverMode& mode, Exec exec = Exec::Parallel);

SupportReport compute_support(const PointConfiguration& c, const SupportParams& params,
                              const SolverMode& mode, Exec exec = Exec::Parallel);

SupportedSet supported_points(const PointConfiguration& c, const SupportParams& params,
                              const SolverMode& mode, Exec exec = Exec::Parallel);

bool exact2d_applicable(const MetricSpace& space);
SolverMode best_solver_for(const MetricSpace& space);

void validate_support_params(const SupportParams& params);

}  // namespace suppgeo
