#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "suppgeo/metric_space.hpp"
#include "suppgeo/parallel.hpp"
#include "suppgeo/support.hpp"

namespace suppgeo {

struct SweepSpec {
  GeneratorSpec generator;
  std::vector<double> deltas;  // each in (0,1)
  std::vector<int> s_values;   // each >= 2
  int trials = 1;
  std::uint64_t seed = 0;
};

struct SweepRecord {
  double delta = 0.0;
  int s = 0;
  std::size_t n = 0;
  double supported_count = 0.0;  // mean over trials
  double fraction = 0.0;         // supported_count / n
  double c_hat_cell = 0.0;       // fraction * s
  std::string solver;
  std::uint64_t seed = 0;
};

// One record per (delta, s) cell, averaged over trials. Trial t's
// configuration comes from mix_seed(seed, t) and is shared across every
// cell, so the monotone dependence of deficits on delta carries over to the
// emitted fractions exactly. Solver: exact planar where applicable,
// restricted-to-C for abstract spaces, grid(64) otherwise.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, Exec exec = Exec::Parallel);

struct CDeltaPoint {
  double delta = 0.0;
  double c_hat = 0.0;      // max c_hat_cell over the s cells at this delta
  double reference = 0.0;  // delta^-2 * ln(1/delta), the planar growth shape
};

std::vector<CDeltaPoint> fit_c_delta(const std::vector<SweepRecord>& records);

struct SnowflakeTransferReport {
  bool equal = false;
  long long boundary_hits = 0;  // memberships within kEpsTol of a ball edge
  std::vector<std::string> mismatches;
};

// Verifies, point by point, that the snowflaked configuration at delta and
// the base configuration at delta^(1/epsilon) have identical isolation radii
// (rho^epsilon), identical outer/removal ball member sets, and identical
// deficits (hence identical supported sets for every s).
SnowflakeTransferReport check_snowflake_transfer(const PointConfiguration& c,
                                                 double epsilon, double delta,
                                                 const SolverMode& mode);

// Affine planar map with a declared two-sided Lipschitz constant L >= 1:
// d(a,b)/L <= d(f a, f b) <= L d(a,b), validated on all pairs.
struct TransferMap {
  double m00 = 1.0, m01 = 0.0;
  double m10 = 0.0, m11 = 1.0;
  double tx = 0.0, ty = 0.0;
  double lipschitz = 1.0;

  Point apply(const Point& p) const;
  void validate_on(const PointConfiguration& c) const;
};

struct BiLipschitzReport {
  bool holds = false;
  double image_delta = 0.0;  // delta / L^2
  std::vector<std::string> violations;
};

// Checks the isolation-radius distortion bounds rho/L <= rho' <= L rho and
// that every (delta,s)-supported source point maps to a (delta/L^2,s)-
// supported image point, with exact solvers on both sides.
BiLipschitzReport check_bilipschitz_transfer(const PointConfiguration& c,
                                             const TransferMap& map, double delta,
                                             int s, const SolverMode& mode);

std::string sweep_records_csv(const std::vector<SweepRecord>& records);
std::string c_delta_csv(const std::vector<CDeltaPoint>& points);

}  // namespace suppgeo
