#pragma once

#include <cstdint>
#include <vector>

#include "suppgeo/metric_space.hpp"
#include "suppgeo/parallel.hpp"

namespace suppgeo {

// Equal-radius ball family over configuration points.
struct BallFamily {
  std::vector<std::size_t> centers;
  double radius = 0.0;
};

// Nets use closed coverage (<= r) and strict separation (> r); support-set
// machinery keeps the open-ball convention separately.
struct NetResult {
  std::vector<std::size_t> net;
  double covering_radius = 0.0;  // achieved max distance to the net (<= r)
  double separation = 0.0;       // achieved min pairwise net distance (> r);
                                 // +inf for a single-point net
};

NetResult greedy_net(const PointConfiguration& c, double r);

// Scan in the given order; keep a center iff it is >= 2r from every kept one,
// so kept balls are disjoint and each skipped ball sits inside the 5x dilate
// of some kept ball.
std::vector<std::size_t> vitali_disjoint_subfamily(const PointConfiguration& c,
                                                   const BallFamily& family);

// Greedy R/2-net count of C ∩ closed-ball(center, R): an upper bound on the
// minimal number of R/2-balls covering that subset.
long long doubling_count(const PointConfiguration& c, std::size_t center, double R);

struct DoublingSample {
  std::size_t center = 0;
  double radius = 0.0;
  long long cover_count = 0;  // net at R/2
  long long fine_count = 0;   // net at R/2^kDimRefineExp, for the dimension readout
};

// Dimension is read from the deeper-scale net counts: a single radius
// halving overshoots log2 by the net-vs-cover packing slack, while
// log2(count)/k at ratio 2^k flattens onto the covering exponent.
inline constexpr int kDimRefineExp = 4;

struct DoublingEstimate {
  std::vector<DoublingSample> samples;
  long long d_hat = 0;   // max cover_count over samples
  double dim_hat = 0.0;  // max over samples of log2(fine_count)/kDimRefineExp
};

// Centers uniform over C, radii log-uniform in [min pairwise distance,
// diameter], both drawn deterministically from the seed.
DoublingEstimate estimate_doubling(const PointConfiguration& c, int sample_count,
                                   std::uint64_t seed, Exec exec = Exec::Parallel);

}  // namespace suppgeo
