#include "suppgeo/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace suppgeo {

namespace {

// Index-order greedy over an index subset: keep i iff d(i, kept) > r for all
// kept so far.
std::vector<std::size_t> greedy_net_over(const PointConfiguration& c,
                                         const std::vector<std::size_t>& subset,
                                         double r) {
  std::vector<std::size_t> net;
  for (std::size_t i : subset) {
    bool fresh = true;
    for (std::size_t s : net) {
      if (c.distance(i, s) <= r) {
        fresh = false;
        break;
      }
    }
    if (fresh) net.push_back(i);
  }
  return net;
}

}  // namespace

NetResult greedy_net(const PointConfiguration& c, double r) {
  if (!(r > 0.0)) throw ValidationError("net radius must be positive");
  std::vector<std::size_t> all(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) all[i] = i;
  NetResult out;
  out.net = greedy_net_over(c, all, r);

  double cover = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t s : out.net) nearest = std::min(nearest, c.distance(i, s));
    cover = std::max(cover, nearest);
  }
  out.covering_radius = cover;

  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < out.net.size(); ++a) {
    for (std::size_t b = a + 1; b < out.net.size(); ++b) {
      sep = std::min(sep, c.distance(out.net[a], out.net[b]));
    }
  }
  out.separation = sep;
  return out;
}

std::vector<std::size_t> vitali_disjoint_subfamily(const PointConfiguration& c,
                                                   const BallFamily& family) {
  if (family.centers.empty()) throw ValidationError("ball family must be non-empty");
  if (!(family.radius > 0.0)) throw ValidationError("ball radius must be positive");
  for (std::size_t i : family.centers) {
    if (i >= c.size()) throw ValidationError("ball center index out of range");
  }
  const double gap = 2.0 * family.radius;
  std::vector<std::size_t> kept;
  for (std::size_t i : family.centers) {
    bool disjoint = true;
    for (std::size_t s : kept) {
      if (c.distance(i, s) < gap) {
        disjoint = false;
        break;
      }
    }
    if (disjoint) kept.push_back(i);
  }
  return kept;
}

long long doubling_count(const PointConfiguration& c, std::size_t center, double R) {
  if (!(R > 0.0)) throw ValidationError("doubling radius must be positive");
  if (center >= c.size()) throw ValidationError("center index out of range");
  std::vector<std::size_t> subset;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.distance(center, i) <= R) subset.push_back(i);
  }
  if (subset.empty()) return 0;
  return static_cast<long long>(greedy_net_over(c, subset, 0.5 * R).size());
}

DoublingEstimate estimate_doubling(const PointConfiguration& c, int sample_count,
                                   std::uint64_t seed, Exec exec) {
  if (sample_count < 1) throw ValidationError("sample count must be >= 1");
  const double lo = c.min_pairwise_distance();
  const double hi = c.diameter();
  const double log_ratio = std::log(hi / lo);

  DoublingEstimate est;
  est.samples.resize(sample_count);
  std::mt19937_64 rng(seed);
  for (auto& s : est.samples) {
    s.center = static_cast<std::size_t>(rng() % c.size());
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    s.radius = lo * std::exp(u * log_ratio);
  }

  const double fine_div = std::pow(2.0, kDimRefineExp);
  parallel_for(est.samples.size(), exec, [&](std::size_t k) {
    DoublingSample& s = est.samples[k];
    s.cover_count = doubling_count(c, s.center, s.radius);
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c.distance(s.center, i) <= s.radius) subset.push_back(i);
    }
    s.fine_count = subset.empty()
                       ? 0
                       : static_cast<long long>(
                             greedy_net_over(c, subset, s.radius / fine_div).size());
  });

  est.d_hat = 0;
  est.dim_hat = 0.0;
  for (const auto& s : est.samples) {
    est.d_hat = std::max(est.d_hat, s.cover_count);
    if (s.fine_count > 0) {
      est.dim_hat = std::max(est.dim_hat, std::log2(static_cast<double>(s.fine_count)) /
                                              kDimRefineExp);
    }
  }
  return est;
}

}  // namespace suppgeo
