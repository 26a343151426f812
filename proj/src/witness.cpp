#include "suppgeo/witness.hpp"

#include <algorithm>
#include <limits>

#include "suppgeo/covering.hpp"

namespace suppgeo {

WitnessResult construct_witness(const PointConfiguration& a) {
  WitnessResult res;
  res.diameter = a.diameter();

  BallFamily cover;
  cover.radius = res.diameter / 10.0;
  cover.centers.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) cover.centers[i] = i;

  res.centers = vitali_disjoint_subfamily(a, cover);
  if (res.centers.size() < 2)
    throw ValidationError("degenerate witness: input coverable by a single small ball");
  res.s_achieved = static_cast<long long>(res.centers.size()) - 1;

  double sep = std::numeric_limits<double>::infinity();
  double max_rho = 0.0;
  for (std::size_t j = 0; j < res.centers.size(); ++j) {
    double rho = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < res.centers.size(); ++k) {
      if (j == k) continue;
      const double d = a.distance(res.centers[j], res.centers[k]);
      rho = std::min(rho, d);
      if (k > j) sep = std::min(sep, d);
    }
    max_rho = std::max(max_rho, rho);
  }
  res.min_separation = sep;
  res.max_isolation_radius = max_rho;
  res.verified = verify_witness_analytic(a, res);
  return res;
}

bool verify_witness_analytic(const PointConfiguration& a, const WitnessResult& result) {
  if (result.centers.size() < 2) return false;
  const double d_n = result.diameter;
  for (std::size_t j = 0; j < result.centers.size(); ++j) {
    double rho = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < result.centers.size(); ++k) {
      if (j == k) continue;
      const double d = a.distance(result.centers[j], result.centers[k]);
      if (d < d_n / 5.0) return false;
      rho = std::min(rho, d);
    }
    if (!(rho < 2.0 * d_n)) return false;
  }
  return true;
}

}  // namespace suppgeo
