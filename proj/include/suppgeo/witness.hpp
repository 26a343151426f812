#pragma once

#include <vector>

#include "suppgeo/metric_space.hpp"

namespace suppgeo {

// Output of the non-doubling witness construction: cover the input set A by
// balls of radius diam(A)/10 centered at its own points, thin the cover to a
// disjoint subfamily, and keep the surviving centers. Each kept center is
// (1/20, |C|-1)-supported, certified analytically from the separation and
// isolation-radius bounds alone.
struct WitnessResult {
  std::vector<std::size_t> centers;  // indices into the input configuration
  double delta = 1.0 / 20.0;
  long long s_achieved = 0;          // |centers| - 1
  double diameter = 0.0;             // diam(A)
  double min_separation = 0.0;       // min pairwise distance among centers
  double max_isolation_radius = 0.0; // max rho over centers, within the center set
  bool verified = false;
};

WitnessResult construct_witness(const PointConfiguration& a);

// True iff centers are pairwise >= diam/5 apart and every isolation radius
// within the center set is < 2*diam. Those two bounds alone force any
// removal ball of radius rho/20 (centered anywhere in the ambient space) to
// contain at most one center, while the outer ball of radius 20*rho holds
// all of them; so the true deficit infimum is >= |centers|-1 without solving
// any optimization.
bool verify_witness_analytic(const PointConfiguration& a, const WitnessResult& result);

}  // namespace suppgeo
