#include "suppgeo/support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace suppgeo {

namespace {

// Resolved view of a space the exact solver can handle: Euclidean(1) or
// Euclidean(2), possibly under snowflake/scale wrappers. Balls in such a
// space are Euclidean balls whose radius is to_euclidean(r).
struct PlanarView {
  int dim = 2;
  double to_euclidean(double r) const {
    double out = r;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      out = it->snowflake ? std::pow(out, 1.0 / it->value) : out / it->value;
    }
    return out;
  }
  struct Step {
    bool snowflake = false;
    double value = 0.0;
  };
  std::vector<Step> steps;  // outermost wrapper first
};

std::optional<PlanarView> planar_view(const MetricSpace& space) {
  PlanarView view;
  const MetricSpace* s = &space;
  for (;;) {
    switch (s->kind()) {
      case SpaceKind::Euclidean:
        if (s->coord_dim() > 2) return std::nullopt;
        view.dim = s->coord_dim();
        return view;
      case SpaceKind::Snowflake:
        view.steps.push_back({true, s->epsilon()});
        s = &s->base();
        break;
      case SpaceKind::Scaled:
        view.steps.push_back({false, s->lambda()});
        s = &s->base();
        break;
      default:
        return std::nullopt;
    }
  }
}

struct Candidate {
  double x = 0.0;
  double y = 0.0;
};

long long count_within_sq(const PointConfiguration& c,
                          const std::vector<std::size_t>& eligible, Candidate p,
                          double r_sq, std::size_t skip_a = SIZE_MAX,
                          std::size_t skip_b = SIZE_MAX) {
  long long cnt = 0;
  for (std::size_t i : eligible) {
    if (i == skip_a || i == skip_b) continue;
    const double* q = c.coord(i);
    const double dx = q[0] - p.x;
    const double dy = c.coord_dim() == 2 ? q[1] - p.y : -p.y;
    if (dx * dx + dy * dy <= r_sq) ++cnt;
  }
  return cnt;
}

// Exact fixed-radius maximum coverage in the plane. The open-ball supremum
// over centers is attained by a closed ball of slightly smaller radius
// r' = r(1 - kEpsTol); an optimal closed-ball center lies at an eligible
// point or at an intersection of two radius-r' circles about eligible points
// less than 2r' apart. Counting uses a hair above r' to absorb rounding in
// the intersection construction while staying strictly below r.
CoverageResult exact_planar_coverage(const PointConfiguration& c,
                                     const std::vector<std::size_t>& eligible, double r,
                                     const PlanarView& view) {
  CoverageResult best;
  best.count = 0;
  if (eligible.empty()) {
    best.center = c.point(0);
    return best;
  }
  const double r_shrunk = r * (1.0 - kEpsTol);
  const double re = view.to_euclidean(r_shrunk);
  const double re_count = view.to_euclidean(r_shrunk * (1.0 + 1e-13));
  const double re_count_sq = re_count * re_count;
  const double pair_limit_sq = 4.0 * re * re;
  const bool planar = view.dim == 2;

  Candidate best_c{};
  auto consider = [&](Candidate p, long long cnt) {
    if (cnt > best.count) {
      best.count = cnt;
      best_c = p;
    }
  };

  for (std::size_t i : eligible) {
    const double* q = c.coord(i);
    const Candidate p{q[0], planar ? q[1] : 0.0};
    consider(p, count_within_sq(c, eligible, p, re_count_sq));
  }
  for (std::size_t a = 0; a < eligible.size(); ++a) {
    const double* pa = c.coord(eligible[a]);
    const double ax = pa[0];
    const double ay = planar ? pa[1] : 0.0;
    for (std::size_t b = a + 1; b < eligible.size(); ++b) {
      const double* pb = c.coord(eligible[b]);
      const double dx = pb[0] - ax;
      const double dy = (planar ? pb[1] : 0.0) - ay;
      const double d_sq = dx * dx + dy * dy;
      if (!(d_sq < pair_limit_sq) || d_sq == 0.0) continue;
      const double d = std::sqrt(d_sq);
      const double h = std::sqrt(std::max(0.0, re * re - 0.25 * d_sq));
      const double mx = ax + 0.5 * dx;
      const double my = ay + 0.5 * dy;
      const double ux = -dy / d;
      const double uy = dx / d;
      // Both defining points sit at distance exactly re from the candidate;
      // count them outright rather than through the rounded midpoint, whose
      // error scales with the coordinate magnitude instead of re.
      for (const Candidate p : {Candidate{mx + h * ux, my + h * uy},
                                Candidate{mx - h * ux, my - h * uy}}) {
        const long long cnt = 2 + count_within_sq(c, eligible, p, re_count_sq,
                                                  eligible[a], eligible[b]);
        consider(p, cnt);
      }
    }
  }

  // For a line configuration the optimum projects onto the axis, where it
  // covers at least as much; report the valid 1-D center.
  if (planar) {
    best.center = Point::xy(best_c.x, best_c.y);
  } else {
    best.center = Point::x1(best_c.x);
  }
  return best;
}

CoverageResult restricted_coverage(const PointConfiguration& c,
                                   const std::vector<std::size_t>& eligible, double r) {
  CoverageResult best;
  best.count = 0;
  std::size_t best_idx = 0;
  for (std::size_t p = 0; p < c.size(); ++p) {
    long long cnt = 0;
    for (std::size_t i : eligible) {
      if (c.distance(i, p) < r) ++cnt;
    }
    if (cnt > best.count) {
      best.count = cnt;
      best_idx = p;
    }
  }
  best.center = c.point(best_idx);
  return best;
}

CoverageResult grid_coverage(const PointConfiguration& c,
                             const std::vector<std::size_t>& eligible, double r,
                             int resolution) {
  if (resolution < 8) throw ValidationError("candidate grid resolution must be >= 8");
  if (c.space().is_abstract())
    throw ValidationError("candidate-grid solver needs a coordinate space");
  const int dim = c.coord_dim();
  CoverageResult best;
  best.count = 0;
  best.center = c.point(0);
  if (eligible.empty()) return best;

  std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
  for (std::size_t i : eligible) {
    const double* q = c.coord(i);
    for (int k = 0; k < dim; ++k) {
      lo[k] = std::min(lo[k], q[k]);
      hi[k] = std::max(hi[k], q[k]);
    }
  }
  for (int k = 0; k < dim; ++k) {
    lo[k] -= r;
    hi[k] += r;
  }

  const bool half_plane = c.space().kind() == SpaceKind::HyperbolicHalfPlane;
  long long total = 1;
  for (int k = 0; k < dim; ++k) total *= resolution;
  Point node;
  node.coords.resize(dim);
  bool found = false;
  for (long long t = 0; t < total; ++t) {
    long long rem = t;
    for (int k = 0; k < dim; ++k) {
      const long long j = rem % resolution;
      rem /= resolution;
      node.coords[k] = lo[k] + (hi[k] - lo[k]) * static_cast<double>(j) /
                                   static_cast<double>(resolution - 1);
    }
    if (half_plane && !(node.coords[1] > 0.0)) continue;
    long long cnt = 0;
    for (std::size_t i : eligible) {
      if (c.distance_to(i, node) < r) ++cnt;
    }
    if (!found || cnt > best.count) {
      best.count = cnt;
      best.center = node;
      found = true;
    }
  }
  return best;
}

}  // namespace

std::string SolverMode::name() const {
  switch (kind) {
    case Kind::RestrictedToC:
      return "restricted-to-c";
    case Kind::EuclideanExact2D:
      return "exact-2d";
    case Kind::CandidateGrid:
      return "grid-" + std::to_string(grid_resolution);
  }
  return "?";
}

std::vector<std::size_t> SupportReport::supported_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].supported) out.push_back(i);
  }
  return out;
}

double isolation_radius(const PointConfiguration& c, std::size_t w) {
  if (c.size() < 2) throw ValidationError("isolation radius needs |C| >= 2");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (v == w) continue;
    best = std::min(best, c.distance(w, v));
  }
  return best;
}

std::vector<double> all_isolation_radii(const PointConfiguration& c, Exec exec) {
  std::vector<double> out(c.size());
  parallel_for(c.size(), exec, [&](std::size_t w) { out[w] = isolation_radius(c, w); });
  return out;
}

bool exact2d_applicable(const MetricSpace& space) {
  return planar_view(space).has_value();
}

SolverMode best_solver_for(const MetricSpace& space) {
  if (exact2d_applicable(space)) return SolverMode::euclidean_exact_2d();
  if (space.is_abstract()) return SolverMode::restricted_to_c();
  return SolverMode::candidate_grid(64);
}

CoverageResult max_ball_coverage(const PointConfiguration& c,
                                 const std::vector<std::size_t>& eligible, double r,
                                 const SolverMode& mode) {
  if (!(r > 0.0)) throw ValidationError("coverage radius must be positive");
  for (std::size_t i : eligible) {
    if (i >= c.size()) throw ValidationError("eligible index out of range");
  }
  switch (mode.kind) {
    case SolverMode::Kind::RestrictedToC:
      return restricted_coverage(c, eligible, r);
    case SolverMode::Kind::EuclideanExact2D: {
      const auto view = planar_view(c.space());
      if (!view)
        throw ValidationError("exact-2d solver requires a planar or line space, got " +
                              c.space().describe());
      return exact_planar_coverage(c, eligible, r, *view);
    }
    case SolverMode::Kind::CandidateGrid:
      return grid_coverage(c, eligible, r, mode.grid_resolution);
  }
  throw ValidationError("unknown solver mode");
}

namespace {

PointSupport point_support(const PointConfiguration& c, std::size_t w, double rho,
                           double delta, const SolverMode& mode) {
  PointSupport ps;
  ps.isolation_radius = rho;
  const double outer_r = rho / delta;
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i == w) {
      eligible.push_back(i);  // d(w,w) = 0 < outer_r
      continue;
    }
    if (c.distance(w, i) < outer_r) eligible.push_back(i);
  }
  ps.outer_count = static_cast<long long>(eligible.size());
  const CoverageResult cov = max_ball_coverage(c, eligible, delta * rho, mode);
  ps.deficit = ps.outer_count - cov.count;
  ps.removal_center = cov.center;
  return ps;
}

}  // namespace

long long supported_deficit(const PointConfiguration& c, std::size_t w, double delta,
                            const SolverMode& mode) {
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0,1)");
  if (w >= c.size()) throw ValidationError("point index out of range");
  return point_support(c, w, isolation_radius(c, w), delta, mode).deficit;
}

std::vector<long long> support_deficits(const PointConfiguration& c, double delta,
                                        const SolverMode& mode, Exec exec) {
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0,1)");
  std::vector<long long> out(c.size());
  const std::vector<double> rho = all_isolation_radii(c, exec);
  parallel_for(c.size(), exec, [&](std::size_t w) {
    out[w] = point_support(c, w, rho[w], delta, mode).deficit;
  });
  return out;
}

void validate_support_params(const SupportParams& params) {
  if (!(params.delta > 0.0 && params.delta < 1.0))
    throw ValidationError("delta must lie in (0,1)");
  if (params.s < 2) throw ValidationError("s must be an integer >= 2");
}

SupportReport compute_support(const PointConfiguration& c, const SupportParams& params,
                              const SolverMode& mode, Exec exec) {
  validate_support_params(params);
  if (mode.kind == SolverMode::Kind::EuclideanExact2D && !exact2d_applicable(c.space()))
    throw ValidationError("exact-2d solver requires a planar or line space, got " +
                          c.space().describe());
  SupportReport rep;
  rep.delta = params.delta;
  rep.s = params.s;
  rep.mode = mode;
  rep.exact = mode.kind == SolverMode::Kind::EuclideanExact2D;
  rep.points.resize(c.size());
  const std::vector<double> rho = all_isolation_radii(c, exec);
  parallel_for(c.size(), exec, [&](std::size_t w) {
    PointSupport ps = point_support(c, w, rho[w], params.delta, mode);
    ps.supported = ps.deficit >= params.s;
    rep.points[w] = std::move(ps);
  });
  return rep;
}

SupportedSet supported_points(const PointConfiguration& c, const SupportParams& params,
                              const SolverMode& mode, Exec exec) {
  SupportedSet out;
  out.report = compute_support(c, params, mode, exec);
  out.indices = out.report.supported_indices();
  return out;
}

}  // namespace suppgeo
