#include "suppgeo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "suppgeo/format.hpp"

namespace suppgeo {

namespace {

bool near_edge(double d, double threshold) {
  return std::abs(d - threshold) <= kEpsTol * threshold;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, Exec exec) {
  if (spec.deltas.empty() || spec.s_values.empty())
    throw ValidationError("sweep needs at least one delta and one s");
  for (double d : spec.deltas) {
    if (!(d > 0.0 && d < 1.0)) throw ValidationError("sweep delta must lie in (0,1)");
  }
  for (int s : spec.s_values) {
    if (s < 2) throw ValidationError("sweep s values must be >= 2");
  }
  if (spec.trials < 1) throw ValidationError("sweep trials must be >= 1");

  const SolverMode solver = best_solver_for(space_for(spec.generator));

  std::vector<double> deltas = spec.deltas;
  std::sort(deltas.begin(), deltas.end());
  std::vector<int> s_values = spec.s_values;
  std::sort(s_values.begin(), s_values.end());

  std::vector<long long> totals(deltas.size() * s_values.size(), 0);
  std::size_t n_points = 0;
  for (int t = 0; t < spec.trials; ++t) {
    GeneratorSpec g = spec.generator;
    g.seed = mix_seed(spec.seed, static_cast<std::uint64_t>(t));
    const PointConfiguration cfg = generate_configuration(g);
    n_points = cfg.size();
    for (std::size_t di = 0; di < deltas.size(); ++di) {
      const std::vector<long long> deficits = support_deficits(cfg, deltas[di], solver, exec);
      for (std::size_t si = 0; si < s_values.size(); ++si) {
        long long count = 0;
        for (long long d : deficits) {
          if (d >= s_values[si]) ++count;
        }
        totals[di * s_values.size() + si] += count;
      }
    }
  }

  std::vector<SweepRecord> records;
  records.reserve(totals.size());
  for (std::size_t di = 0; di < deltas.size(); ++di) {
    for (std::size_t si = 0; si < s_values.size(); ++si) {
      SweepRecord r;
      r.delta = deltas[di];
      r.s = s_values[si];
      r.n = n_points;
      r.supported_count = static_cast<double>(totals[di * s_values.size() + si]) /
                          static_cast<double>(spec.trials);
      r.fraction = r.supported_count / static_cast<double>(n_points);
      r.c_hat_cell = r.fraction * static_cast<double>(r.s);
      r.solver = solver.name();
      r.seed = spec.seed;
      records.push_back(std::move(r));
    }
  }
  return records;
}

std::vector<CDeltaPoint> fit_c_delta(const std::vector<SweepRecord>& records) {
  if (records.empty()) throw ValidationError("cannot fit c(delta) from zero records");
  std::map<double, double> best;
  for (const SweepRecord& r : records) {
    auto [it, fresh] = best.emplace(r.delta, r.c_hat_cell);
    if (!fresh) it->second = std::max(it->second, r.c_hat_cell);
  }
  std::vector<CDeltaPoint> out;
  out.reserve(best.size());
  for (const auto& [delta, c_hat] : best) {
    CDeltaPoint p;
    p.delta = delta;
    p.c_hat = c_hat;
    p.reference = std::log(1.0 / delta) / (delta * delta);
    out.push_back(p);
  }
  return out;
}

SnowflakeTransferReport check_snowflake_transfer(const PointConfiguration& c,
                                                 double epsilon, double delta,
                                                 const SolverMode& mode) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw ValidationError("snowflake exponent must lie in (0,1)");
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0,1)");

  SnowflakeTransferReport rep;
  const std::size_t n = c.size();
  const double delta_base = std::pow(delta, 1.0 / epsilon);

  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(c.point(i));
  const PointConfiguration snow(MetricSpace::snowflake(c.space(), epsilon), pts);

  std::vector<double> dist_base(n * n, 0.0), dist_snow(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist_base[i * n + j] = c.distance(i, j);
      dist_snow[i * n + j] = snow.distance(i, j);
    }
  }

  auto note = [&](const std::string& what) { rep.mismatches.push_back(what); };

  std::vector<double> rho_base(n), rho_snow(n);
  for (std::size_t w = 0; w < n; ++w) {
    rho_base[w] = isolation_radius(c, w);
    rho_snow[w] = isolation_radius(snow, w);
    const double expected = std::pow(rho_base[w], epsilon);
    if (rho_snow[w] != expected) {
      std::ostringstream os;
      os << "rho mismatch at w=" << w << ": snow " << format_double(rho_snow[w])
         << " vs base^eps " << format_double(expected);
      note(os.str());
    }
  }

  // Ball identity: every ball pair (outer around w, removal around any p)
  // must pick the same members under both metrics.
  for (std::size_t w = 0; w < n; ++w) {
    const double outer_snow = rho_snow[w] / delta;
    const double outer_base = rho_base[w] / delta_base;
    const double rem_snow = delta * rho_snow[w];
    const double rem_base = delta_base * rho_base[w];
    for (std::size_t x = 0; x < n; ++x) {
      const bool in_snow = dist_snow[w * n + x] < outer_snow;
      const bool in_base = dist_base[w * n + x] < outer_base;
      if (near_edge(dist_snow[w * n + x], outer_snow) ||
          near_edge(dist_base[w * n + x], outer_base))
        ++rep.boundary_hits;
      if (in_snow != in_base) {
        std::ostringstream os;
        os << "outer ball mismatch at w=" << w << ", x=" << x;
        note(os.str());
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t x = 0; x < n; ++x) {
        const bool in_snow = dist_snow[p * n + x] < rem_snow;
        const bool in_base = dist_base[p * n + x] < rem_base;
        if (near_edge(dist_snow[p * n + x], rem_snow) ||
            near_edge(dist_base[p * n + x], rem_base))
          ++rep.boundary_hits;
        if (in_snow != in_base) {
          std::ostringstream os;
          os << "removal ball mismatch at w=" << w << ", p=" << p << ", x=" << x;
          note(os.str());
        }
      }
    }
  }

  const std::vector<long long> def_snow = support_deficits(snow, delta, mode);
  const std::vector<long long> def_base = support_deficits(c, delta_base, mode);
  for (std::size_t w = 0; w < n; ++w) {
    if (def_snow[w] != def_base[w]) {
      std::ostringstream os;
      os << "deficit mismatch at w=" << w << ": snow " << def_snow[w] << " vs base "
         << def_base[w];
      note(os.str());
    }
  }

  rep.equal = rep.mismatches.empty();
  return rep;
}

Point TransferMap::apply(const Point& p) const {
  return Point::xy(m00 * p.coords[0] + m01 * p.coords[1] + tx,
                   m10 * p.coords[0] + m11 * p.coords[1] + ty);
}

void TransferMap::validate_on(const PointConfiguration& c) const {
  if (!(lipschitz >= 1.0)) throw ValidationError("Lipschitz constant must be >= 1");
  if (c.space().kind() != SpaceKind::Euclidean || c.coord_dim() != 2)
    throw ValidationError("transfer map applies to planar euclidean configurations");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Point fi = apply(c.point(i));
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const Point fj = apply(c.point(j));
      const double d = c.distance(i, j);
      const double dx = fi.coords[0] - fj.coords[0];
      const double dy = fi.coords[1] - fj.coords[1];
      const double d_img = std::sqrt(dx * dx + dy * dy);
      if (d_img > lipschitz * d * (1.0 + kEpsTol) ||
          d_img < d / lipschitz * (1.0 - kEpsTol)) {
        std::ostringstream os;
        os << "declared Lipschitz constant " << format_double(lipschitz)
           << " violated on pair (" << i << "," << j << ")";
        throw ValidationError(os.str());
      }
    }
  }
}

BiLipschitzReport check_bilipschitz_transfer(const PointConfiguration& c,
                                             const TransferMap& map, double delta,
                                             int s, const SolverMode& mode) {
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("delta must lie in (0,1)");
  if (s < 2) throw ValidationError("s must be an integer >= 2");
  map.validate_on(c);

  BiLipschitzReport rep;
  const double L = map.lipschitz;
  rep.image_delta = delta / (L * L);

  std::vector<Point> mapped;
  mapped.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) mapped.push_back(map.apply(c.point(i)));
  const PointConfiguration image(MetricSpace::euclidean(2), mapped);

  auto note = [&](const std::string& what) { rep.violations.push_back(what); };

  for (std::size_t w = 0; w < c.size(); ++w) {
    const double rho = isolation_radius(c, w);
    const double rho_img = isolation_radius(image, w);
    if (rho_img > L * rho * (1.0 + kEpsTol) || rho_img < rho / L * (1.0 - kEpsTol)) {
      std::ostringstream os;
      os << "isolation radius distortion out of [rho/L, L rho] at w=" << w;
      note(os.str());
    }
  }

  const std::vector<long long> src = support_deficits(c, delta, mode);
  const std::vector<long long> img = support_deficits(image, rep.image_delta, mode);
  for (std::size_t w = 0; w < c.size(); ++w) {
    if (src[w] >= s && img[w] < s) {
      std::ostringstream os;
      os << "supported source point w=" << w << " (deficit " << src[w]
         << ") maps to image deficit " << img[w] << " < s=" << s;
      note(os.str());
    }
  }

  rep.holds = rep.violations.empty();
  return rep;
}

std::string sweep_records_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  os << "delta,s,n,supported_count,fraction,c_hat_cell,solver,seed\n";
  for (const SweepRecord& r : records) {
    os << format_double(r.delta) << ',' << r.s << ',' << r.n << ','
       << format_double(r.supported_count) << ',' << format_double(r.fraction) << ','
       << format_double(r.c_hat_cell) << ',' << r.solver << ',' << r.seed << '\n';
  }
  return os.str();
}

std::string c_delta_csv(const std::vector<CDeltaPoint>& points) {
  std::ostringstream os;
  os << "delta,c_hat,reference_curve\n";
  for (const CDeltaPoint& p : points) {
    os << format_double(p.delta) << ',' << format_double(p.c_hat) << ','
       << format_double(p.reference) << '\n';
  }
  return os.str();
}

}  // namespace suppgeo
