#include "suppgeo/config_io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "suppgeo/format.hpp"

namespace suppgeo {

using nlohmann::json;

const PointConfiguration& LoadedInput::require_config() {
  if (!config) {
    if (!generator) throw ValidationError("input supplies neither points nor a generator");
    config = generate_configuration(*generator);
  }
  return *config;
}

MetricSpace parse_space(const json& j) {
  // Either {"space": {...}} objects or the shorthand {"space": "equilateral",
  // "n": 10} with parameters alongside.
  const json* obj = &j;
  std::string kind;
  json params = json::object();
  if (j.is_object() && j.contains("space")) {
    if (j["space"].is_string()) {
      kind = j["space"].get<std::string>();
      params = j;
    } else {
      obj = &j["space"];
    }
  }
  if (kind.empty()) {
    if (!obj->is_object() || !obj->contains("kind"))
      throw ValidationError("space descriptor needs a \"kind\"");
    kind = (*obj)["kind"].get<std::string>();
    params = *obj;
  }

  if (kind == "euclidean") {
    if (!params.contains("dim")) throw ValidationError("euclidean space needs \"dim\"");
    return MetricSpace::euclidean(params["dim"].get<int>());
  }
  if (kind == "matrix") {
    if (params.contains("csv")) {
      return MetricSpace::distance_matrix(load_matrix_csv(params["csv"].get<std::string>()));
    }
    if (params.contains("matrix")) {
      return MetricSpace::distance_matrix(
          params["matrix"].get<std::vector<std::vector<double>>>());
    }
    throw ValidationError("matrix space needs \"csv\" or inline \"matrix\"");
  }
  if (kind == "snowflake") {
    if (!params.contains("base") || !params.contains("epsilon"))
      throw ValidationError("snowflake space needs \"base\" and \"epsilon\"");
    return MetricSpace::snowflake(parse_space(params["base"]), params["epsilon"].get<double>());
  }
  if (kind == "scaled") {
    if (!params.contains("base") || !params.contains("lambda"))
      throw ValidationError("scaled space needs \"base\" and \"lambda\"");
    return MetricSpace::scaled(parse_space(params["base"]), params["lambda"].get<double>());
  }
  if (kind == "hyperbolic" || kind == "hyperbolic-half-plane")
    return MetricSpace::hyperbolic_half_plane();
  if (kind == "heisenberg" || kind == "heisenberg-gauge")
    return MetricSpace::heisenberg_gauge();
  if (kind == "equilateral") {
    if (!params.contains("n")) throw ValidationError("equilateral space needs \"n\"");
    return MetricSpace::equilateral(params["n"].get<long long>());
  }
  throw ValidationError("unknown space kind: " + kind);
}

GeneratorSpec parse_generator(const json& j) {
  GeneratorSpec g;
  if (j.is_object()) {
    if (!j.contains("family")) throw ValidationError("generator needs \"family\"");
    g.family = family_from_name(j["family"].get<std::string>());
    if (!j.contains("n")) throw ValidationError("generator needs \"n\"");
    g.count = j["n"].get<std::size_t>();
    if (j.contains("seed")) g.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("radius")) g.radius = j["radius"].get<double>();
    if (j.contains("width")) g.width = j["width"].get<std::size_t>();
  } else {
    throw ValidationError("generator must be a JSON object");
  }
  return g;
}

LoadedInput parse_config(const json& j) {
  if (!j.is_object()) throw ValidationError("config root must be a JSON object");

  if (j.contains("generator")) {
    GeneratorSpec g = parse_generator(j["generator"]);
    LoadedInput in{space_for(g), std::nullopt, g};
    return in;
  }

  MetricSpace space = parse_space(j);
  std::vector<Point> pts;
  if (j.contains("points")) {
    for (const json& pj : j["points"]) {
      if (pj.is_number()) {
        pts.push_back(Point::at_index(pj.get<long long>()));
      } else if (pj.is_array()) {
        Point p;
        p.coords = pj.get<std::vector<double>>();
        pts.push_back(std::move(p));
      } else {
        throw ValidationError("points must be coordinate arrays or indices");
      }
    }
  } else if (space.is_abstract()) {
    // Abstract spaces default to their full universe.
    for (long long i = 0; i < space.universe_size(); ++i) pts.push_back(Point::at_index(i));
  } else {
    throw ValidationError("coordinate space input needs \"points\" or \"generator\"");
  }
  LoadedInput in{space, PointConfiguration(space, pts), std::nullopt};
  return in;
}

LoadedInput load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open config file: " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config parse error: ") + e.what());
  }
  return parse_config(j);
}

std::vector<std::vector<double>> load_matrix_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open matrix csv: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      errno = 0;
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || errno != 0)
        throw ValidationError("matrix csv: cannot parse entry '" + cell + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double parse_delta(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    char* end = nullptr;
    const double a = std::strtod(num.c_str(), &end);
    if (end == num.c_str()) throw ValidationError("bad rational: " + text);
    const double b = std::strtod(den.c_str(), &end);
    if (end == den.c_str() || b == 0.0) throw ValidationError("bad rational: " + text);
    return a / b;
  }
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw ValidationError("cannot parse number: " + text);
  return v;
}

json space_to_json(const MetricSpace& space) {
  json j;
  switch (space.kind()) {
    case SpaceKind::Euclidean:
      j["kind"] = "euclidean";
      j["dim"] = space.coord_dim();
      break;
    case SpaceKind::DistanceMatrix: {
      j["kind"] = "matrix";
      const long long n = space.universe_size();
      std::vector<std::vector<double>> rows(n, std::vector<double>(n));
      for (long long a = 0; a < n; ++a) {
        for (long long b = 0; b < n; ++b) rows[a][b] = space.matrix_at(a, b);
      }
      j["matrix"] = rows;
      break;
    }
    case SpaceKind::Snowflake:
      j["kind"] = "snowflake";
      j["epsilon"] = space.epsilon();
      j["base"] = space_to_json(space.base());
      break;
    case SpaceKind::Scaled:
      j["kind"] = "scaled";
      j["lambda"] = space.lambda();
      j["base"] = space_to_json(space.base());
      break;
    case SpaceKind::HyperbolicHalfPlane:
      j["kind"] = "hyperbolic";
      break;
    case SpaceKind::HeisenbergGauge:
      j["kind"] = "heisenberg";
      break;
    case SpaceKind::Equilateral:
      j["kind"] = "equilateral";
      j["n"] = space.universe_size();
      break;
  }
  return j;
}

static json point_to_json(const Point& p) {
  if (p.is_abstract()) return json(p.index);
  return json(p.coords);
}

json config_to_json(const PointConfiguration& c) {
  json j;
  j["space"] = space_to_json(c.space());
  json pts = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) pts.push_back(point_to_json(c.point(i)));
  j["points"] = pts;
  return j;
}

json support_report_to_json(const SupportReport& report) {
  json j;
  j["delta"] = report.delta;
  j["s"] = report.s;
  j["solver"] = report.mode.name();
  j["conservativeness"] = report.conservativeness();
  j["supported_indices"] = report.supported_indices();
  json pts = json::array();
  for (std::size_t w = 0; w < report.points.size(); ++w) {
    const PointSupport& ps = report.points[w];
    json row;
    row["index"] = w;
    row["isolation_radius"] = ps.isolation_radius;
    row["outer_count"] = ps.outer_count;
    row["deficit"] = ps.deficit;
    row["supported"] = ps.supported;
    row["removal_center"] = point_to_json(ps.removal_center);
    pts.push_back(std::move(row));
  }
  j["points"] = pts;
  return j;
}

json witness_to_json(const WitnessResult& result) {
  json j;
  j["centers"] = result.centers;
  j["delta"] = result.delta;
  j["s_achieved"] = result.s_achieved;
  j["diameter"] = result.diameter;
  j["min_separation"] = result.min_separation;
  j["max_isolation_radius"] = result.max_isolation_radius;
  j["verified"] = result.verified;
  return j;
}

json doubling_to_json(const DoublingEstimate& est) {
  json j;
  j["d_hat"] = est.d_hat;
  j["dim_hat"] = est.dim_hat;
  json samples = json::array();
  for (const DoublingSample& s : est.samples) {
    json row;
    row["center"] = s.center;
    row["radius"] = s.radius;
    row["cover_count"] = s.cover_count;
    row["fine_count"] = s.fine_count;
    samples.push_back(std::move(row));
  }
  j["samples"] = samples;
  return j;
}

json sweep_records_json(const std::vector<SweepRecord>& records) {
  json arr = json::array();
  for (const SweepRecord& r : records) {
    json row;
    row["delta"] = r.delta;
    row["s"] = r.s;
    row["n"] = r.n;
    row["supported_count"] = r.supported_count;
    row["fraction"] = r.fraction;
    row["c_hat_cell"] = r.c_hat_cell;
    row["solver"] = r.solver;
    row["seed"] = r.seed;
    arr.push_back(std::move(row));
  }
  return arr;
}

json snowflake_report_to_json(const SnowflakeTransferReport& rep, double epsilon,
                              double delta) {
  json j;
  j["law"] = "snowflake";
  j["epsilon"] = epsilon;
  j["delta"] = delta;
  j["equal"] = rep.equal;
  j["boundary_hits"] = rep.boundary_hits;
  j["mismatches"] = rep.mismatches;
  return j;
}

json bilipschitz_report_to_json(const BiLipschitzReport& rep, double delta, int s,
                                const TransferMap& map) {
  json j;
  j["law"] = "bilipschitz";
  j["delta"] = delta;
  j["s"] = s;
  j["lipschitz"] = map.lipschitz;
  j["image_delta"] = rep.image_delta;
  j["holds"] = rep.holds;
  j["violations"] = rep.violations;
  return j;
}

void write_text_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open output file: " + path);
  f << bytes;
  if (!f) throw IoError("failed writing output file: " + path);
}

}  // namespace suppgeo
