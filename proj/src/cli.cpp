#include "suppgeo/cli.hpp"

#include <iostream>
#include <sstream>

#include "suppgeo/config_io.hpp"
#include "suppgeo/covering.hpp"
#include "suppgeo/experiments.hpp"
#include "suppgeo/format.hpp"
#include "suppgeo/metric_space.hpp"
#include "suppgeo/support.hpp"
#include "suppgeo/witness.hpp"

namespace suppgeo {

namespace {

void emit(const CommandSpec& spec, const std::string& bytes) {
  if (spec.output_path.empty()) {
    std::cout << bytes;
    if (!bytes.empty() && bytes.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(spec.output_path, bytes);
  }
}

SolverMode resolve_solver(const CommandSpec& spec, const MetricSpace& space) {
  if (spec.solver == "auto") return best_solver_for(space);
  if (spec.solver == "restricted") return SolverMode::restricted_to_c();
  if (spec.solver == "exact2d") return SolverMode::euclidean_exact_2d();
  if (spec.solver == "grid") return SolverMode::candidate_grid(spec.grid_resolution);
  throw ValidationError("unknown solver: " + spec.solver +
                        " (expected auto|restricted|exact2d|grid)");
}

std::vector<double> parse_delta_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_delta(item));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(static_cast<int>(std::stoll(item)));
  }
  return out;
}

int cmd_supported(const CommandSpec& spec) {
  LoadedInput in = load_config(spec.input_path);
  const PointConfiguration& cfg = in.require_config();
  SupportParams params;
  params.delta = parse_delta(spec.delta);
  params.s = spec.s;
  const SolverMode mode = resolve_solver(spec, cfg.space());
  const SupportedSet set = supported_points(cfg, params, mode);
  emit(spec, support_report_to_json(set.report).dump(2));
  return 0;
}

int cmd_doubling(const CommandSpec& spec) {
  LoadedInput in = load_config(spec.input_path);
  const PointConfiguration& cfg = in.require_config();
  const std::uint64_t seed =
      spec.seed_set ? spec.seed : (in.generator ? in.generator->seed : 0);
  const DoublingEstimate est = estimate_doubling(cfg, spec.samples, seed);
  emit(spec, doubling_to_json(est).dump(2));
  return 0;
}

int cmd_witness(const CommandSpec& spec) {
  LoadedInput in = load_config(spec.input_path);
  const PointConfiguration& cfg = in.require_config();
  const WitnessResult res = construct_witness(cfg);
  emit(spec, witness_to_json(res).dump(2));
  return res.verified ? 0 : 1;
}

int cmd_sweep(const CommandSpec& spec) {
  LoadedInput in = load_config(spec.input_path);
  if (!in.generator)
    throw ValidationError("sweep input must supply a \"generator\"");
  SweepSpec sw;
  sw.generator = *in.generator;
  sw.deltas = parse_delta_list(spec.deltas);
  sw.s_values = parse_int_list(spec.s_values);
  sw.trials = spec.trials;
  sw.seed = spec.seed_set ? spec.seed : in.generator->seed;
  const std::vector<SweepRecord> records = run_sweep(sw);
  if (spec.format == "json") {
    emit(spec, sweep_records_json(records).dump(2));
  } else if (spec.format == "csv") {
    emit(spec, sweep_records_csv(records));
  } else {
    throw ValidationError("unknown output format: " + spec.format);
  }
  if (!spec.fit_output.empty()) {
    write_text_file(spec.fit_output, c_delta_csv(fit_c_delta(records)));
  }
  return 0;
}

int cmd_transfer(const CommandSpec& spec) {
  LoadedInput in = load_config(spec.input_path);
  const PointConfiguration& cfg = in.require_config();
  const SolverMode mode = resolve_solver(spec, cfg.space());
  const double delta = parse_delta(spec.delta);
  if (spec.law == "snowflake") {
    const SnowflakeTransferReport rep =
        check_snowflake_transfer(cfg, spec.epsilon, delta, mode);
    emit(spec, snowflake_report_to_json(rep, spec.epsilon, delta).dump(2));
    return rep.equal ? 0 : 1;
  }
  if (spec.law == "bilipschitz") {
    if (spec.map_coeffs.size() != 6)
      throw ValidationError("bilipschitz transfer needs --map m00,m01,m10,m11,tx,ty");
    TransferMap map;
    map.m00 = spec.map_coeffs[0];
    map.m01 = spec.map_coeffs[1];
    map.m10 = spec.map_coeffs[2];
    map.m11 = spec.map_coeffs[3];
    map.tx = spec.map_coeffs[4];
    map.ty = spec.map_coeffs[5];
    map.lipschitz = spec.lipschitz;
    const BiLipschitzReport rep =
        check_bilipschitz_transfer(cfg, map, delta, spec.s, mode);
    emit(spec, bilipschitz_report_to_json(rep, delta, spec.s, map).dump(2));
    return rep.holds ? 0 : 1;
  }
  throw ValidationError("unknown transfer law: " + spec.law +
                        " (expected snowflake|bilipschitz)");
}

}  // namespace

int run_command(const CommandSpec& spec) {
  try {
    if (spec.subcommand == "supported") return cmd_supported(spec);
    if (spec.subcommand == "doubling") return cmd_doubling(spec);
    if (spec.subcommand == "witness") return cmd_witness(spec);
    if (spec.subcommand == "sweep") return cmd_sweep(spec);
    if (spec.subcommand == "transfer") return cmd_transfer(spec);
    throw ValidationError("unknown subcommand: " + spec.subcommand);
  } catch (const ValidationError& e) {
    std::cerr << "error: validation: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << std::endl;
    return 2;
  }
}

}  // namespace suppgeo
