#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "suppgeo/covering.hpp"
#include "suppgeo/experiments.hpp"
#include "suppgeo/metric_space.hpp"
#include "suppgeo/support.hpp"
#include "suppgeo/witness.hpp"

namespace suppgeo {

// Parsed input file: a space plus either explicit points or a generator.
struct LoadedInput {
  MetricSpace space;
  std::optional<PointConfiguration> config;
  std::optional<GeneratorSpec> generator;

  // Materializes the configuration, running the generator if needed.
  const PointConfiguration& require_config();
};

LoadedInput load_config(const std::string& path);
LoadedInput parse_config(const nlohmann::json& j);

MetricSpace parse_space(const nlohmann::json& j);
GeneratorSpec parse_generator(const nlohmann::json& j);

// Headerless n x n CSV of comma-separated reals.
std::vector<std::vector<double>> load_matrix_csv(const std::string& path);

// Accepts "0.05" or the rational form "1/20".
double parse_delta(const std::string& text);

nlohmann::json space_to_json(const MetricSpace& space);
nlohmann::json config_to_json(const PointConfiguration& c);
nlohmann::json support_report_to_json(const SupportReport& report);
nlohmann::json witness_to_json(const WitnessResult& result);
nlohmann::json doubling_to_json(const DoublingEstimate& est);
nlohmann::json sweep_records_json(const std::vector<SweepRecord>& records);
nlohmann::json snowflake_report_to_json(const SnowflakeTransferReport& rep,
                                        double epsilon, double delta);
nlohmann::json bilipschitz_report_to_json(const BiLipschitzReport& rep, double delta,
                                          int s, const TransferMap& map);

void write_text_file(const std::string& path, const std::string& bytes);

}  // namespace suppgeo
