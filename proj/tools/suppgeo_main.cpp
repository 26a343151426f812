// Command-line front end: supported / doubling / witness / sweep / transfer.
// All heavy lifting lives in the library; this file only parses flags.

#include <string>

#include "CLI11.hpp"
#include "suppgeo/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"supported-point geometry toolkit"};
  app.require_subcommand(1);

  suppgeo::CommandSpec spec;
  std::string map_text;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("-i,--input", spec.input_path, "input config JSON");
    if (needs_input) in->required();
    sub->add_option("-o,--output", spec.output_path, "output path (default stdout)");
  };

  CLI::App* supported = app.add_subcommand("supported", "per-point deficits and the supported set");
  add_common(supported, true);
  supported->add_option("--delta", spec.delta, "delta in (0,1); decimal or rational like 1/20")->required();
  supported->add_option("--s", spec.s, "support threshold s >= 2")->required();
  supported->add_option("--solver", spec.solver, "auto|restricted|exact2d|grid");
  supported->add_option("--grid-res", spec.grid_resolution, "grid nodes per axis (grid solver)");

  CLI::App* doubling = app.add_subcommand("doubling", "sampled doubling-constant estimate");
  add_common(doubling, true);
  doubling->add_option("--samples", spec.samples, "number of (center, radius) samples");
  doubling->add_option("--seed", spec.seed, "sampling seed")->each([&](const std::string&) {
    spec.seed_set = true;
  });

  CLI::App* witness = app.add_subcommand("witness", "non-doubling witness construction");
  add_common(witness, true);

  CLI::App* sweep = app.add_subcommand("sweep", "supported-fraction sweep over (delta, s) cells");
  add_common(sweep, true);
  sweep->add_option("--deltas", spec.deltas, "comma list of deltas")->required();
  sweep->add_option("--s-values", spec.s_values, "comma list of s thresholds")->required();
  sweep->add_option("--trials", spec.trials, "configurations per cell");
  sweep->add_option("--seed", spec.seed, "sweep seed (overrides generator seed)")
      ->each([&](const std::string&) { spec.seed_set = true; });
  sweep->add_option("--format", spec.format, "csv|json");
  sweep->add_option("--fit-output", spec.fit_output, "also write the c(delta) fit CSV here");

  CLI::App* transfer = app.add_subcommand("transfer", "snowflake / bi-Lipschitz transfer checks");
  add_common(transfer, true);
  transfer->add_option("--law", spec.law, "snowflake|bilipschitz")->required();
  transfer->add_option("--delta", spec.delta, "delta in (0,1)")->required();
  transfer->add_option("--epsilon", spec.epsilon, "snowflake exponent in (0,1)");
  transfer->add_option("--s", spec.s, "support threshold (bilipschitz law)");
  transfer->add_option("--map", map_text, "affine map m00,m01,m10,m11,tx,ty (bilipschitz law)");
  transfer->add_option("--lipschitz", spec.lipschitz, "declared Lipschitz constant L >= 1");
  transfer->add_option("--solver", spec.solver, "auto|restricted|exact2d|grid");

  CLI11_PARSE(app, argc, argv);

  spec.subcommand = app.get_subcommands().front()->get_name();
  if (!map_text.empty()) {
    std::stringstream ss(map_text);
    std::string item;
    while (std::getline(ss, item, ',')) spec.map_coeffs.push_back(std::stod(item));
  }
  return suppgeo::run_command(spec);
}
