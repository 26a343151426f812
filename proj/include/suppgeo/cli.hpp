#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace suppgeo {

// Parsed command line; run_command does all validation and work so the whole
// path stays testable without spawning a process.
struct CommandSpec {
  std::string subcommand;  // supported | doubling | witness | sweep | transfer
  std::string input_path;
  std::string output_path;  // empty = stdout
  std::string format = "csv";  // sweep output: csv | json

  std::string delta = "";  // decimal or rational "1/20"
  int s = 2;
  std::string solver = "auto";  // auto | restricted | exact2d | grid
  int grid_resolution = 64;

  int samples = 200;        // doubling
  std::uint64_t seed = 0;   // doubling/sweep override
  bool seed_set = false;

  std::string deltas;    // sweep: comma list
  std::string s_values;  // sweep: comma list
  int trials = 1;
  std::string fit_output;  // sweep: optional c(delta) CSV

  std::string law;  // transfer: snowflake | bilipschitz
  double epsilon = 0.5;
  std::vector<double> map_coeffs;  // transfer: m00,m01,m10,m11,tx,ty
  double lipschitz = 1.0;
};

// Exit codes: 0 success (witness/transfer additionally require the
// verification to hold), 1 validation failure, 2 internal/IO error.
int run_command(const CommandSpec& spec);

}  // namespace suppgeo
