#pragma once

#include <stdexcept>
#include <string>

namespace suppgeo {

// Invalid inputs: bad parameters, malformed configs, metric-axiom violations,
// solver/space mismatches. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failed reads/writes of result files. The CLI maps this (and any other
// unexpected exception) to exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace suppgeo
