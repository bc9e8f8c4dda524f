#ifndef CARDREC_CONFIG_HPP
#define CARDREC_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "cardrec/approximand.hpp"
#include "cardrec/families.hpp"
#include "cardrec/modulation.hpp"

namespace cardrec {

// Parsed form of the JSON run configuration used by `recover`.  Parsing is
// strict: unknown keys are errors so typos in experiment scripts surface
// immediately.  All numeric fields are validated against the module
// preconditions before any computation starts.
struct RunConfig {
  int dimension = 1;
  int grid = 64;
  std::string family_kind;
  std::vector<double> parameters;  // one entry for recover, several for sweep
  double mq_exponent = 0.5;
  bool allow_small_alpha = false;
  int block_window = 3;
  int out_window = 0;    // 0: derived as support radius + block window
  int sample_window = 8;
  double tolerance = 1e-12;
  TestFunctionSpec test_function;
  std::vector<std::vector<double>> eval_points;
  std::string out_errors = "errors.csv";
  std::string out_points = "points.csv";

  InterpolatorFamily make_family(double parameter) const;
  std::string canonical() const;  // hashed into the CSV comment line
};

// Throws std::invalid_argument with the offending field names on any
// malformed, unknown, or out-of-contract entry.
RunConfig load_config(const std::string& path);

// "a:b:step" per axis -> list of points (1-D), or the tensor grid in n-D.
std::vector<std::vector<double>> parse_range(const std::string& range, int dim);

}  // namespace cardrec

#endif
