#pragma once

#include <string>
#include <vector>

#include "dunkl/types.hpp"

namespace dunkl {

/// Shared configuration of the verification suites.
struct SuiteConfig {
  std::vector<std::vector<double>> k_configs{{0.0}, {0.3}, {0.7}, {1.5}, {2.5},
                                             {0.7, 1.2}};
  double c = 72.0;          // Gaussian decay constant of the truncated bounds
  double tol = 1e-6;
  double t_min = 1e-4;
  double t_max = 1e4;
  std::size_t t_count = 200;
  int refine = 1;           // grid-resolution multiplier (stability checks)
  std::string grid_id = "g1";
};

const std::vector<std::string>& suite_names();

/// Runs one named suite ("specfn", "measure", "heat", "transform",
/// "translation", "hardy") and returns its estimate reports (unjudged).
std::vector<EstimateReport> run_suite(const std::string& name, const SuiteConfig& cfg);

std::vector<EstimateReport> run_all_suites(const SuiteConfig& cfg);

}  // namespace dunkl
