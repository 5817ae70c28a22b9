#pragma once

#include <map>
#include <string>
#include <vector>

namespace vortexclt {

/// Resolved parameters of one CLI invocation, echoed into every output header.
struct RunConfig {
  std::string command;
  std::string domain = "torus";
  double beta = 1.0;
  double gamma = 1.0;
  int n_vortices = 64;
  std::string signs = "alternating";
  long long n_samples = 1000;
  long long burn_in = 1000;
  long long thinning = 1;
  int cutoff = 16;
  int gaussian_cutoff = 32;
  double m = 6.0;
  long long seed = -1;
  int chains = 1;
  int grid = 32;
  double dt = 1e-3;
  int steps = 1000;
  int record_every = 100;
  long long z_samples = 0;
  std::string source = "0.3,0";
  std::string output;
  std::string format;

  /// Key/value view in a fixed order, restricted to keys the command uses.
  std::vector<std::pair<std::string, std::string>> entries() const;
};

/// Entry point of the command-line tool; returns the process exit code
/// (0 success, 2 validation failure, 3 runtime failure).
int run(int argc, char** argv);
int run(const std::vector<std::string>& args);

}  // namespace vortexclt
