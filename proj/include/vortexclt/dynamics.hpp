#pragma once

#include <vector>

#include "vortexclt/ensemble.hpp"
#include "vortexclt/greens.hpp"

namespace vortexclt {

struct TrajectoryConfig {
  double dt = 1e-3;
  int n_steps = 1000;
  int record_every = 100;

  TrajectoryConfig() = default;
  TrajectoryConfig(double dt, int n_steps, int record_every);
  void validate() const;
};

/// dx_i/dt = -sum_{j != i} xi_j grad-perp G(x_i, x_j) on the torus and the sphere.
std::vector<Vec3> velocity(const VortexConfig& config, const SplitPotential& split = default_split());

/// Hamiltonian evaluated with the same kernel as the velocity field.
double dynamics_hamiltonian(const VortexConfig& config, const SplitPotential& split = default_split());

struct Snapshot {
  double t = 0.0;
  VortexConfig config;
  double hamiltonian = 0.0;
};

/// Classical RK4. Snapshots at t = 0 and every record_every steps. Sphere
/// positions are renormalized after each step. A negative dt integrates backward.
std::vector<Snapshot> integrate(const VortexConfig& config, const TrajectoryConfig& tc,
                                const SplitPotential& split = default_split());

}  // namespace vortexclt
