#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vortexclt/geometry.hpp"
#include "vortexclt/greens.hpp"
#include "vortexclt/random.hpp"

namespace vortexclt {

class SpectralField;

/// Sign patterns: "alternating" (+-+-...), "balanced" (first half +, rest -),
/// or an explicit string over {+,-}.
std::vector<int> make_signs(std::string_view pattern, int n);

struct ValidityWindow {
  bool ok = true;
  /// Largest admissible beta/gamma (exclusive).
  double max_beta_over_gamma = 0.0;
  std::string reason;
};

class EnsembleParams {
 public:
  EnsembleParams(double beta, double gamma, Domain domain, std::vector<int> signs);

  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  int n() const { return static_cast<int>(signs_->size()); }
  Domain domain() const { return domain_; }
  const std::vector<int>& signs() const { return *signs_; }
  const std::vector<double>& intensities() const { return *xi_; }
  const ValidityWindow& validity() const { return window_; }
  /// Throws ValidityError when outside the window.
  void require_valid() const;

  EnsembleParams with_beta(double beta) const;

 private:
  double beta_;
  double gamma_;
  Domain domain_;
  std::shared_ptr<const std::vector<int>> signs_;
  std::shared_ptr<const std::vector<double>> xi_;
  ValidityWindow window_;
};

/// xi_i = sigma_i / sqrt(gamma N).
std::vector<double> intensities(const EnsembleParams& params);

struct VortexConfig {
  EnsembleParams params;
  std::vector<DomainPoint> positions;
};

VortexConfig uniform_config(const EnsembleParams& params, Rng& rng);

/// Pairwise energy sum, plus the self-interaction (1/2) sum xi_i^2 g(x_i,x_i) on the disk.
double hamiltonian(const VortexConfig& config);
double hamiltonian(const VortexConfig& config, const InteractionKernel& kernel);
/// Same with the split evaluator instead of the tabulated kernel (torus only).
double hamiltonian_split(const VortexConfig& config, const SplitPotential& split);
/// Pair energy with the Yukawa part W_m only (torus).
double hamiltonian_yukawa(const VortexConfig& config, const TorusYukawaTable& kernel);

/// Expectation of H when all positions are independent and uniform.
double uniform_mean_hamiltonian(const EnsembleParams& params);

/// omega_k = sum_i xi_i e^{-2 pi i k.x_i} for 0 < |k|_inf <= K.
SpectralField vorticity_fourier(const VortexConfig& config, int cutoff);

/// (1/2) sum_{i != j} xi_i xi_j G_K(x_i, x_j), G_K the Fourier partial sum with |k|_inf <= K.
double hamiltonian_via_double_integral(const VortexConfig& config, int cutoff);

struct ChainState {
  VortexConfig config;
  double cached_energy = 0.0;
  double step_size = 0.1;
  std::uint64_t accept_count = 0;
  std::uint64_t proposal_count = 0;
  Rng rng;

  double acceptance() const {
    return proposal_count == 0 ? 0.0 : static_cast<double>(accept_count) / proposal_count;
  }
};

ChainState make_chain(VortexConfig start, Rng rng, double step_size = 0.1);

/// N single-vortex Metropolis updates followed by a full energy refresh.
void mcmc_sweep(ChainState& state, const EnsembleParams& params, const InteractionKernel& kernel);
void mcmc_sweep(ChainState& state, const EnsembleParams& params);

struct SamplingOptions {
  std::size_t n_samples = 0;
  std::size_t burn_in = 0;
  std::size_t thinning = 1;
  /// Adapt the step size during burn-in toward acceptance in [0.2, 0.5].
  bool tune = true;
};

struct GibbsSamples {
  std::vector<VortexConfig> samples;
  std::vector<double> energies;
  double acceptance = 1.0;
  double step_size = 0.0;
  /// Integrated autocorrelation time of H in units of retained samples; NaN
  /// when fewer than 1000 samples were retained.
  double tau_h = 0.0;
};

/// beta = 0 draws i.i.d. uniform configurations; otherwise runs a Metropolis chain.
GibbsSamples sample_gibbs(const EnsembleParams& params, const SamplingOptions& options, Rng& rng);
/// Chain variant starting from a given configuration.
GibbsSamples sample_gibbs_from(const VortexConfig& start, const SamplingOptions& options, Rng& rng);

struct DipolePairing {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> surplus;
};

/// Greedy pairing: repeatedly extract the globally closest unpaired opposite-sign couple.
DipolePairing minimal_dipole_pairing(const VortexConfig& config);

}  // namespace vortexclt
