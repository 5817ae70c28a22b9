#include "vortexclt/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "vortexclt/diagnostics.hpp"
#include "vortexclt/errors.hpp"
#include "vortexclt/gaussian.hpp"

namespace vortexclt {

namespace {

constexpr double kPi = std::numbers::pi;

ValidityWindow classify(double beta, double gamma, Domain domain, const std::vector<int>& signs) {
  ValidityWindow w;
  const int n = static_cast<int>(signs.size());
  if (domain == Domain::UnitDisk) {
    const int plus = static_cast<int>(std::count(signs.begin(), signs.end(), 1));
    const int minus = n - plus;
    w.max_beta_over_gamma = 4.0 * kPi * n / (1.0 + std::min(plus, minus));
  } else {
    w.max_beta_over_gamma = kPi * n;
  }
  w.ok = beta / gamma < w.max_beta_over_gamma;
  if (!w.ok) {
    w.reason = "beta/gamma = " + std::to_string(beta / gamma) + " is outside the validity window (< " +
               std::to_string(w.max_beta_over_gamma) + ")";
  }
  return w;
}

}  // namespace

std::vector<int> make_signs(std::string_view pattern, int n) {
  if (n < 1) throw std::invalid_argument("number of vortices must be positive");
  std::vector<int> signs(n);
  if (pattern == "alternating") {
    for (int i = 0; i < n; ++i) signs[i] = (i % 2 == 0) ? 1 : -1;
  } else if (pattern == "balanced") {
    for (int i = 0; i < n; ++i) signs[i] = (i < (n + 1) / 2) ? 1 : -1;
  } else {
    if (static_cast<int>(pattern.size()) != n) {
      throw std::invalid_argument("explicit sign pattern must have exactly n characters");
    }
    for (int i = 0; i < n; ++i) {
      if (pattern[i] == '+') {
        signs[i] = 1;
      } else if (pattern[i] == '-') {
        signs[i] = -1;
      } else {
        throw std::invalid_argument("sign pattern must be 'alternating', 'balanced' or a +/- string");
      }
    }
  }
  return signs;
}

EnsembleParams::EnsembleParams(double beta, double gamma, Domain domain, std::vector<int> signs)
    : beta_(beta), gamma_(gamma), domain_(domain) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be >= 0");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be > 0");
  if (signs.empty()) throw std::invalid_argument("at least one vortex is required");
  long total = 0;
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    total += s;
  }
  if (domain == Domain::UnitDisk && total != 0) {
    throw std::invalid_argument("disk ensembles require neutral signs (sum of signs = 0)");
  }
  window_ = classify(beta, gamma, domain, signs);
  const double scale = 1.0 / std::sqrt(gamma * static_cast<double>(signs.size()));
  auto xi = std::make_shared<std::vector<double>>(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) (*xi)[i] = signs[i] * scale;
  xi_ = std::move(xi);
  signs_ = std::make_shared<const std::vector<int>>(std::move(signs));
}

void EnsembleParams::require_valid() const {
  if (!window_.ok) throw ValidityError(window_.reason);
}

EnsembleParams EnsembleParams::with_beta(double beta) const {
  return EnsembleParams(beta, gamma_, domain_, *signs_);
}

std::vector<double> intensities(const EnsembleParams& params) { return params.intensities(); }

VortexConfig uniform_config(const EnsembleParams& params, Rng& rng) {
  VortexConfig c{params, {}};
  c.positions.reserve(params.n());
  for (int i = 0; i < params.n(); ++i) c.positions.push_back(sample_uniform(params.domain(), rng));
  return c;
}

double hamiltonian(const VortexConfig& config, const InteractionKernel& kernel) {
  const auto& xi = config.params.intensities();
  const auto& pos = config.positions;
  const std::size_t n = pos.size();
  double pairs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) row += xi[j] * kernel.pair(pos[i].coords(), pos[j].coords());
    pairs += xi[i] * row;
  }
  double self = 0.0;
  if (kernel.domain() == Domain::UnitDisk) {
    for (std::size_t i = 0; i < n; ++i) self += xi[i] * xi[i] * kernel.self(pos[i].coords());
  }
  return pairs + 0.5 * self;
}

double hamiltonian(const VortexConfig& config) {
  return hamiltonian(config, InteractionKernel(config.params.domain()));
}

double hamiltonian_split(const VortexConfig& config, const SplitPotential& split) {
  if (config.params.domain() != Domain::Torus2) throw UnsupportedDomain("split Hamiltonian is torus-only");
  const auto& xi = config.params.intensities();
  const auto& pos = config.positions;
  double total = 0.0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) total += xi[i] * xi[j] * torus_green(pos[i], pos[j], split);
  }
  return total;
}

double hamiltonian_yukawa(const VortexConfig& config, const TorusYukawaTable& kernel) {
  if (config.params.domain() != Domain::Torus2) throw UnsupportedDomain("Yukawa Hamiltonian is torus-only");
  const auto& xi = config.params.intensities();
  const auto& pos = config.positions;
  double total = 0.0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      row += xi[j] * kernel.value(torus_displacement(pos[i].coords(), pos[j].coords()));
    }
    total += xi[i] * row;
  }
  return total;
}

double uniform_mean_hamiltonian(const EnsembleParams& params) {
  if (params.domain() != Domain::UnitDisk) return 0.0;
  const auto& xi = params.intensities();
  double sum = 0.0;
  double sum2 = 0.0;
  for (double x : xi) {
    sum += x;
    sum2 += x * x;
  }
  // E[g(x,x)] = gbar and E[G(x,y)] = 1/(8 pi) for independent uniform points.
  return 0.5 * sum2 * disk_gbar() + 0.5 * (sum * sum - sum2) / (8.0 * kPi);
}

SpectralField vorticity_fourier(const VortexConfig& config, int cutoff) {
  if (config.params.domain() != Domain::Torus2) throw UnsupportedDomain("vorticity_fourier is torus-only");
  SpectralField field = SpectralField::torus(std::max(cutoff, 0));
  if (cutoff < 1) return field;
  const auto& xi = config.params.intensities();
  const int width = 2 * cutoff + 1;
  std::vector<std::complex<double>> acc(static_cast<std::size_t>(cutoff + 1) * width);
  std::vector<std::complex<double>> ex(cutoff + 1);
  std::vector<std::complex<double>> ey(width);
  for (std::size_t i = 0; i < config.positions.size(); ++i) {
    const Vec3& c = config.positions[i].coords();
    const std::complex<double> wx = std::polar(1.0, -2.0 * kPi * c.x);
    const std::complex<double> wy = std::polar(1.0, -2.0 * kPi * c.y);
    ex[0] = 1.0;
    for (int k = 1; k <= cutoff; ++k) ex[k] = ex[k - 1] * wx;
    ey[cutoff] = 1.0;
    for (int k = 1; k <= cutoff; ++k) {
      ey[cutoff + k] = ey[cutoff + k - 1] * wy;
      ey[cutoff - k] = std::conj(ey[cutoff + k]);
    }
    for_each_half_mode(cutoff, [&](int k1, int k2) {
      acc[static_cast<std::size_t>(k1) * width + (k2 + cutoff)] += xi[i] * ex[k1] * ey[k2 + cutoff];
    });
  }
  for_each_half_mode(cutoff, [&](int k1, int k2) {
    field.set_torus_coeff(k1, k2, acc[static_cast<std::size_t>(k1) * width + (k2 + cutoff)]);
  });
  return field;
}

double hamiltonian_via_double_integral(const VortexConfig& config, int cutoff) {
  if (cutoff < 1) return 0.0;
  const SpectralField field = vorticity_fourier(config, cutoff);
  double sum2 = 0.0;
  for (double x : config.params.intensities()) sum2 += x * x;
  double total = 0.0;
  for_each_half_mode(cutoff, [&](int k1, int k2) {
    total += (std::norm(field.torus_coeff(k1, k2)) - sum2) / SpectralField::torus_eigenvalue(k1, k2);
  });
  return total;
}

ChainState make_chain(VortexConfig start, Rng rng, double step_size) {
  if (!(step_size > 0.0)) throw std::invalid_argument("step size must be positive");
  ChainState s{std::move(start), 0.0, step_size, 0, 0, std::move(rng)};
  s.step_size = std::min(step_size, max_step(s.config.params.domain()));
  s.cached_energy = hamiltonian(s.config);
  return s;
}

void mcmc_sweep(ChainState& state, const EnsembleParams& params, const InteractionKernel& kernel) {
  params.require_valid();
  auto& pos = state.config.positions;
  const auto& xi = params.intensities();
  const std::size_t n = pos.size();
  const double beta = params.beta();
  const bool disk = params.domain() == Domain::UnitDisk;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    ++state.proposal_count;
    const std::optional<DomainPoint> trial = propose_displacement(pos[i], state.step_size, state.rng);
    if (!trial) continue;
    const Vec3& old_c = pos[i].coords();
    const Vec3& new_c = trial->coords();
    double delta = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Vec3& cj = pos[j].coords();
      delta += xi[j] * (kernel.pair(new_c, cj) - kernel.pair(old_c, cj));
    }
    delta *= xi[i];
    if (disk) delta += 0.5 * xi[i] * xi[i] * (kernel.self(new_c) - kernel.self(old_c));
    const double u = unif(state.rng);
    if (beta == 0.0 || u < std::exp(-beta * delta)) {
      pos[i] = *trial;
      state.cached_energy += delta;
      ++state.accept_count;
    }
  }
  state.cached_energy = hamiltonian(state.config, kernel);
}

void mcmc_sweep(ChainState& state, const EnsembleParams& params) {
  mcmc_sweep(state, params, InteractionKernel(params.domain()));
}

namespace {

double series_tau(const std::vector<double>& energies) {
  if (energies.size() < 1000) return std::numeric_limits<double>::quiet_NaN();
  try {
    return autocorrelation_time(energies);
  } catch (const std::invalid_argument&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

GibbsSamples sample_gibbs_from(const VortexConfig& start, const SamplingOptions& options, Rng& rng) {
  const EnsembleParams& params = start.params;
  params.require_valid();
  if (options.thinning < 1) throw std::invalid_argument("thinning must be >= 1");
  GibbsSamples out;
  const InteractionKernel kernel(params.domain());
  ChainState state = make_chain(start, rng, 0.25 * max_step(params.domain()));
  std::uint64_t window_acc = 0;
  std::uint64_t window_prop = 0;
  for (std::size_t sweep = 0; sweep < options.burn_in; ++sweep) {
    const auto acc0 = state.accept_count;
    const auto prop0 = state.proposal_count;
    mcmc_sweep(state, params, kernel);
    window_acc += state.accept_count - acc0;
    window_prop += state.proposal_count - prop0;
    if (options.tune && (sweep + 1) % 10 == 0 && window_prop > 0) {
      const double rate = static_cast<double>(window_acc) / window_prop;
      if (rate > 0.5) state.step_size = std::min(1.2 * state.step_size, max_step(params.domain()));
      if (rate < 0.2) state.step_size *= 0.8;
      window_acc = 0;
      window_prop = 0;
    }
  }
  state.accept_count = 0;
  state.proposal_count = 0;
  out.samples.reserve(options.n_samples);
  out.energies.reserve(options.n_samples);
  for (std::size_t s = 0; s < options.n_samples; ++s) {
    for (std::size_t t = 0; t < options.thinning; ++t) mcmc_sweep(state, params, kernel);
    out.samples.push_back(state.config);
    out.energies.push_back(state.cached_energy);
  }
  out.acceptance = state.acceptance();
  out.step_size = state.step_size;
  out.tau_h = series_tau(out.energies);
  rng = state.rng;
  return out;
}

GibbsSamples sample_gibbs(const EnsembleParams& params, const SamplingOptions& options, Rng& rng) {
  params.require_valid();
  if (options.thinning < 1) throw std::invalid_argument("thinning must be >= 1");
  if (params.beta() > 0.0) {
    if (options.n_samples == 0) return GibbsSamples{};
    const VortexConfig start = uniform_config(params, rng);
    return sample_gibbs_from(start, options, rng);
  }
  GibbsSamples out;
  const InteractionKernel kernel(params.domain());
  out.samples.reserve(options.n_samples);
  out.energies.reserve(options.n_samples);
  for (std::size_t s = 0; s < options.n_samples; ++s) {
    VortexConfig c = uniform_config(params, rng);
    out.energies.push_back(hamiltonian(c, kernel));
    out.samples.push_back(std::move(c));
  }
  out.tau_h = series_tau(out.energies);
  return out;
}

DipolePairing minimal_dipole_pairing(const VortexConfig& config) {
  const auto& signs = config.params.signs();
  const auto& pos = config.positions;
  std::vector<int> plus;
  std::vector<int> minus;
  for (int i = 0; i < static_cast<int>(signs.size()); ++i) (signs[i] > 0 ? plus : minus).push_back(i);
  std::vector<std::tuple<double, int, int>> candidates;
  candidates.reserve(plus.size() * minus.size());
  for (int p : plus) {
    for (int q : minus) candidates.emplace_back(distance(pos[p], pos[q]), p, q);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<char> used(signs.size(), 0);
  DipolePairing out;
  for (const auto& [d, p, q] : candidates) {
    if (used[p] || used[q]) continue;
    used[p] = used[q] = 1;
    out.pairs.emplace_back(p, q);
  }
  for (int i = 0; i < static_cast<int>(signs.size()); ++i) {
    if (!used[i]) out.surplus.push_back(i);
  }
  return out;
}

}  // namespace vortexclt
