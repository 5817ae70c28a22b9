#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "vortexclt/ensemble.hpp"
#include "vortexclt/gaussian.hpp"
#include "vortexclt/random.hpp"

namespace vortexclt {

enum class EstimateMethod { Iid, BatchMeans, ControlVariate };

struct EstimateWithError {
  double value = 0.0;
  double std_error = 0.0;
  double n_eff = 0.0;
  EstimateMethod method = EstimateMethod::Iid;
};

std::string method_name(EstimateMethod m);

/// Plain Monte Carlo of E_uniform[e^{-beta H}] with i.i.d. error bar.
EstimateWithError estimate_z_vortex(const EnsembleParams& params, std::size_t n_samples, Rng& rng);

struct ZEstimateReport {
  EstimateWithError plain;
  /// e^{-beta H} + beta e^{-beta mu} (H - mu) with mu = E_uniform[H] known exactly.
  EstimateWithError control_variate;
  double kurtosis = 0.0;
  bool heavy_tail = false;
};

ZEstimateReport estimate_z_vortex_report(const EnsembleParams& params, std::size_t n_samples, Rng& rng);

/// E_uniform[e^{-beta H_W}] with H_W the Yukawa-only pair energy, plain and
/// with H_W itself (mean zero) as control variate.
ZEstimateReport estimate_z_yukawa(const EnsembleParams& params, const TorusYukawaTable& kernel,
                                  std::size_t n_samples, Rng& rng);

EstimateWithError iid_mean(const std::vector<double>& xs);
EstimateWithError batch_means(const std::vector<double>& xs, std::size_t n_batches = 50);

/// Integrated autocorrelation time with Sokal's adaptive window (c = 5).
double autocorrelation_time(const std::vector<double>& series);

struct KsResult {
  double distance = 0.0;
  double p_value = 1.0;
};

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

struct CltRow {
  std::string name;
  double empirical = 0.0;
  double target = 0.0;
  double std_error = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct CltReport {
  std::string test;
  double beta = 0.0;
  double gamma = 1.0;
  int n = 0;
  std::string domain;
  std::vector<CltRow> rows;

  bool all_pass() const;
  std::string to_json(int indent = 2) const;
};

/// Per-mode E|omega_k|^2 and E[omega_k] over Gibbs samples versus the Gaussian
/// targets; error bars by batch means; pass when within tol_se standard errors.
CltReport mode_covariance_test(const std::vector<VortexConfig>& samples, const EnsembleParams& params,
                               int cutoff, double tol_se = 4.0);

struct LawTest {
  KsResult ks;
  double tolerance = 0.05;
  bool pass = false;
};

/// KS comparison of H samples (shifted by `shift`) against :E: samples.
LawTest hamiltonian_law_test(const std::vector<double>& vortex_h, const std::vector<double>& gaussian_e,
                             double shift = 0.0, double tolerance = 0.05);

struct LaplaceRow {
  double alpha = 0.0;
  EstimateWithError lhs;
  EstimateWithError rhs;
  bool pass = false;
  bool refused = false;
};

struct LaplaceOptions {
  std::size_t gibbs_samples = 20000;
  std::size_t burn_in = 2000;
  std::size_t thinning = 2;
  std::size_t z_samples = 200000;
  double tol_se = 3.0;
};

/// E_beta[e^{alpha H}] from a Gibbs chain versus Z_{beta-alpha} / Z_beta from
/// independent uniform estimates.
std::vector<LaplaceRow> laplace_transform_test(const EnsembleParams& params, const std::vector<double>& alphas,
                                               const LaplaceOptions& options, Rng& rng);

/// Real trigonometric polynomial f = 2 Re sum_k c_k e^{2 pi i k.x}, stored on
/// the half lattice so that f has zero mean.
class TrigPolynomial {
 public:
  void add(int k1, int k2, std::complex<double> c);
  double operator()(double x, double y) const;
  /// Squared L2 norm by Parseval.
  double l2_squared() const;
  int degree() const;
  const std::vector<std::pair<std::pair<int, int>, std::complex<double>>>& terms() const { return terms_; }

 private:
  std::vector<std::pair<std::pair<int, int>, std::complex<double>>> terms_;
};

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// |mean(e^{i f}) - e^{-|f|_2^2/2}| <= |f|_3^3/6 + |f|_2^4/8.
InequalityCheck exp_integral_inequality_check(const TrigPolynomial& f, int grid = 0);

}  // namespace vortexclt
