#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "vortexclt/geometry.hpp"
#include "vortexclt/random.hpp"

namespace vortexclt {

/// Truncated eigen-coefficients of a random field.
/// Torus: complex table over |k|_inf <= K with omega_{-k} = conj(omega_k) and omega_0 = 0.
/// Sphere: real coefficients a_{lm} for 1 <= l <= L, -l <= m <= l.
class SpectralField {
 public:
  static SpectralField torus(int cutoff);
  static SpectralField sphere(int degree);

  Domain domain() const { return domain_; }
  int cutoff() const { return cutoff_; }

  std::complex<double> torus_coeff(int k1, int k2) const;
  /// Sets omega_k and omega_{-k} = conj(value). k must be nonzero.
  void set_torus_coeff(int k1, int k2, std::complex<double> value);

  double sphere_coeff(int l, int m) const;
  void set_sphere_coeff(int l, int m, double value);

  /// 4 pi^2 |k|^2.
  static double torus_eigenvalue(int k1, int k2);
  /// l(l+1), eigenvalue of the Laplace-Beltrami operator.
  static double sphere_eigenvalue(int l);
  /// 4 pi l(l+1): inverse eigenvalue of G acting on L^2 of the normalized surface measure.
  static double sphere_green_eigenvalue(int l);

 private:
  SpectralField(Domain d, int cutoff);
  std::size_t torus_index(int k1, int k2) const;

  Domain domain_;
  int cutoff_;
  std::vector<std::complex<double>> torus_;
  std::vector<double> sphere_;
};

/// Visits each conjugate pair {k, -k} with 0 < |k|_inf <= K once: k1 > 0, or k1 = 0 and k2 > 0.
template <class F>
void for_each_half_mode(int cutoff, F&& f) {
  for (int k1 = 0; k1 <= cutoff; ++k1) {
    for (int k2 = (k1 == 0 ? 1 : -cutoff); k2 <= cutoff; ++k2) f(k1, k2);
  }
}

struct GaussianParams {
  double beta = 0.0;
  double gamma = 1.0;
  Domain domain = Domain::Torus2;
  int cutoff = 16;

  GaussianParams() = default;
  GaussianParams(double beta, double gamma, Domain domain, int cutoff);
};

/// lambda / (beta + gamma lambda).
double mode_variance(double beta, double gamma, double lambda);

SpectralField sample_field(const GaussianParams& params, Rng& rng);

/// exp(-(1/2) sum_k v_k |f_k|^2) over all modes of f within the cutoff.
double characteristic_functional(const GaussianParams& params, const SpectralField& f);

/// <omega, f> = sum over all modes of omega_k conj(f_k) (torus) or a_lm b_lm (sphere).
double pairing(const SpectralField& omega, const SpectralField& f);

/// :E: = (1/2) sum_{0<|k|_inf<=K} (|omega_k|^2 - 1/gamma) / lambda_k (torus).
double renormalized_energy(const SpectralField& field, double gamma);

struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Product over conjugate pairs of [gamma lambda/(beta + gamma lambda)] e^{beta/(gamma lambda)}.
TruncatedValue gaussian_partition_function(double beta, double gamma, int cutoff);

/// Dirichlet eigenmode of the unit disk, orthonormal for normalized Lebesgue measure.
struct DiskMode {
  int n = 0;
  int k = 1;
  /// 0: radial (n = 0), 1: cos(n theta), 2: sin(n theta).
  int parity = 0;
  double zero = 0.0;
  double norm = 0.0;
  /// Integral of the mode against the normalized measure (nonzero only for n = 0).
  double mean = 0.0;
  /// Eigenvalue of -Delta with respect to the normalized measure: pi j^2.
  double eigenvalue = 0.0;
};

class DiskBasis {
 public:
  /// Keeps modes with Bessel zero j_{n,k} <= pi * cutoff.
  explicit DiskBasis(int cutoff);
  int cutoff() const { return cutoff_; }
  const std::vector<DiskMode>& modes() const { return modes_; }
  std::size_t size() const { return modes_.size(); }
  double evaluate(std::size_t mode, const DomainPoint& p) const;
  /// Expansion coefficients of f by polar Gauss quadrature.
  std::vector<double> project(const std::function<double(double, double)>& f, int radial_nodes = 200,
                              int angular_nodes = 256) const;

 private:
  int cutoff_;
  std::vector<DiskMode> modes_;
};

/// <M f, (gamma - beta Delta)^{-1} M g> as the covariance of the zero-average
/// conditioned field, computed in the eigenbasis.
TruncatedValue disk_covariance(const DiskBasis& basis, const std::vector<double>& f,
                               const std::vector<double>& g, double beta, double gamma);

/// Same covariance for functions given pointwise. Modes inside the cutoff use
/// their exact variances; the remainder of each function, measured by
/// quadrature, is treated as white noise of variance 1/gamma. Constant
/// functions give exactly zero.
TruncatedValue disk_covariance(const DiskBasis& basis, const std::function<double(double, double)>& f,
                               const std::function<double(double, double)>& g, double beta, double gamma);

/// E[e^{-beta :E:}] for the zero-average white noise of the disk basis.
TruncatedValue disk_gaussian_partition_function(const DiskBasis& basis, double beta, double gamma);

}  // namespace vortexclt
