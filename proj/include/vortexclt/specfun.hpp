#pragma once

#include <utility>
#include <vector>

namespace vortexclt {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Modified Bessel function of the second kind, order 0. Throws DomainError for r <= 0.
double bessel_k0(double r);
/// Modified Bessel function of the second kind, order 1. Throws DomainError for r <= 0.
double bessel_k1(double r);
/// Both K0(r) and K1(r) from one evaluation.
std::pair<double, double> bessel_k01(double r);
/// K0(r) + log(r), continuous at r = 0 where it equals log 2 - gamma.
double bessel_k0_plus_log(double r);

/// Bessel function of the first kind J_n(r), n >= 0, r >= 0.
double bessel_jn(int n, double r);
/// First `count` positive zeros of J_n in increasing order.
std::vector<double> bessel_j_zeros(int n, int count);

/// Generalized exponential integral E_n(z) for n >= 1, z >= 0 (E_1(0) is infinite).
double expint_en(int n, double z);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

enum class TailMode { IntegralCorrected, Raw };

/// Sum of |k|^{-exponent} over the nonzero integer lattice points.
class LatticeSumSpec {
 public:
  LatticeSumSpec(double exponent, int cutoff, TailMode tail = TailMode::IntegralCorrected);

  double exponent() const { return exponent_; }
  int cutoff() const { return cutoff_; }
  TailMode tail_mode() const { return tail_; }
  /// 2 pi cutoff^{2-s} / (s-2).
  double tail_bound() const;

 private:
  double exponent_;
  int cutoff_;
  TailMode tail_;
};

double lattice_sum(const LatticeSumSpec& spec);

/// Upper bound for sum over |k|_inf > cutoff of |k|^{-s}, s > 2.
double lattice_tail_upper(double exponent, int cutoff);

}  // namespace vortexclt
