#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "vortexclt/geometry.hpp"

namespace vortexclt {

/// Periodic solution of (-Delta)^s B = delta - 1 on the unit torus, evaluated
/// by heat-kernel Ewald summation (real-space images plus Fourier modes).
class PolyharmonicEwald {
 public:
  explicit PolyharmonicEwald(int order, double split = 0.02, int image_radius = 2,
                             int fourier_cutoff = 8);

  int order() const { return order_; }
  /// B_s at displacement d. Order 1 is singular at d = 0.
  double value(Vec2 d) const;
  Vec2 gradient(Vec2 d) const;

 private:
  int order_;
  double eps_;
  int images_;
  int cutoff_;
  double real_prefactor_;
  double mean_shift_;
  std::vector<double> coeff_;
};

/// Cosine series sum_{k1,k2 = 0..K} c[k1][k2] cos(2 pi k1 x) cos(2 pi k2 y) stored
/// row-major in (K+1)^2 entries.
double cosine_series(const std::vector<double>& coeff, int cutoff, Vec2 d);
Vec2 cosine_series_gradient(const std::vector<double>& coeff, int cutoff, Vec2 d);

/// Yukawa/Coulomb splitting G = V_m + W_m of the zero-average torus Green function.
class SplitPotential {
 public:
  /// Picks image radius and Fourier cutoff so the truncation bound is below 1e-10.
  explicit SplitPotential(double mass = 6.0, int order = 2);
  SplitPotential(double mass, int image_radius, int fourier_cutoff, int order = 2);

  double mass() const { return m_; }
  int image_radius() const { return images_; }
  int fourier_cutoff() const { return cutoff_; }
  int order() const { return order_; }
  /// Combined bound on the discarded Bessel images and Fourier remainder.
  double truncation_bound() const { return image_tail_ + fourier_tail_; }
  double image_tail() const { return image_tail_; }
  double fourier_tail() const { return fourier_tail_; }
  /// r_m = 2 log(m) / m.
  double yukawa_radius() const;

  /// W_m at displacement d (any representative).
  double yukawa(Vec2 d) const;
  /// W_m lattice-image sum without the subtracted 1/m^2.
  double yukawa_images(Vec2 d) const;
  /// V_m at displacement d.
  double smooth(Vec2 d) const;
  double green(Vec2 d) const { return yukawa(d) + smooth(d); }
  /// G(d) + log|d| / (2 pi), finite at d = 0. d must lie in [-0.5, 0.5]^2.
  double regular(Vec2 d) const;

  Vec2 yukawa_gradient(Vec2 d) const;
  Vec2 smooth_gradient(Vec2 d) const;
  Vec2 green_gradient(Vec2 d) const;

  static double image_tail_bound(double mass, int image_radius);
  static double fourier_tail_bound(double mass, int fourier_cutoff, int order);

 private:
  void build();

  double m_;
  int images_;
  int cutoff_;
  int order_;
  double image_tail_ = 0.0;
  double fourier_tail_ = 0.0;
  double image_reach2_ = 0.0;
  std::vector<PolyharmonicEwald> poly_;
  std::vector<double> remainder_;
};

/// Shared default split (m = 6).
const SplitPotential& default_split();

/// Smooth function on the folded cell [0, 0.5]^2, tabulated with ghost nodes
/// and interpolated by tensor-product cubic Lagrange polynomials.
class FoldedCellTable {
 public:
  FoldedCellTable(int intervals, const std::function<double(double, double)>& f);
  /// u, v in [0, 0.5].
  double operator()(double u, double v) const;
  int intervals() const { return n_; }

 private:
  int n_;
  double h_;
  int stride_;
  std::vector<double> values_;
};

/// Fast torus Green function for Monte Carlo: -(1/2 pi) log|d| plus a tabulated
/// regular part built from the split evaluator.
class TorusGreenTable {
 public:
  explicit TorusGreenTable(const SplitPotential& split, int intervals = 256);
  static const TorusGreenTable& instance();

  double green(Vec2 d) const;
  double regular(Vec2 d) const;

 private:
  FoldedCellTable table_;
};

/// Fast W_m: central Bessel image evaluated exactly, other images tabulated.
class TorusYukawaTable {
 public:
  explicit TorusYukawaTable(double mass, int intervals = 256);
  double mass() const { return m_; }
  double value(Vec2 d) const;

 private:
  double m_;
  FoldedCellTable outer_;
};

double torus_yukawa(const DomainPoint& x, const DomainPoint& y,
                    const SplitPotential& split = default_split());
double torus_green(const DomainPoint& x, const DomainPoint& y,
                   const SplitPotential& split = default_split());

/// (log 2 - 1/2) / (2 pi).
double sphere_green_constant();
double sphere_green(const DomainPoint& x, const DomainPoint& y);
/// Legendre partial sum (1/4 pi) sum_{l=1}^{L} (2l+1) P_l(cos theta) / (l(l+1)).
double sphere_green_spectral_check(double theta, int degree);

double disk_g(const DomainPoint& x, const DomainPoint& y);
double disk_green(const DomainPoint& x, const DomainPoint& y);
/// Integral of g(y,y) over the disk under normalized Lebesgue measure, by
/// Gauss-Legendre quadrature with the given number of radial nodes.
double disk_gbar(int radial_nodes = 1000);

/// grad-perp of G in the first argument: (d2 G, -d1 G) on torus and disk,
/// x cross grad G on the sphere.
Vec3 grad_perp_green(const DomainPoint& x, const DomainPoint& y,
                     const SplitPotential& split = default_split());

/// Kernel dispatch used by Hamiltonians and samplers.
class InteractionKernel {
 public:
  explicit InteractionKernel(Domain d);
  Domain domain() const { return domain_; }
  /// G(a, b); throws SingularityError for coincident points.
  double pair(const Vec3& a, const Vec3& b) const;
  /// g(a, a) on the disk, 0 elsewhere.
  double self(const Vec3& a) const;

 private:
  Domain domain_;
  const TorusGreenTable* table_ = nullptr;
};

}  // namespace vortexclt
