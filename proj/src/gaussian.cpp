#include "vortexclt/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vortexclt/errors.hpp"
#include "vortexclt/specfun.hpp"

namespace vortexclt {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

SpectralField::SpectralField(Domain d, int cutoff) : domain_(d), cutoff_(cutoff) {
  if (cutoff < 0) throw std::invalid_argument("spectral cutoff must be nonnegative");
  if (d == Domain::Torus2) {
    const std::size_t w = 2 * static_cast<std::size_t>(cutoff) + 1;
    torus_.assign(w * w, {0.0, 0.0});
  } else if (d == Domain::Sphere2) {
    const std::size_t n = static_cast<std::size_t>(cutoff + 1) * (cutoff + 1);
    sphere_.assign(n - 1, 0.0);
  } else {
    throw UnsupportedDomain("spectral fields exist for torus and sphere only");
  }
}

SpectralField SpectralField::torus(int cutoff) { return SpectralField(Domain::Torus2, cutoff); }
SpectralField SpectralField::sphere(int degree) { return SpectralField(Domain::Sphere2, degree); }

std::size_t SpectralField::torus_index(int k1, int k2) const {
  if (domain_ != Domain::Torus2) throw UnsupportedDomain("not a torus field");
  if (std::abs(k1) > cutoff_ || std::abs(k2) > cutoff_) throw std::out_of_range("mode beyond cutoff");
  const std::size_t w = 2 * static_cast<std::size_t>(cutoff_) + 1;
  return static_cast<std::size_t>(k1 + cutoff_) * w + static_cast<std::size_t>(k2 + cutoff_);
}

std::complex<double> SpectralField::torus_coeff(int k1, int k2) const { return torus_[torus_index(k1, k2)]; }

void SpectralField::set_torus_coeff(int k1, int k2, std::complex<double> value) {
  if (k1 == 0 && k2 == 0) throw std::invalid_argument("the zero mode is absent");
  torus_[torus_index(k1, k2)] = value;
  torus_[torus_index(-k1, -k2)] = std::conj(value);
}

double SpectralField::sphere_coeff(int l, int m) const {
  if (domain_ != Domain::Sphere2) throw UnsupportedDomain("not a sphere field");
  if (l < 1 || l > cutoff_ || std::abs(m) > l) throw std::out_of_range("mode beyond cutoff");
  return sphere_[static_cast<std::size_t>(l) * l + (m + l) - 1];
}

void SpectralField::set_sphere_coeff(int l, int m, double value) {
  if (domain_ != Domain::Sphere2) throw UnsupportedDomain("not a sphere field");
  if (l < 1 || l > cutoff_ || std::abs(m) > l) throw std::out_of_range("mode beyond cutoff");
  sphere_[static_cast<std::size_t>(l) * l + (m + l) - 1] = value;
}

double SpectralField::torus_eigenvalue(int k1, int k2) {
  return 4.0 * kPi * kPi * (static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
}

double SpectralField::sphere_eigenvalue(int l) { return static_cast<double>(l) * (l + 1); }

double SpectralField::sphere_green_eigenvalue(int l) { return 4.0 * kPi * sphere_eigenvalue(l); }

GaussianParams::GaussianParams(double beta_, double gamma_, Domain domain_, int cutoff_)
    : beta(beta_), gamma(gamma_), domain(domain_), cutoff(cutoff_) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
}

double mode_variance(double beta, double gamma, double lambda) { return lambda / (beta + gamma * lambda); }

namespace {

void check_params(const GaussianParams& p) {
  if (!(p.gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (p.cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  if (p.domain == Domain::UnitDisk) throw UnsupportedDomain("disk Gaussian has a covariance oracle only");
  const double lambda_min =
      p.domain == Domain::Torus2 ? SpectralField::torus_eigenvalue(1, 0) : SpectralField::sphere_green_eigenvalue(1);
  if (!(p.beta + p.gamma * lambda_min > 0.0)) throw DomainError("Gaussian measure does not exist for this beta");
}

}  // namespace

SpectralField sample_field(const GaussianParams& params, Rng& rng) {
  check_params(params);
  std::normal_distribution<double> normal(0.0, 1.0);
  if (params.domain == Domain::Torus2) {
    SpectralField f = SpectralField::torus(params.cutoff);
    for_each_half_mode(params.cutoff, [&](int k1, int k2) {
      const double v = mode_variance(params.beta, params.gamma, SpectralField::torus_eigenvalue(k1, k2));
      const double s = std::sqrt(0.5 * v);
      const double re = s * normal(rng);
      const double im = s * normal(rng);
      f.set_torus_coeff(k1, k2, {re, im});
    });
    return f;
  }
  SpectralField f = SpectralField::sphere(params.cutoff);
  for (int l = 1; l <= params.cutoff; ++l) {
    const double s =
        std::sqrt(mode_variance(params.beta, params.gamma, SpectralField::sphere_green_eigenvalue(l)));
    for (int m = -l; m <= l; ++m) f.set_sphere_coeff(l, m, s * normal(rng));
  }
  return f;
}

double characteristic_functional(const GaussianParams& params, const SpectralField& f) {
  check_params(params);
  if (f.domain() != params.domain) throw UnsupportedDomain("test function lives on another domain");
  if (f.cutoff() > params.cutoff) throw std::invalid_argument("test function exceeds the cutoff");
  double exponent = 0.0;
  if (f.domain() == Domain::Torus2) {
    for_each_half_mode(f.cutoff(), [&](int k1, int k2) {
      const double v = mode_variance(params.beta, params.gamma, SpectralField::torus_eigenvalue(k1, k2));
      exponent += 2.0 * v * std::norm(f.torus_coeff(k1, k2));
    });
  } else {
    for (int l = 1; l <= f.cutoff(); ++l) {
      const double v = mode_variance(params.beta, params.gamma, SpectralField::sphere_green_eigenvalue(l));
      for (int m = -l; m <= l; ++m) exponent += v * f.sphere_coeff(l, m) * f.sphere_coeff(l, m);
    }
  }
  return std::exp(-0.5 * exponent);
}

double pairing(const SpectralField& omega, const SpectralField& f) {
  if (omega.domain() != f.domain()) throw UnsupportedDomain("pairing across domains");
  const int cutoff = std::min(omega.cutoff(), f.cutoff());
  double total = 0.0;
  if (omega.domain() == Domain::Torus2) {
    for_each_half_mode(cutoff, [&](int k1, int k2) {
      total += 2.0 * std::real(omega.torus_coeff(k1, k2) * std::conj(f.torus_coeff(k1, k2)));
    });
  } else {
    for (int l = 1; l <= cutoff; ++l) {
      for (int m = -l; m <= l; ++m) total += omega.sphere_coeff(l, m) * f.sphere_coeff(l, m);
    }
  }
  return total;
}

double renormalized_energy(const SpectralField& field, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  const double sub = 1.0 / gamma;
  double total = 0.0;
  if (field.domain() == Domain::Torus2) {
    for_each_half_mode(field.cutoff(), [&](int k1, int k2) {
      total += (std::norm(field.torus_coeff(k1, k2)) - sub) / SpectralField::torus_eigenvalue(k1, k2);
    });
    return total;
  }
  for (int l = 1; l <= field.cutoff(); ++l) {
    double row = 0.0;
    for (int m = -l; m <= l; ++m) row += field.sphere_coeff(l, m) * field.sphere_coeff(l, m) - sub;
    total += row / SpectralField::sphere_green_eigenvalue(l);
  }
  return 0.5 * total;
}

TruncatedValue gaussian_partition_function(double beta, double gamma, int cutoff) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  const double lambda_min = SpectralField::torus_eigenvalue(1, 0);
  if (!(beta > -gamma * lambda_min)) {
    throw DomainError("partition function diverges for beta <= -gamma * lambda_min");
  }
  if (beta == 0.0) return {1.0, 0.0};
  double log_z = 0.0;
  for_each_half_mode(cutoff, [&](int k1, int k2) {
    const double s = beta / (gamma * SpectralField::torus_eigenvalue(k1, k2));
    log_z += s - std::log1p(s);
  });
  // s - log(1+s) <= s^2 / (2 (1 + min(s, 0))) on the excluded pairs.
  const double s_edge = beta / (gamma * SpectralField::torus_eigenvalue(cutoff + 1, 0));
  const double damp = 1.0 / (1.0 + std::min(s_edge, 0.0));
  const double inv_lambda2 = lattice_tail_upper(4.0, cutoff) / std::pow(2.0 * kPi, 4);
  const double tail_log = 0.25 * damp * beta * beta / (gamma * gamma) * inv_lambda2;
  const double z = std::exp(log_z);
  return {z, z * std::expm1(tail_log)};
}

DiskBasis::DiskBasis(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 1) throw std::invalid_argument("disk cutoff must be >= 1");
  const double j_max = kPi * cutoff;
  for (int n = 0;; ++n) {
    const int guess = static_cast<int>(j_max / kPi) + 2;
    const std::vector<double> zeros = bessel_j_zeros(n, guess);
    if (zeros.front() > j_max) break;
    int k = 0;
    for (double j : zeros) {
      ++k;
      if (j > j_max) break;
      const double norm = 1.0 / std::abs(bessel_jn(n + 1, j));
      const double eig = kPi * j * j;
      if (n == 0) {
        const double mean = 2.0 * std::copysign(1.0, bessel_jn(1, j)) / j;
        modes_.push_back({0, k, 0, j, norm, mean, eig});
      } else {
        modes_.push_back({n, k, 1, j, norm, 0.0, eig});
        modes_.push_back({n, k, 2, j, norm, 0.0, eig});
      }
    }
  }
}

double DiskBasis::evaluate(std::size_t index, const DomainPoint& p) const {
  if (p.domain() != Domain::UnitDisk) throw UnsupportedDomain("disk basis needs a disk point");
  const DiskMode& m = modes_.at(index);
  const double r = std::hypot(p[0], p[1]);
  const double radial = m.norm * bessel_jn(m.n, m.zero * r);
  if (m.parity == 0) return radial;
  const double theta = std::atan2(p[1], p[0]);
  const double ang = m.parity == 1 ? std::cos(m.n * theta) : std::sin(m.n * theta);
  return std::numbers::sqrt2 * radial * ang;
}

std::vector<double> DiskBasis::project(const std::function<double(double, double)>& f, int radial_nodes,
                                       int angular_nodes) const {
  const GaussLegendre gl = gauss_legendre(radial_nodes);
  std::vector<double> coeffs(modes_.size(), 0.0);
  std::vector<double> radial(modes_.size());
  std::vector<double> fc(angular_nodes);
  const double dtheta = 2.0 * kPi / angular_nodes;
  for (int i = 0; i < radial_nodes; ++i) {
    const double r = 0.5 * (gl.nodes[i] + 1.0);
    const double w = 0.5 * gl.weights[i] * r * dtheta / kPi;
    for (std::size_t q = 0; q < modes_.size(); ++q) {
      radial[q] = modes_[q].norm * bessel_jn(modes_[q].n, modes_[q].zero * r);
    }
    for (int a = 0; a < angular_nodes; ++a) {
      const double theta = a * dtheta;
      fc[a] = f(r * std::cos(theta), r * std::sin(theta));
    }
    for (std::size_t q = 0; q < modes_.size(); ++q) {
      const DiskMode& m = modes_[q];
      double acc = 0.0;
      for (int a = 0; a < angular_nodes; ++a) {
        const double theta = a * dtheta;
        const double ang = m.parity == 0 ? 1.0
                           : m.parity == 1 ? std::numbers::sqrt2 * std::cos(m.n * theta)
                                           : std::numbers::sqrt2 * std::sin(m.n * theta);
        acc += fc[a] * ang;
      }
      coeffs[q] += w * radial[q] * acc;
    }
  }
  return coeffs;
}

namespace {

struct DiskSums {
  double mean_sq = 0.0;  // sum of squared mode means kept by the truncation
  double a_tail = 0.0;   // 1/eigenvalue at the truncation edge
};

DiskSums disk_sums(const DiskBasis& basis) {
  DiskSums s;
  for (const DiskMode& m : basis.modes()) s.mean_sq += m.mean * m.mean;
  const double j_edge = kPi * basis.cutoff();
  s.a_tail = 1.0 / (kPi * j_edge * j_edge);
  return s;
}

}  // namespace

TruncatedValue disk_covariance(const DiskBasis& basis, const std::vector<double>& f, const std::vector<double>& g,
                               double beta, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be >= 0");
  if (f.size() != basis.size() || g.size() != basis.size()) {
    throw std::invalid_argument("coefficient vectors must match the basis size");
  }
  double fg = 0.0;
  double fe = 0.0;
  double ge = 0.0;
  double ee = 0.0;
  for (std::size_t q = 0; q < basis.size(); ++q) {
    const DiskMode& m = basis.modes()[q];
    const double d = gamma + beta / m.eigenvalue;
    fg += f[q] * g[q] / d;
    fe += f[q] * m.mean / d;
    ge += g[q] * m.mean / d;
    ee += m.mean * m.mean / d;
  }
  // Modes beyond the cutoff carry the remaining mass 1 - sum(mean^2) of the constant.
  const DiskSums sums = disk_sums(basis);
  const double rest = std::max(0.0, 1.0 - sums.mean_sq);
  const double s_all = ee + rest / gamma;
  const double ds = rest * beta * sums.a_tail / (gamma * gamma);
  const double value = fg - fe * ge / s_all;
  return {value, std::abs(fe * ge) / (s_all * (s_all - ds)) * ds};
}

namespace {

struct DiskMoments {
  double fg = 0.0;
  double ff = 0.0;
  double gg = 0.0;
  double f_mean = 0.0;
  double g_mean = 0.0;
};

DiskMoments disk_moments(const std::function<double(double, double)>& f,
                         const std::function<double(double, double)>& g, int radial_nodes, int angular_nodes) {
  const GaussLegendre gl = gauss_legendre(radial_nodes);
  const double dtheta = 2.0 * kPi / angular_nodes;
  DiskMoments m;
  for (int i = 0; i < radial_nodes; ++i) {
    const double r = 0.5 * (gl.nodes[i] + 1.0);
    const double w = 0.5 * gl.weights[i] * r * dtheta / kPi;
    for (int a = 0; a < angular_nodes; ++a) {
      const double x = r * std::cos(a * dtheta);
      const double y = r * std::sin(a * dtheta);
      const double fv = f(x, y);
      const double gv = g(x, y);
      m.fg += w * fv * gv;
      m.ff += w * fv * fv;
      m.gg += w * gv * gv;
      m.f_mean += w * fv;
      m.g_mean += w * gv;
    }
  }
  return m;
}

}  // namespace

TruncatedValue disk_covariance(const DiskBasis& basis, const std::function<double(double, double)>& f,
                               const std::function<double(double, double)>& g, double beta, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be >= 0");
  constexpr int kRadial = 200;
  constexpr int kAngular = 256;
  const std::vector<double> cf = basis.project(f, kRadial, kAngular);
  const std::vector<double> cg = basis.project(g, kRadial, kAngular);
  const DiskMoments mo = disk_moments(f, g, kRadial, kAngular);
  // C(u, v) = sum_in u_q v_q / d_q + (<u, v> - sum_in u_q v_q) / gamma, the
  // unconditioned covariance, for the pairs (f,g), (f,1), (1,g), (1,1).
  double fg = 0.0, fe = 0.0, ge = 0.0, ee = 0.0;
  double fg0 = 0.0, fe0 = 0.0, ge0 = 0.0, ee0 = 0.0, ff0 = 0.0, gg0 = 0.0;
  for (std::size_t q = 0; q < basis.size(); ++q) {
    const DiskMode& m = basis.modes()[q];
    const double d = gamma + beta / m.eigenvalue;
    fg += cf[q] * cg[q] / d;
    fe += cf[q] * m.mean / d;
    ge += cg[q] * m.mean / d;
    ee += m.mean * m.mean / d;
    fg0 += cf[q] * cg[q];
    fe0 += cf[q] * m.mean;
    ge0 += cg[q] * m.mean;
    ee0 += m.mean * m.mean;
    ff0 += cf[q] * cf[q];
    gg0 += cg[q] * cg[q];
  }
  const double c_fg = fg + (mo.fg - fg0) / gamma;
  const double c_f1 = fe + (mo.f_mean - fe0) / gamma;
  const double c_1g = ge + (mo.g_mean - ge0) / gamma;
  const double c_11 = ee + (1.0 - ee0) / gamma;
  const double value = c_fg - c_f1 * c_1g / c_11;
  // Outside the cutoff 1/d differs from 1/gamma by at most beta a_edge / gamma^2.
  const double eps = beta * disk_sums(basis).a_tail / (gamma * gamma);
  const double tf = std::sqrt(std::max(0.0, mo.ff - ff0));
  const double tg = std::sqrt(std::max(0.0, mo.gg - gg0));
  const double t1 = std::sqrt(std::max(0.0, 1.0 - ee0));
  const double e_fg = eps * tf * tg;
  const double e_f1 = eps * tf * t1;
  const double e_1g = eps * t1 * tg;
  const double e_11 = eps * t1 * t1;
  const double bound = e_fg + (std::abs(c_f1) * e_1g + std::abs(c_1g) * e_f1) / c_11 +
                       std::abs(c_f1 * c_1g) / (c_11 * (c_11 - e_11)) * e_11;
  return {value, bound};
}

TruncatedValue disk_gaussian_partition_function(const DiskBasis& basis, double beta, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be >= 0");
  if (beta == 0.0) return {1.0, 0.0};
  double log_z = 0.0;
  double constraint = 0.0;
  for (const DiskMode& m : basis.modes()) {
    const double a = 1.0 / m.eigenvalue;
    const double s = beta * a / gamma;
    log_z += 0.5 * (s - std::log1p(s));
    constraint += beta * m.mean * m.mean * a / (gamma + beta * a);
  }
  log_z -= 0.5 * std::log1p(-constraint);
  // Weyl estimate: about dL/4 modes per unit eigenvalue j^2, so the excluded
  // sum of a^2 is ~ 1/(4 pi^2 L_c); excluded radial means add ~ 4/(3 pi^5 k_c^3).
  const double lc = std::pow(kPi * basis.cutoff(), 2);
  const double s_tail = 0.25 * beta * beta / (gamma * gamma) / (4.0 * kPi * kPi * lc);
  const double c_tail = 0.5 * beta / gamma * 4.0 / (3.0 * std::pow(kPi, 5) * std::pow(basis.cutoff(), 3)) /
                        (1.0 - constraint);
  const double z = std::exp(log_z);
  return {z, z * std::expm1(s_tail + c_tail)};
}

}  // namespace vortexclt
