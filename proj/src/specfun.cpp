#include "vortexclt/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vortexclt/errors.hpp"

namespace vortexclt {

namespace {

constexpr double kPi = std::numbers::pi;

struct SeriesTerms {
  double i0;  // sum t^k/(k!)^2
  double s0;  // sum psi(k+1) t^k/(k!)^2
  double i1;  // sum t^k/(k!(k+1)!)
  double s1;  // sum (psi(k+1)+psi(k+2)) t^k/(k!(k+1)!)
};

// Ascending series in t = x^2/4, used for 0 < x <= 2.
SeriesTerms small_series(double x) {
  const double t = 0.25 * x * x;
  double term0 = 1.0;
  double term1 = 1.0;
  double harmonic = 0.0;
  SeriesTerms s{0.0, 0.0, 0.0, 0.0};
  for (int k = 0; k < 64; ++k) {
    if (k > 0) {
      term0 *= t / (static_cast<double>(k) * k);
      term1 *= t / (static_cast<double>(k) * (k + 1));
      harmonic += 1.0 / k;
    }
    const double psi0 = -kEulerGamma + harmonic;
    const double psi1 = psi0 + 1.0 / (k + 1);
    s.i0 += term0;
    s.s0 += psi0 * term0;
    s.i1 += term1;
    s.s1 += (psi0 + psi1) * term1;
    if (k > 2 && term0 < 1e-18 * s.i0) break;
  }
  return s;
}

// Temme/Steed continued fraction for x > 2 (order 0), giving K0 and K1.
std::pair<double, double> large_cf(double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 10000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 1e-17) break;
  }
  h = a1 * h;
  const double k0 = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
  const double k1 = k0 * (x + 0.5 - h) / x;
  return {k0, k1};
}

void require_positive(double r, const char* what) {
  if (!(r > 0.0)) throw DomainError(std::string(what) + ": argument must be positive");
}

}  // namespace

std::pair<double, double> bessel_k01(double r) {
  require_positive(r, "bessel_k01");
  if (r > 2.0) return large_cf(r);
  const SeriesTerms s = small_series(r);
  const double lg = std::log(0.5 * r);
  const double k0 = -lg * s.i0 + s.s0;
  const double i1 = 0.5 * r * s.i1;
  const double k1 = 1.0 / r + lg * i1 - 0.25 * r * s.s1;
  return {k0, k1};
}

double bessel_k0(double r) { return bessel_k01(r).first; }

double bessel_k1(double r) { return bessel_k01(r).second; }

double bessel_k0_plus_log(double r) {
  if (r < 0.0) throw DomainError("bessel_k0_plus_log: negative argument");
  if (r == 0.0) return std::numbers::ln2 - kEulerGamma;
  if (r > 2.0) return large_cf(r).first + std::log(r);
  const SeriesTerms s = small_series(r);
  return -std::log(r) * (s.i0 - 1.0) + std::numbers::ln2 * s.i0 + s.s0;
}

double bessel_jn(int n, double r) {
  if (n < 0 || r < 0.0) throw DomainError("bessel_jn: requires n >= 0 and r >= 0");
  if (r == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::cyl_bessel_j(static_cast<double>(n), r);
}

std::vector<double> bessel_j_zeros(int n, int count) {
  if (n < 0 || count < 1) throw DomainError("bessel_j_zeros: requires n >= 0 and count >= 1");
  std::vector<double> zeros;
  zeros.reserve(count);
  // The first zero exceeds n; consecutive zeros are more than pi apart, so a
  // scan with step 0.25 brackets each one exactly once.
  double lo = std::max(1e-3, static_cast<double>(n));
  double flo = bessel_jn(n, lo);
  while (static_cast<int>(zeros.size()) < count) {
    const double hi = lo + 0.25;
    const double fhi = bessel_jn(n, hi);
    if (flo == 0.0) {
      zeros.push_back(lo);
    } else if ((flo < 0.0) != (fhi < 0.0)) {
      double a = lo;
      double b = hi;
      double fa = flo;
      for (int it = 0; it < 200 && b - a > 4e-16 * b; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = bessel_jn(n, mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      zeros.push_back(0.5 * (a + b));
    }
    lo = hi;
    flo = fhi;
  }
  return zeros;
}

double expint_en(int n, double z) {
  if (n < 1 || z < 0.0) throw DomainError("expint_en: requires n >= 1 and z >= 0");
  if (z == 0.0) {
    if (n == 1) throw DomainError("expint_en: E_1(0) is infinite");
    return 1.0 / (n - 1);
  }
  if (z > 700.0) return 0.0;
  double e = -std::expint(-z);
  const double ez = std::exp(-z);
  for (int k = 1; k < n; ++k) e = (ez - z * e) / k;
  return e;
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be positive");
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

LatticeSumSpec::LatticeSumSpec(double exponent, int cutoff, TailMode tail)
    : exponent_(exponent), cutoff_(cutoff), tail_(tail) {
  if (!(exponent > 2.0)) throw DomainError("lattice sum diverges for exponent <= 2");
  if (cutoff < 1) throw DomainError("lattice sum cutoff must be >= 1");
}

double LatticeSumSpec::tail_bound() const {
  return 2.0 * kPi * std::pow(static_cast<double>(cutoff_), 2.0 - exponent_) / (exponent_ - 2.0);
}

double lattice_tail_upper(double exponent, int cutoff) {
  const double r0 = cutoff + 1.0 - std::numbers::sqrt2 / 2.0;
  return 2.0 * kPi * std::pow(r0, 2.0 - exponent) / (exponent - 2.0);
}

double lattice_sum(const LatticeSumSpec& spec) {
  const double s = spec.exponent();
  const int k_max = spec.cutoff();
  const double half = -0.5 * s;
  double total = 0.0;
  for (int k1 = k_max; k1 >= 1; --k1) {
    double row = std::pow(static_cast<double>(k1), -s);
    for (int k2 = k_max; k2 >= 1; --k2) {
      row += std::pow(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2, half);
    }
    total += 4.0 * row;
  }
  if (spec.tail_mode() == TailMode::IntegralCorrected) {
    // Cells of the excluded lattice points tile the outside of the square of
    // half-width K + 1/2: integral of r^{-s} over that region.
    const double a = k_max + 0.5;
    const GaussLegendre gl = gauss_legendre(48);
    double angular = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double theta = 0.125 * kPi * (gl.nodes[i] + 1.0);
      angular += gl.weights[i] * std::pow(std::cos(theta), s - 2.0);
    }
    angular *= 0.125 * kPi;
    total += 8.0 / (s - 2.0) * angular * std::pow(a, 2.0 - s);
  }
  return total;
}

}  // namespace vortexclt
