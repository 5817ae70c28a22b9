#pragma once

// Independent reference computations. Nothing here calls into the library
// except where a test explicitly composes the two.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

/// K0(r) = int_0^inf exp(-r cosh t) dt.
inline double k0(double r) {
  boost::math::quadrature::exp_sinh<double> q;
  return q.integrate([r](double t) {
    const double c = std::cosh(t);
    return std::isfinite(c) ? std::exp(-r * c) : 0.0;
  }, 1e-15);
}

/// K1(r) = int_0^inf exp(-r cosh t) cosh t dt.
inline double k1(double r) {
  boost::math::quadrature::exp_sinh<double> q;
  return q.integrate([r](double t) {
    const double c = std::cosh(t);
    return r * c > 745.0 ? 0.0 : std::exp(-r * c) * c;
  }, 1e-15);
}

/// Ascending series for K0 in long double, accurate for small r.
inline double k0_series(double r) {
  const long double x = r;
  const long double q = x * x / 4.0L;
  long double term = 1.0L;
  long double harmonic = 0.0L;
  long double lead = 0.0L;
  long double tail = 0.0L;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) {
      term *= q / (static_cast<long double>(k) * k);
      harmonic += 1.0L / k;
    }
    lead += term;
    tail += term * harmonic;
  }
  const long double euler = 0.577215664901532860606512090082402431L;
  return static_cast<double>(-(std::log(x / 2.0L) + euler) * lead + tail);
}

/// J_n(x) = (1/pi) int_0^pi cos(n t - x sin t) dt by the trapezoid rule on
/// the periodic extension, which converges geometrically.
inline double jn_integral(int n, double x) {
  const int m = 4096 + 4 * static_cast<int>(std::abs(x));
  long double s = 0.0L;
  for (int j = 0; j < m; ++j) {
    const long double t = 2.0L * std::numbers::pi_v<long double> * j / m;
    s += std::cos(n * t - x * std::sin(t));
  }
  return static_cast<double>(s / m);
}

/// Ascending series in long double; reliable for x <= 12.
inline double jn_series(int n, double x) {
  const long double h = x / 2.0L;
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term *= h / i;
  long double s = term;
  for (int k = 1; k < 200; ++k) {
    term *= -h * h / (static_cast<long double>(k) * (k + n));
    s += term;
    if (std::abs(term) < 1e-30L) break;
  }
  return static_cast<double>(s);
}

/// Bisection on the integral oracle after a fine sign-change scan.
inline std::vector<double> j_zeros(int n, int count) {
  std::vector<double> zeros;
  double a = std::max(0.5, static_cast<double>(n));
  double fa = jn_integral(n, a);
  const double step = 0.05;
  while (static_cast<int>(zeros.size()) < count) {
    const double b = a + step;
    const double fb = jn_integral(n, b);
    if (fa * fb < 0.0) {
      double lo = a;
      double hi = b;
      double flo = fa;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = jn_integral(n, mid);
        if (fm * flo <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      zeros.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  return zeros;
}

/// Direct double loop over 0 < |k|_inf <= cutoff of |k|^{-s}.
inline double lattice_sum_brute(double s, int cutoff) {
  long double total = 0.0L;
  for (int a = 1; a <= cutoff; ++a) {
    // Axis points and the open quadrant, each counted with their symmetry weight.
    total += 4.0L * std::pow(static_cast<long double>(a) * a, -s / 2.0L);
    for (int b = 1; b <= cutoff; ++b) {
      total += 4.0L * std::pow(static_cast<long double>(a) * a + static_cast<long double>(b) * b, -s / 2.0L);
    }
  }
  return static_cast<double>(total);
}

/// Zero-average torus Green function by the Fourier series
/// sum_{0<|k|_inf<=K} cos(2 pi k.d) / (4 pi^2 |k|^2).
inline double torus_green_fourier(double dx, double dy, int cutoff) {
  std::vector<double> cx(cutoff + 1), cy(cutoff + 1);
  for (int k = 0; k <= cutoff; ++k) {
    cx[k] = std::cos(2.0 * kPi * k * dx);
    cy[k] = std::cos(2.0 * kPi * k * dy);
  }
  // Axis modes, then the four sign combinations of each off-axis (a, b).
  long double total = 0.0L;
  for (int a = 1; a <= cutoff; ++a) {
    total += 2.0L * cx[a] / (static_cast<double>(a) * a);
    total += 2.0L * cy[a] / (static_cast<double>(a) * a);
    long double row = 0.0L;
    for (int b = 1; b <= cutoff; ++b) row += cy[b] / (static_cast<double>(a) * a + static_cast<double>(b) * b);
    total += 4.0L * cx[a] * row;
  }
  return static_cast<double>(total / (4.0L * kPi * kPi));
}

/// Poisson integral of boundary data f(theta) on the unit circle at y.
inline double poisson_extension(const std::function<double(double)>& f, double yx, double yy, int nodes = 20000) {
  long double s = 0.0L;
  const double r2 = yx * yx + yy * yy;
  for (int j = 0; j < nodes; ++j) {
    const double t = 2.0 * kPi * j / nodes;
    const double ex = std::cos(t) - yx;
    const double ey = std::sin(t) - yy;
    s += (1.0 - r2) / (ex * ex + ey * ey) * f(t);
  }
  return static_cast<double>(s / nodes);
}

/// Legendre partial sum of the sphere Green function without the 1/(4 pi) factor.
inline double legendre_green_series(double theta, int degree, bool cesaro = false) {
  const double x = std::cos(theta);
  double p0 = 1.0;
  double p1 = x;
  long double s = 0.0L;
  long double cesaro_sum = 0.0L;
  for (int l = 1; l <= degree; ++l) {
    s += (2.0 * l + 1.0) * p1 / (static_cast<double>(l) * (l + 1));
    cesaro_sum += s;
    const double p2 = ((2.0 * l + 1.0) * x * p1 - l * p0) / (l + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return static_cast<double>(cesaro ? cesaro_sum / degree : s);
}

/// Exact E_uniform[e^{-beta :E:}] factor for one conjugate pair: e^s / (1 + s).
inline double wick_pair_factor(double s) { return std::exp(s) / (1.0 + s); }

}  // namespace oracle
