#include <cmath>
#include <numbers>

#include "vortexclt/errors.hpp"
#include "vortexclt/greens.hpp"
#include "vortexclt/specfun.hpp"

namespace vortexclt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// cos(2 pi k t) and sin(2 pi k t) for k = 0..K by angle-addition recurrence.
void harmonics(double t, int cutoff, std::vector<double>& c, std::vector<double>& s) {
  c.resize(cutoff + 1);
  s.resize(cutoff + 1);
  const double c1 = std::cos(kTwoPi * t);
  const double s1 = std::sin(kTwoPi * t);
  c[0] = 1.0;
  s[0] = 0.0;
  for (int k = 1; k <= cutoff; ++k) {
    c[k] = c[k - 1] * c1 - s[k - 1] * s1;
    s[k] = s[k - 1] * c1 + c[k - 1] * s1;
  }
}

Vec2 wrap_half(Vec2 d) { return {d.x - std::nearbyint(d.x), d.y - std::nearbyint(d.y)}; }

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double cosine_series(const std::vector<double>& coeff, int cutoff, Vec2 d) {
  thread_local std::vector<double> cx, sx, cy, sy;
  harmonics(d.x, cutoff, cx, sx);
  harmonics(d.y, cutoff, cy, sy);
  double total = 0.0;
  for (int k1 = 0; k1 <= cutoff; ++k1) {
    const double* row = coeff.data() + static_cast<std::size_t>(k1) * (cutoff + 1);
    double acc = 0.0;
    for (int k2 = 0; k2 <= cutoff; ++k2) acc += row[k2] * cy[k2];
    total += cx[k1] * acc;
  }
  return total;
}

Vec2 cosine_series_gradient(const std::vector<double>& coeff, int cutoff, Vec2 d) {
  thread_local std::vector<double> cx, sx, cy, sy;
  harmonics(d.x, cutoff, cx, sx);
  harmonics(d.y, cutoff, cy, sy);
  double gx = 0.0;
  double gy = 0.0;
  for (int k1 = 0; k1 <= cutoff; ++k1) {
    const double* row = coeff.data() + static_cast<std::size_t>(k1) * (cutoff + 1);
    double acc_c = 0.0;
    double acc_s = 0.0;
    for (int k2 = 0; k2 <= cutoff; ++k2) {
      acc_c += row[k2] * cy[k2];
      acc_s += row[k2] * k2 * sy[k2];
    }
    gx -= k1 * sx[k1] * acc_c;
    gy -= cx[k1] * acc_s;
  }
  return {kTwoPi * gx, kTwoPi * gy};
}

PolyharmonicEwald::PolyharmonicEwald(int order, double split, int image_radius, int fourier_cutoff)
    : order_(order), eps_(split), images_(image_radius), cutoff_(fourier_cutoff) {
  if (order < 1) throw DomainError("polyharmonic order must be >= 1");
  if (!(split > 0.0) || image_radius < 1 || fourier_cutoff < 1) {
    throw DomainError("invalid Ewald parameters");
  }
  real_prefactor_ = std::pow(eps_, order_ - 1) / (4.0 * kPi * factorial(order_ - 1));
  mean_shift_ = std::pow(eps_, order_) / factorial(order_);
  const int n = cutoff_ + 1;
  coeff_.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int k1 = 0; k1 <= cutoff_; ++k1) {
    for (int k2 = 0; k2 <= cutoff_; ++k2) {
      if (k1 == 0 && k2 == 0) continue;
      const double lambda = 4.0 * kPi * kPi * (k1 * k1 + k2 * k2);
      const double le = lambda * eps_;
      double poly = 0.0;
      double term = 1.0;
      for (int j = 0; j < order_; ++j) {
        poly += term;
        term *= le / (j + 1);
      }
      const double weight = (k1 == 0 ? 1.0 : 2.0) * (k2 == 0 ? 1.0 : 2.0);
      coeff_[static_cast<std::size_t>(k1) * n + k2] =
          weight * std::exp(-le) * poly / std::pow(lambda, order_);
    }
  }
}

double PolyharmonicEwald::value(Vec2 d) const {
  d = wrap_half(d);
  double real = 0.0;
  const double inv4e = 1.0 / (4.0 * eps_);
  for (int n1 = -images_; n1 <= images_; ++n1) {
    for (int n2 = -images_; n2 <= images_; ++n2) {
      const double x = d.x + n1;
      const double y = d.y + n2;
      const double z = (x * x + y * y) * inv4e;
      if (z > 60.0) continue;
      if (z == 0.0 && order_ == 1) throw SingularityError("Coulomb kernel at coincident points");
      real += expint_en(order_, z);
    }
  }
  return real_prefactor_ * real - mean_shift_ + cosine_series(coeff_, cutoff_, d);
}

Vec2 PolyharmonicEwald::gradient(Vec2 d) const {
  d = wrap_half(d);
  double gx = 0.0;
  double gy = 0.0;
  const double inv4e = 1.0 / (4.0 * eps_);
  for (int n1 = -images_; n1 <= images_; ++n1) {
    for (int n2 = -images_; n2 <= images_; ++n2) {
      const double x = d.x + n1;
      const double y = d.y + n2;
      const double z = (x * x + y * y) * inv4e;
      if (z > 60.0) continue;
      if (z == 0.0) {
        if (order_ == 1) throw SingularityError("Coulomb gradient at coincident points");
        continue;
      }
      // d/dz E_s(z) = -E_{s-1}(z), with E_0(z) = e^{-z}/z.
      const double lower = order_ == 1 ? std::exp(-z) / z : expint_en(order_ - 1, z);
      const double f = -lower * 2.0 * inv4e;
      gx += f * x;
      gy += f * y;
    }
  }
  const Vec2 four = cosine_series_gradient(coeff_, cutoff_, d);
  return {real_prefactor_ * gx + four.x, real_prefactor_ * gy + four.y};
}

FoldedCellTable::FoldedCellTable(int intervals, const std::function<double(double, double)>& f)
    : n_(intervals), h_(0.5 / intervals), stride_(intervals + 3) {
  if (intervals < 4) throw DomainError("table needs at least 4 intervals");
  values_.resize(static_cast<std::size_t>(stride_) * stride_);
  for (int i = -1; i <= n_ + 1; ++i) {
    for (int j = -1; j <= n_ + 1; ++j) {
      values_[static_cast<std::size_t>(i + 1) * stride_ + (j + 1)] = f(i * h_, j * h_);
    }
  }
}

namespace {

inline void lagrange4(double t, double w[4]) {
  const double tm1 = t - 1.0;
  const double tm2 = t - 2.0;
  const double tp1 = t + 1.0;
  w[0] = -t * tm1 * tm2 / 6.0;
  w[1] = tp1 * tm1 * tm2 / 2.0;
  w[2] = -tp1 * t * tm2 / 2.0;
  w[3] = tp1 * t * tm1 / 6.0;
}

}  // namespace

double FoldedCellTable::operator()(double u, double v) const {
  const double su = u / h_;
  const double sv = v / h_;
  int iu = static_cast<int>(su);
  int iv = static_cast<int>(sv);
  if (iu > n_ - 1) iu = n_ - 1;
  if (iv > n_ - 1) iv = n_ - 1;
  double wu[4];
  double wv[4];
  lagrange4(su - iu, wu);
  lagrange4(sv - iv, wv);
  // Node i sits at array index i + 1, so the stencil i-1..i+2 starts at index i.
  const double* base = values_.data() + static_cast<std::size_t>(iu) * stride_ + iv;
  double total = 0.0;
  for (int a = 0; a < 4; ++a) {
    const double* row = base + static_cast<std::size_t>(a) * stride_;
    total += wu[a] * (wv[0] * row[0] + wv[1] * row[1] + wv[2] * row[2] + wv[3] * row[3]);
  }
  return total;
}

}  // namespace vortexclt
