#include "vortexclt/greens.hpp"

#include <cmath>
#include <numbers>
#include <limits>
#include <stdexcept>
#include <string>

#include "vortexclt/errors.hpp"
#include "vortexclt/specfun.hpp"

namespace vortexclt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInv2Pi = 0.5 / kPi;
constexpr double kInv4Pi = 0.25 / kPi;
constexpr double kHalfDiag = std::numbers::sqrt2 / 2.0;

Vec2 wrap_half(Vec2 d) { return {d.x - std::nearbyint(d.x), d.y - std::nearbyint(d.y)}; }

void require_domain(const DomainPoint& x, const DomainPoint& y, Domain d, const char* what) {
  if (x.domain() != d || y.domain() != d) {
    throw UnsupportedDomain(std::string(what) + ": points must lie on the " +
                            std::string(domain_name(d)));
  }
}

constexpr double kAutoTail = 2e-11;

}  // namespace

SplitPotential::SplitPotential(double mass, int order) : m_(mass), images_(1), cutoff_(1), order_(order) {
  if (!(mass >= 4.0)) throw std::invalid_argument("split mass must be >= 4");
  if (order < 1 || order > 4) throw std::invalid_argument("split order must be in 1..4");
  while (image_tail_bound(m_, images_) > kAutoTail) ++images_;
  while (fourier_tail_bound(m_, cutoff_, order_) > kAutoTail) {
    ++cutoff_;
    if (cutoff_ > 4096) throw std::invalid_argument("Fourier cutoff for this mass is too large");
  }
  build();
}

SplitPotential::SplitPotential(double mass, int image_radius, int fourier_cutoff, int order)
    : m_(mass), images_(image_radius), cutoff_(fourier_cutoff), order_(order) {
  if (!(mass >= 4.0)) throw std::invalid_argument("split mass must be >= 4");
  if (order < 1 || order > 4) throw std::invalid_argument("split order must be in 1..4");
  if (image_radius < 1 || fourier_cutoff < 1) {
    throw std::invalid_argument("image radius and Fourier cutoff must be positive");
  }
  build();
  if (truncation_bound() > 1e-10) {
    throw std::invalid_argument("split truncation bound " + std::to_string(truncation_bound()) +
                                " exceeds 1e-10");
  }
}

void SplitPotential::build() {
  image_tail_ = image_tail_bound(m_, images_);
  fourier_tail_ = fourier_tail_bound(m_, cutoff_, order_);
  const double reach = images_ + 0.5;
  image_reach2_ = reach * reach;
  poly_.clear();
  for (int s = 2; s <= order_ + 1; ++s) poly_.emplace_back(s);
  const int n = cutoff_ + 1;
  remainder_.assign(static_cast<std::size_t>(n) * n, 0.0);
  const double m2 = m_ * m_;
  for (int k1 = 0; k1 <= cutoff_; ++k1) {
    for (int k2 = 0; k2 <= cutoff_; ++k2) {
      if (k1 == 0 && k2 == 0) continue;
      const double lambda = 4.0 * kPi * kPi * (k1 * k1 + k2 * k2);
      const double weight = (k1 == 0 ? 1.0 : 2.0) * (k2 == 0 ? 1.0 : 2.0);
      remainder_[static_cast<std::size_t>(k1) * n + k2] =
          weight / (std::pow(lambda, order_ + 1) * (m2 + lambda));
    }
  }
}

double SplitPotential::image_tail_bound(double mass, int image_radius) {
  // Images beyond radius R + 1/2; each is dominated by the integral of
  // K0(m(|z| - sqrt2/2)) over its unit cell.
  const double a = image_radius + 0.5 - 2.0 * kHalfDiag;
  if (a <= 0.0) return std::numeric_limits<double>::infinity();
  const auto [k0, k1] = bessel_k01(mass * a);
  return (a * k1 + kHalfDiag * k0) / mass;
}

double SplitPotential::fourier_tail_bound(double mass, int fourier_cutoff, int order) {
  const double s = 2.0 * (order + 2);
  const double scale = std::pow(mass, 2.0 * order + 2.0) / std::pow(2.0 * kPi, s);
  return scale * lattice_tail_upper(s, fourier_cutoff);
}

double SplitPotential::yukawa_radius() const { return 2.0 * std::log(m_) / m_; }

double SplitPotential::yukawa_images(Vec2 d) const {
  d = wrap_half(d);
  const int span = images_ + 1;
  double total = 0.0;
  for (int n1 = -span; n1 <= span; ++n1) {
    for (int n2 = -span; n2 <= span; ++n2) {
      const double x = d.x + n1;
      const double y = d.y + n2;
      const double r2 = x * x + y * y;
      if (r2 > image_reach2_) continue;
      if (r2 == 0.0) throw SingularityError("Yukawa kernel at coincident points");
      total += bessel_k0(m_ * std::sqrt(r2));
    }
  }
  return kInv2Pi * total;
}

double SplitPotential::yukawa(Vec2 d) const { return yukawa_images(d) - 1.0 / (m_ * m_); }

double SplitPotential::smooth(Vec2 d) const {
  d = wrap_half(d);
  const double m2 = m_ * m_;
  double mp = 1.0;
  double sign = 1.0;
  double total = 0.0;
  for (const auto& b : poly_) {
    mp *= m2;
    total += sign * mp * b.value(d);
    sign = -sign;
  }
  mp *= m2;
  total += sign * mp * cosine_series(remainder_, cutoff_, d);
  return total;
}

double SplitPotential::regular(Vec2 d) const {
  d = wrap_half(d);
  const int span = images_ + 1;
  double outer = 0.0;
  for (int n1 = -span; n1 <= span; ++n1) {
    for (int n2 = -span; n2 <= span; ++n2) {
      if (n1 == 0 && n2 == 0) continue;
      const double x = d.x + n1;
      const double y = d.y + n2;
      const double r2 = x * x + y * y;
      if (r2 > image_reach2_) continue;
      outer += bessel_k0(m_ * std::sqrt(r2));
    }
  }
  const double r = std::hypot(d.x, d.y);
  const double central = bessel_k0_plus_log(m_ * r) - std::log(m_);
  return kInv2Pi * (central + outer) - 1.0 / (m_ * m_) + smooth(d);
}

Vec2 SplitPotential::yukawa_gradient(Vec2 d) const {
  d = wrap_half(d);
  const int span = images_ + 1;
  double gx = 0.0;
  double gy = 0.0;
  for (int n1 = -span; n1 <= span; ++n1) {
    for (int n2 = -span; n2 <= span; ++n2) {
      const double x = d.x + n1;
      const double y = d.y + n2;
      const double r2 = x * x + y * y;
      if (r2 > image_reach2_) continue;
      if (r2 == 0.0) throw SingularityError("Yukawa gradient at coincident points");
      const double r = std::sqrt(r2);
      const double f = -m_ * bessel_k1(m_ * r) / r;
      gx += f * x;
      gy += f * y;
    }
  }
  return {kInv2Pi * gx, kInv2Pi * gy};
}

Vec2 SplitPotential::smooth_gradient(Vec2 d) const {
  d = wrap_half(d);
  const double m2 = m_ * m_;
  double mp = 1.0;
  double sign = 1.0;
  Vec2 total;
  for (const auto& b : poly_) {
    mp *= m2;
    const Vec2 g = b.gradient(d);
    total.x += sign * mp * g.x;
    total.y += sign * mp * g.y;
    sign = -sign;
  }
  mp *= m2;
  const Vec2 g = cosine_series_gradient(remainder_, cutoff_, d);
  total.x += sign * mp * g.x;
  total.y += sign * mp * g.y;
  return total;
}

Vec2 SplitPotential::green_gradient(Vec2 d) const {
  const Vec2 a = yukawa_gradient(d);
  const Vec2 b = smooth_gradient(d);
  return {a.x + b.x, a.y + b.y};
}

const SplitPotential& default_split() {
  static const SplitPotential split(6.0);
  return split;
}

TorusGreenTable::TorusGreenTable(const SplitPotential& split, int intervals)
    : table_(intervals, [&split](double u, double v) {
        const double r2 = u * u + v * v;
        if (r2 < 0.0625) return split.regular({u, v});
        return split.green({u, v}) + kInv4Pi * std::log(r2);
      }) {}

const TorusGreenTable& TorusGreenTable::instance() {
  static const TorusGreenTable table(default_split());
  return table;
}

double TorusGreenTable::regular(Vec2 d) const {
  d = wrap_half(d);
  return table_(std::abs(d.x), std::abs(d.y));
}

double TorusGreenTable::green(Vec2 d) const {
  d = wrap_half(d);
  const double u = std::abs(d.x);
  const double v = std::abs(d.y);
  const double r2 = u * u + v * v;
  if (r2 == 0.0) throw SingularityError("torus Green function at coincident points");
  return -kInv4Pi * std::log(r2) + table_(u, v);
}

TorusYukawaTable::TorusYukawaTable(double mass, int intervals)
    : m_(mass), outer_(intervals, [mass](double u, double v) {
        if (!(mass >= 4.0)) throw std::invalid_argument("Yukawa mass must be >= 4");
        int radius = 1;
        while (SplitPotential::image_tail_bound(mass, radius) > kAutoTail) ++radius;
        const int span = radius + 1;
        double total = 0.0;
        for (int n1 = -span; n1 <= span; ++n1) {
          for (int n2 = -span; n2 <= span; ++n2) {
            if (n1 == 0 && n2 == 0) continue;
            total += bessel_k0(mass * std::hypot(u + n1, v + n2));
          }
        }
        return kInv2Pi * total;
      }) {}

double TorusYukawaTable::value(Vec2 d) const {
  d = wrap_half(d);
  const double u = std::abs(d.x);
  const double v = std::abs(d.y);
  const double r = std::hypot(u, v);
  if (r == 0.0) throw SingularityError("Yukawa kernel at coincident points");
  return kInv2Pi * bessel_k0(m_ * r) + outer_(u, v) - 1.0 / (m_ * m_);
}

double torus_yukawa(const DomainPoint& x, const DomainPoint& y, const SplitPotential& split) {
  require_domain(x, y, Domain::Torus2, "torus_yukawa");
  const Vec2 d = torus_displacement(x.coords(), y.coords());
  return split.yukawa(d);
}

double torus_green(const DomainPoint& x, const DomainPoint& y, const SplitPotential& split) {
  require_domain(x, y, Domain::Torus2, "torus_green");
  const Vec2 d = torus_displacement(x.coords(), y.coords());
  if (d.x == 0.0 && d.y == 0.0) throw SingularityError("torus Green function at coincident points");
  return split.green(d);
}

double sphere_green_constant() { return kInv2Pi * (std::numbers::ln2 - 0.5); }

double sphere_green(const DomainPoint& x, const DomainPoint& y) {
  require_domain(x, y, Domain::Sphere2, "sphere_green");
  const Vec3 d = x.coords() - y.coords();
  const double r2 = dot(d, d);
  if (r2 == 0.0) throw SingularityError("sphere Green function at coincident points");
  return -kInv4Pi * std::log(r2) + sphere_green_constant();
}

double sphere_green_spectral_check(double theta, int degree) {
  if (!(theta > 0.0 && theta <= kPi)) {
    if (theta == 0.0) throw SingularityError("spectral Green sum diverges at theta = 0");
    throw DomainError("theta must lie in (0, pi]");
  }
  if (degree < 0) throw DomainError("degree must be nonnegative");
  const double c = std::cos(theta);
  double p0 = 1.0;
  double p1 = c;
  double total = 0.0;
  for (int l = 1; l <= degree; ++l) {
    total += (2.0 * l + 1.0) * p1 / (static_cast<double>(l) * (l + 1));
    const double p2 = ((2.0 * l + 1.0) * c * p1 - l * p0) / (l + 1);
    p0 = p1;
    p1 = p2;
  }
  return kInv4Pi * total;
}

namespace {

// |x - y|^2 + (1 - |x|^2)(1 - |y|^2) = 1 - 2 x.y + |x|^2 |y|^2 = |x|^2 |x* - y|^2.
double disk_image_factor(const Vec3& x, const Vec3& y, double& r2) {
  const double dx = x.x - y.x;
  const double dy = x.y - y.y;
  r2 = dx * dx + dy * dy;
  const double ax = 1.0 - (x.x * x.x + x.y * x.y);
  const double ay = 1.0 - (y.x * y.x + y.y * y.y);
  return ax * ay;
}

}  // namespace

double disk_g(const DomainPoint& x, const DomainPoint& y) {
  require_domain(x, y, Domain::UnitDisk, "disk_g");
  double r2 = 0.0;
  const double p = disk_image_factor(x.coords(), y.coords(), r2);
  return kInv4Pi * std::log(r2 + p);
}

double disk_green(const DomainPoint& x, const DomainPoint& y) {
  require_domain(x, y, Domain::UnitDisk, "disk_green");
  double r2 = 0.0;
  const double p = disk_image_factor(x.coords(), y.coords(), r2);
  if (r2 == 0.0) throw SingularityError("disk Green function at coincident points");
  return kInv4Pi * std::log1p(p / r2);
}

double disk_gbar(int radial_nodes) {
  // With s = 1 - r^2 = t^4 the diagonal g(y,y) = log(s)/(2 pi) integrates as
  // (1/2 pi) * int_0^1 16 t^3 log t dt.
  const GaussLegendre gl = gauss_legendre(radial_nodes);
  double total = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double t = 0.5 * (gl.nodes[i] + 1.0);
    const double s = t * t * t * t;
    total += gl.weights[i] * 4.0 * t * t * t * std::log(s);
  }
  return kInv2Pi * 0.5 * total;
}

Vec3 grad_perp_green(const DomainPoint& x, const DomainPoint& y, const SplitPotential& split) {
  if (x.domain() != y.domain()) throw DomainError("grad_perp_green: mixed domains");
  switch (x.domain()) {
    case Domain::Torus2: {
      const Vec2 d = torus_displacement(x.coords(), y.coords());
      if (d.x == 0.0 && d.y == 0.0) throw SingularityError("Green gradient at coincident points");
      const Vec2 g = split.green_gradient(d);
      return {g.y, -g.x, 0.0};
    }
    case Domain::Sphere2: {
      const Vec3 d = x.coords() - y.coords();
      const double r2 = dot(d, d);
      if (r2 == 0.0) throw SingularityError("Green gradient at coincident points");
      return (kInv2Pi / r2) * cross(x.coords(), y.coords());
    }
    case Domain::UnitDisk: {
      const Vec3& a = x.coords();
      const Vec3& b = y.coords();
      double r2 = 0.0;
      const double p = disk_image_factor(a, b, r2);
      if (r2 == 0.0) throw SingularityError("Green gradient at coincident points");
      const double q = r2 + p;
      const double b2 = b.x * b.x + b.y * b.y;
      // grad_x log q = (2 x |y|^2 - 2 y) / q, grad_x log r2 = 2 (x - y) / r2.
      const double gx = kInv4Pi * ((2.0 * a.x * b2 - 2.0 * b.x) / q - 2.0 * (a.x - b.x) / r2);
      const double gy = kInv4Pi * ((2.0 * a.y * b2 - 2.0 * b.y) / q - 2.0 * (a.y - b.y) / r2);
      return {gy, -gx, 0.0};
    }
  }
  throw UnsupportedDomain("grad_perp_green: unknown domain");
}

InteractionKernel::InteractionKernel(Domain d) : domain_(d) {
  if (d == Domain::Torus2) table_ = &TorusGreenTable::instance();
}

double InteractionKernel::pair(const Vec3& a, const Vec3& b) const {
  switch (domain_) {
    case Domain::Torus2:
      return table_->green(torus_displacement(a, b));
    case Domain::Sphere2: {
      const Vec3 d = a - b;
      const double r2 = dot(d, d);
      if (r2 == 0.0) throw SingularityError("coincident vortices");
      return -kInv4Pi * std::log(r2) + sphere_green_constant();
    }
    case Domain::UnitDisk: {
      double r2 = 0.0;
      const double p = disk_image_factor(a, b, r2);
      if (r2 == 0.0) throw SingularityError("coincident vortices");
      return kInv4Pi * std::log1p(p / r2);
    }
  }
  return 0.0;
}

double InteractionKernel::self(const Vec3& a) const {
  if (domain_ != Domain::UnitDisk) return 0.0;
  return kInv2Pi * std::log(1.0 - (a.x * a.x + a.y * a.y));
}

}  // namespace vortexclt
