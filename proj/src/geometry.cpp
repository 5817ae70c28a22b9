#include "vortexclt/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vortexclt/errors.hpp"

namespace vortexclt {

std::string_view domain_name(Domain d) {
  switch (d) {
    case Domain::Torus2: return "torus";
    case Domain::Sphere2: return "sphere";
    case Domain::UnitDisk: return "disk";
  }
  return "unknown";
}

Domain parse_domain(std::string_view name) {
  if (name == "torus") return Domain::Torus2;
  if (name == "sphere") return Domain::Sphere2;
  if (name == "disk") return Domain::UnitDisk;
  throw std::invalid_argument("unknown domain '" + std::string(name) + "'");
}

double wrap_unit(double a) {
  double w = a - std::floor(a);
  if (w >= 1.0) w = 0.0;
  return w;
}

Vec2 torus_displacement(const Vec3& a, const Vec3& b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  dx -= std::nearbyint(dx);
  dy -= std::nearbyint(dy);
  return {dx, dy};
}

DomainPoint DomainPoint::torus(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("torus point must be finite");
  return DomainPoint(Domain::Torus2, {wrap_unit(a), wrap_unit(b), 0.0});
}

DomainPoint DomainPoint::sphere(double x, double y, double z) {
  const double r2 = x * x + y * y + z * z;
  if (!(std::abs(r2 - 1.0) <= 1e-12)) throw DomainError("sphere point must have unit norm");
  return DomainPoint(Domain::Sphere2, {x, y, z});
}

DomainPoint DomainPoint::sphere_from(const Vec3& v) {
  const double r = norm(v);
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("cannot project zero vector onto sphere");
  return DomainPoint(Domain::Sphere2, (1.0 / r) * v);
}

DomainPoint DomainPoint::disk(double x, double y) {
  if (!(x * x + y * y < 1.0)) throw DomainError("disk point must satisfy |x| < 1");
  return DomainPoint(Domain::UnitDisk, {x, y, 0.0});
}

double distance(const DomainPoint& a, const DomainPoint& b) {
  if (a.domain() != b.domain()) throw DomainError("distance between points of different domains");
  switch (a.domain()) {
    case Domain::Torus2: {
      const Vec2 d = torus_displacement(a.coords(), b.coords());
      return std::hypot(d.x, d.y);
    }
    case Domain::Sphere2:
      return norm(a.coords() - b.coords());
    case Domain::UnitDisk:
      return std::hypot(a.coords().x - b.coords().x, a.coords().y - b.coords().y);
  }
  return 0.0;
}

DomainPoint sample_uniform(Domain d, Rng& rng) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  switch (d) {
    case Domain::Torus2: {
      const double a = uniform01(rng);
      const double b = uniform01(rng);
      return DomainPoint::torus(a, b);
    }
    case Domain::Sphere2: {
      const double z = 2.0 * uniform01(rng) - 1.0;
      const double phi = two_pi * uniform01(rng);
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      return DomainPoint::sphere_from({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    case Domain::UnitDisk: {
      const double r = std::sqrt(uniform01(rng));
      const double phi = two_pi * uniform01(rng);
      return DomainPoint::disk(r * std::cos(phi), r * std::sin(phi));
    }
  }
  throw UnsupportedDomain("sample_uniform: unknown domain");
}

double max_step(Domain d) {
  switch (d) {
    case Domain::Torus2: return 0.5;
    case Domain::Sphere2: return 1.0;
    case Domain::UnitDisk: return 1.0;
  }
  return 0.5;
}

std::optional<DomainPoint> propose_displacement(const DomainPoint& p, double step, Rng& rng) {
  if (!(step > 0.0)) throw DomainError("proposal step must be positive");
  std::uniform_real_distribution<double> offset(-step, step);
  const Vec3& c = p.coords();
  switch (p.domain()) {
    case Domain::Torus2: {
      const double dx = offset(rng);
      const double dy = offset(rng);
      return DomainPoint::torus(c.x + dx, c.y + dy);
    }
    case Domain::Sphere2: {
      // Orthonormal tangent frame built from the axis least aligned with p.
      Vec3 axis{1.0, 0.0, 0.0};
      if (std::abs(c.y) <= std::abs(c.x) && std::abs(c.y) <= std::abs(c.z)) axis = {0.0, 1.0, 0.0};
      if (std::abs(c.z) <= std::abs(c.x) && std::abs(c.z) <= std::abs(c.y)) axis = {0.0, 0.0, 1.0};
      Vec3 e1 = cross(c, axis);
      e1 = (1.0 / norm(e1)) * e1;
      const Vec3 e2 = cross(c, e1);
      double u = 0.0;
      double v = 0.0;
      do {
        u = offset(rng);
        v = offset(rng);
      } while (u * u + v * v > step * step);
      return DomainPoint::sphere_from(c + u * e1 + v * e2);
    }
    case Domain::UnitDisk: {
      const double x = c.x + offset(rng);
      const double y = c.y + offset(rng);
      if (x * x + y * y >= 1.0) return std::nullopt;
      return DomainPoint::disk(x, y);
    }
  }
  throw UnsupportedDomain("propose_displacement: unknown domain");
}

}  // namespace vortexclt
