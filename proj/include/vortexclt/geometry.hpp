#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "vortexclt/random.hpp"

namespace vortexclt {

enum class Domain { Torus2, Sphere2, UnitDisk };

std::string_view domain_name(Domain d);
Domain parse_domain(std::string_view name);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Position on one of the three surfaces. Torus and disk points use x, y;
/// sphere points use all three coordinates.
class DomainPoint {
 public:
  /// Canonical representative of (a, b) in [0,1)^2.
  static DomainPoint torus(double a, double b);
  /// Unit vector; throws DomainError when | |x|^2 - 1 | > 1e-12.
  static DomainPoint sphere(double x, double y, double z);
  /// Normalizes a nonzero vector onto the sphere.
  static DomainPoint sphere_from(const Vec3& v);
  /// Point of the open unit disk; throws DomainError when |x| >= 1.
  static DomainPoint disk(double x, double y);

  Domain domain() const { return domain_; }
  const Vec3& coords() const { return c_; }
  double operator[](int i) const { return i == 0 ? c_.x : (i == 1 ? c_.y : c_.z); }
  int dimension() const { return domain_ == Domain::Sphere2 ? 3 : 2; }

  bool operator==(const DomainPoint&) const = default;

 private:
  DomainPoint(Domain d, Vec3 c) : domain_(d), c_(c) {}
  Domain domain_;
  Vec3 c_;
};

/// Wraps a real number into [0,1).
double wrap_unit(double a);
/// Minimal-image displacement a - b on the torus, components in [-0.5, 0.5].
Vec2 torus_displacement(const Vec3& a, const Vec3& b);

/// Torus: minimal-image distance. Sphere: chord length. Disk: Euclidean.
double distance(const DomainPoint& a, const DomainPoint& b);

DomainPoint sample_uniform(Domain d, Rng& rng);

/// Symmetric random-walk proposal. Returns nullopt when a disk proposal
/// leaves the open disk.
std::optional<DomainPoint> propose_displacement(const DomainPoint& p, double step, Rng& rng);

/// Largest step size for which the proposal stays meaningful.
double max_step(Domain d);

}  // namespace vortexclt
