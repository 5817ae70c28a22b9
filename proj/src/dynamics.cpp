#include "vortexclt/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vortexclt/errors.hpp"

namespace vortexclt {

namespace {

constexpr double kCollision = 1e-8;

void require_dynamics_domain(Domain d) {
  if (d == Domain::UnitDisk) throw UnsupportedDomain("dynamics are implemented on the torus and the sphere only");
}

// Velocity at raw coordinates; sphere stage points may sit slightly off the surface.
std::vector<Vec3> raw_velocity(const std::vector<Vec3>& x, const std::vector<double>& xi, Domain domain,
                               const SplitPotential& split) {
  const std::size_t n = x.size();
  std::vector<Vec3> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (domain == Domain::Torus2) {
        const Vec2 d = torus_displacement(x[i], x[j]);
        if (std::hypot(d.x, d.y) < kCollision) throw SingularityError("vortex collision");
        const Vec2 g = split.green_gradient(d);
        // grad-perp G(x_i, x_j) = (g_y, -g_x); the kernel is odd in the displacement.
        v[i] += -xi[j] * Vec3{g.y, -g.x, 0.0};
        v[j] += xi[i] * Vec3{g.y, -g.x, 0.0};
      } else {
        const Vec3 d = x[i] - x[j];
        const double r2 = dot(d, d);
        if (r2 < kCollision * kCollision) throw SingularityError("vortex collision");
        const Vec3 c = (0.5 / std::numbers::pi / r2) * cross(x[i], x[j]);
        v[i] += -xi[j] * c;
        v[j] += xi[i] * c;
      }
    }
  }
  return v;
}

std::vector<Vec3> coords_of(const VortexConfig& c) {
  std::vector<Vec3> x;
  x.reserve(c.positions.size());
  for (const auto& p : c.positions) x.push_back(p.coords());
  return x;
}

void store(VortexConfig& c, const std::vector<Vec3>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    c.positions[i] = c.params.domain() == Domain::Torus2 ? DomainPoint::torus(x[i].x, x[i].y)
                                                          : DomainPoint::sphere_from(x[i]);
  }
}

}  // namespace

TrajectoryConfig::TrajectoryConfig(double dt_, int n_steps_, int record_every_)
    : dt(dt_), n_steps(n_steps_), record_every(record_every_) {
  validate();
}

void TrajectoryConfig::validate() const {
  if (!(dt != 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be nonzero and finite");
  if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
  if (record_every < 1 || record_every > n_steps) throw std::invalid_argument("record_every must lie in [1, n_steps]");
  if (std::abs(dt) * n_steps > 1e3) throw std::invalid_argument("|dt| * n_steps must not exceed 1000");
}

std::vector<Vec3> velocity(const VortexConfig& config, const SplitPotential& split) {
  require_dynamics_domain(config.params.domain());
  return raw_velocity(coords_of(config), config.params.intensities(), config.params.domain(), split);
}

double dynamics_hamiltonian(const VortexConfig& config, const SplitPotential& split) {
  require_dynamics_domain(config.params.domain());
  if (config.params.domain() == Domain::Torus2) return hamiltonian_split(config, split);
  return hamiltonian(config);
}

std::vector<Snapshot> integrate(const VortexConfig& config, const TrajectoryConfig& tc, const SplitPotential& split) {
  tc.validate();
  const Domain domain = config.params.domain();
  require_dynamics_domain(domain);
  const auto& xi = config.params.intensities();
  VortexConfig current = config;
  std::vector<Vec3> x = coords_of(current);
  const std::size_t n = x.size();
  std::vector<Snapshot> out;
  out.push_back({0.0, current, dynamics_hamiltonian(current, split)});
  const double h = tc.dt;
  std::vector<Vec3> stage(n);
  for (int step = 1; step <= tc.n_steps; ++step) {
    const auto k1 = raw_velocity(x, xi, domain, split);
    for (std::size_t i = 0; i < n; ++i) stage[i] = x[i] + (0.5 * h) * k1[i];
    const auto k2 = raw_velocity(stage, xi, domain, split);
    for (std::size_t i = 0; i < n; ++i) stage[i] = x[i] + (0.5 * h) * k2[i];
    const auto k3 = raw_velocity(stage, xi, domain, split);
    for (std::size_t i = 0; i < n; ++i) stage[i] = x[i] + h * k3[i];
    const auto k4 = raw_velocity(stage, xi, domain, split);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = x[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (domain == Domain::Sphere2) x[i] = (1.0 / norm(x[i])) * x[i];
    }
    if (step % tc.record_every == 0) {
      store(current, x);
      out.push_back({step * h, current, dynamics_hamiltonian(current, split)});
    }
  }
  return out;
}

}  // namespace vortexclt
