#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vortexclt/diagnostics.hpp"
#include "vortexclt/errors.hpp"
#include "vortexclt/gaussian.hpp"

using namespace vortexclt;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("spectral field storage") {
  SpectralField f = SpectralField::torus(3);
  f.set_torus_coeff(1, -2, {0.5, 0.25});
  CHECK(f.torus_coeff(-1, 2) == std::complex<double>(0.5, -0.25));
  CHECK(f.torus_coeff(0, 0) == std::complex<double>(0, 0));
  CHECK_THROWS(f.torus_coeff(4, 0));
  SpectralField s = SpectralField::sphere(3);
  s.set_sphere_coeff(2, -1, 0.75);
  CHECK(s.sphere_coeff(2, -1) == 0.75);
  CHECK(SpectralField::sphere_eigenvalue(3) == 12.0);
  CHECK(SpectralField::torus_eigenvalue(1, 1) == doctest::Approx(8 * kPi * kPi));
  CHECK(mode_variance(1.0, 1.0, 4 * kPi * kPi) == doctest::Approx(4 * kPi * kPi / (1 + 4 * kPi * kPi)));
  CHECK_THROWS_AS(GaussianParams(1.0, 0.0, Domain::Torus2, 4), std::invalid_argument);
  Rng rng(0);
  CHECK_THROWS_AS(sample_field(GaussianParams(1.0, 1.0, Domain::UnitDisk, 4), rng), UnsupportedDomain);
}

TEST_CASE("white-noise mode variance and independence") {
  const GaussianParams p(0.0, 2.0, Domain::Torus2, 4);
  Rng rng(1);
  const int n = 100000;
  std::vector<std::vector<double>> m(81);
  std::vector<double> cross;
  for (int s = 0; s < n; ++s) {
    const SpectralField f = sample_field(p, rng);
    int idx = 0;
    for (int k1 = -4; k1 <= 4; ++k1) {
      for (int k2 = -4; k2 <= 4; ++k2, ++idx) {
        if (k1 || k2) m[idx].push_back(std::norm(f.torus_coeff(k1, k2)));
      }
    }
    cross.push_back((f.torus_coeff(1, 0) * std::conj(f.torus_coeff(0, 1))).real());
  }
  for (const auto& v : m) {
    if (v.empty()) continue;
    const auto e = iid_mean(v);
    CHECK(std::abs(e.value - 0.5) < 3.5 * e.std_error);
  }
  const auto c = iid_mean(cross);
  CHECK(std::abs(c.value) < 3 * c.std_error);
}

TEST_CASE("characteristic functional") {
  const GaussianParams p(1.0, 1.0, Domain::Torus2, 4);
  CHECK(characteristic_functional(p, SpectralField::torus(4)) == 1.0);
  SpectralField f = SpectralField::torus(4);
  f.set_torus_coeff(1, 0, {1 / std::sqrt(2.0), 0});
  const double lambda = 4 * kPi * kPi;
  const double target = std::exp(-lambda / (2 * (1 + lambda)));
  CHECK(characteristic_functional(p, f) == doctest::Approx(target).epsilon(1e-14));
  Rng rng(2);
  std::vector<double> c;
  for (int s = 0; s < 100000; ++s) c.push_back(std::cos(pairing(sample_field(p, rng), f)));
  const auto e = iid_mean(c);
  CHECK(std::abs(e.value - target) < 3 * e.std_error);
}

TEST_CASE("renormalized energy") {
  SpectralField zero = SpectralField::torus(5);
  double inv = 0.0;
  for (int k1 = -5; k1 <= 5; ++k1) {
    for (int k2 = -5; k2 <= 5; ++k2) {
      if (k1 || k2) inv += 1.0 / SpectralField::torus_eigenvalue(k1, k2);
    }
  }
  CHECK(renormalized_energy(zero, 2.0) == doctest::Approx(-inv / 4.0).epsilon(1e-13));
  SpectralField flat = SpectralField::torus(5);
  for_each_half_mode(5, [&](int a, int b) { flat.set_torus_coeff(a, b, std::polar(1 / std::sqrt(2.0), 0.3 * a + b)); });
  CHECK(std::abs(renormalized_energy(flat, 2.0)) < 1e-15);

  const GaussianParams p(0.0, 1.0, Domain::Torus2, 16);
  Rng rng(3);
  std::vector<double> e;
  for (int s = 0; s < 100000; ++s) e.push_back(renormalized_energy(sample_field(p, rng), 1.0));
  const auto m = iid_mean(e);
  CHECK(std::abs(m.value) < 3 * m.std_error);

  const GaussianParams sp(0.0, 1.0, Domain::Sphere2, 8);
  std::vector<double> es;
  for (int s = 0; s < 20000; ++s) es.push_back(renormalized_energy(sample_field(sp, rng), 1.0));
  const auto ms = iid_mean(es);
  CHECK(std::abs(ms.value) < 3 * ms.std_error);
}

TEST_CASE("Gaussian partition function") {
  CHECK(gaussian_partition_function(0.0, 1.0, 8).value == 1.0);
  const auto z64 = gaussian_partition_function(1.0, 1.0, 64);
  const auto z128 = gaussian_partition_function(1.0, 1.0, 128);
  CHECK(std::abs(z64.value - z128.value) <= z64.tail_bound);
  CHECK(z128.tail_bound < z64.tail_bound);
  double prod = 1.0;
  for_each_half_mode(16, [&](int a, int b) { prod *= oracle::wick_pair_factor(1.0 / SpectralField::torus_eigenvalue(a, b)); });
  CHECK(gaussian_partition_function(1.0, 1.0, 16).value == doctest::Approx(prod).epsilon(1e-13));
  // Monte Carlo over white noise truncated at the same cutoff.
  const GaussianParams p(0.0, 1.0, Domain::Torus2, 16);
  Rng rng(4);
  std::vector<double> w;
  for (int s = 0; s < 200000; ++s) w.push_back(std::exp(-renormalized_energy(sample_field(p, rng), 1.0)));
  const auto e = iid_mean(w);
  CHECK(std::abs(e.value - prod) < 3 * e.std_error);
  CHECK_THROWS_AS(gaussian_partition_function(-50.0, 1.0, 8), DomainError);
}

TEST_CASE("disk eigenbasis") {
  const DiskBasis basis(6);
  CHECK(basis.modes().front().zero == doctest::Approx(2.404825557695773));
  CHECK(basis.modes().front().eigenvalue == doctest::Approx(kPi * 2.404825557695773 * 2.404825557695773));
  const auto c = basis.project([](double x, double y) { return (1 - x * x - y * y) * (1 + x); });
  // Orthonormality under the normalized measure: Parseval against the exact L2 norm.
  double sum = 0.0;
  for (double v : c) sum += v * v;
  // int (1 - r^2)^2 (1 + x)^2 = 1/3 + (1/2) * 2 int_0^1 (1 - r^2)^2 r^3 dr = 1/3 + 1/24
  CHECK(sum == doctest::Approx(1.0 / 3 + 1.0 / 24).epsilon(1e-4));
}

TEST_CASE("disk covariance") {
  const DiskBasis basis(10);
  const auto one = [](double, double) { return 1.0; };
  const auto fx = [](double x, double y) { return 1 - x * x - y * y; };
  const auto gx = [](double x, double y) { return (1 - x * x - y * y) * (1 + y); };
  CHECK(std::abs(disk_covariance(basis, one, gx, 1.0, 1.0).value) < 1e-12);
  CHECK(std::abs(disk_covariance(basis, gx, one, 0.5, 2.0).value) < 1e-12);
  // <Mf, Mg> = int f g - int f int g = 1/3 - 1/4 with the 2D integrals done by Gauss-Kronrod.
  boost::math::quadrature::gauss_kronrod<double, 61> gk;
  const auto integral2d = [&](auto fn) {
    return gk.integrate([&](double r) {
      return gk.integrate([&](double t) { return fn(r * std::cos(t), r * std::sin(t)) * r; }, 0.0, 2 * kPi) / kPi;
    }, 0.0, 1.0);
  };
  const double direct = integral2d([&](double x, double y) { return fx(x, y) * gx(x, y); }) -
                        integral2d(fx) * integral2d(gx);
  CHECK(direct == doctest::Approx(1.0 / 12).epsilon(1e-12));
  const auto cold = disk_covariance(basis, fx, gx, 0.0, 2.0);
  CHECK(std::abs(cold.value - direct / 2.0) < 1e-6);
  CHECK(cold.tail_bound == 0.0);
  const auto hot = disk_covariance(basis, fx, fx, 1.0, 1.0);
  CHECK(hot.value > 0.0);
  CHECK(hot.value < disk_covariance(basis, fx, fx, 0.0, 1.0).value);
  const auto hot_fine = disk_covariance(DiskBasis(20), fx, fx, 1.0, 1.0);
  CHECK(std::abs(hot.value - hot_fine.value) <= hot.tail_bound + 1e-9);
  // Coefficient form restricted to the span agrees once the functions live in it.
  const auto cf = basis.project(fx);
  const auto cg = basis.project(gx);
  CHECK(disk_covariance(basis, cf, cg, 1.0, 1.0).value ==
        doctest::Approx(disk_covariance(basis, fx, gx, 1.0, 1.0).value).epsilon(1e-3));
}

TEST_CASE("disk Gaussian partition function") {
  const DiskBasis b(8);
  CHECK(disk_gaussian_partition_function(b, 0.0, 1.0).value == 1.0);
  const auto z8 = disk_gaussian_partition_function(b, 1.0, 1.0);
  const auto z16 = disk_gaussian_partition_function(DiskBasis(16), 1.0, 1.0);
  CHECK(std::abs(z8.value - z16.value) <= z8.tail_bound);
  CHECK(z8.value > 1.0);
}
