#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vortexclt/errors.hpp"
#include "vortexclt/specfun.hpp"

using namespace vortexclt;

TEST_CASE("K0 and K1 against quadrature") {
  CHECK(bessel_k0(1.0) == doctest::Approx(0.4210244382407083).epsilon(1e-14));
  CHECK(bessel_k1(1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-14));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logr(std::log(1e-3), std::log(50.0));
  for (int i = 0; i < 200; ++i) {
    const double r = std::exp(logr(rng));
    CHECK(std::abs(bessel_k0(r) - oracle::k0(r)) <= 1e-13 * std::max(1.0, oracle::k0(r)));
    CHECK(std::abs(bessel_k1(r) - oracle::k1(r)) <= 1e-12 * oracle::k1(r));
    CHECK(bessel_k0(r) == doctest::Approx(std::cyl_bessel_k(0.0, r)).epsilon(1e-13));
  }
}

TEST_CASE("K0 exponential envelope") {
  for (double r : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    CHECK(bessel_k0(r) <= std::sqrt(std::numbers::pi / (2.0 * r)) * std::exp(-r));
  }
  // With r in place of sqrt(r) the envelope only holds up to r of order one.
  for (double r : {0.5, 1.0}) CHECK(bessel_k0(r) <= std::sqrt(std::numbers::pi) * std::exp(-r) / (std::sqrt(2.0) * r));
  for (double r : {2.0, 5.0, 10.0}) CHECK(bessel_k0(r) > std::sqrt(std::numbers::pi) * std::exp(-r) / (std::sqrt(2.0) * r));
}

TEST_CASE("K0 logarithmic singularity and K1 pole") {
  const double r = 1e-4;
  CHECK(std::abs(bessel_k0(r) + std::log(r / 2) + kEulerGamma) < 1e-6);
  CHECK(bessel_k0(r) == doctest::Approx(oracle::k0_series(r)).epsilon(1e-14));
  CHECK(std::abs(1e-5 * bessel_k1(1e-5) - 1.0) < 1e-4);
  CHECK(bessel_k0_plus_log(0.0) == doctest::Approx(std::log(2.0) - kEulerGamma));
  CHECK(bessel_k0_plus_log(1e-3) == doctest::Approx(bessel_k0(1e-3) + std::log(1e-3)).epsilon(1e-13));
}

TEST_CASE("K0 derivative is -K1") {
  const double h = 1e-5;
  CHECK(std::abs((bessel_k0(2 + h) - bessel_k0(2 - h)) / (2 * h) + bessel_k1(2.0)) < 1e-6);
}

TEST_CASE("K0 and K1 reject nonpositive arguments") {
  CHECK_THROWS_AS(bessel_k0(0.0), DomainError);
  CHECK_THROWS_AS(bessel_k1(-1.0), DomainError);
}

TEST_CASE("J_n against the integral representation") {
  CHECK(bessel_jn(0, 0.0) == 1.0);
  CHECK(bessel_jn(1, 0.0) == 0.0);
  CHECK(std::abs(bessel_jn(0, 2.404825557695773)) < 1e-9);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> x(0.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(rng() % 6);
    const double r = x(rng);
    CHECK(std::abs(bessel_jn(n, r) - oracle::jn_integral(n, r)) < 1e-12);
    if (r < 12) CHECK(std::abs(bessel_jn(n, r) - oracle::jn_series(n, r)) < 1e-12);
  }
}

TEST_CASE("Bessel zeros") {
  const auto z0 = bessel_j_zeros(0, 5);
  const auto z1 = bessel_j_zeros(1, 5);
  const auto o0 = oracle::j_zeros(0, 5);
  const auto o1 = oracle::j_zeros(1, 5);
  REQUIRE(z0.size() == 5);
  CHECK(z0[0] == doctest::Approx(2.404825557695773).epsilon(1e-12));
  CHECK(z1[0] == doctest::Approx(3.831705970207512).epsilon(1e-12));
  for (int k = 0; k < 5; ++k) {
    CHECK(std::abs(z0[k] - o0[k]) < 1e-9);
    CHECK(std::abs(z1[k] - o1[k]) < 1e-9);
  }
  CHECK(z0[0] < z1[0]);
  CHECK(z1[0] < z0[1]);
  CHECK_THROWS(bessel_j_zeros(3, 0));
}

TEST_CASE("generalized exponential integral") {
  CHECK(expint_en(1, 1.0) == doctest::Approx(0.21938393439552029).epsilon(1e-14));
  CHECK(expint_en(3, 0.0) == doctest::Approx(0.5));
  for (double z : {0.01, 0.5, 2.0, 10.0}) {
    // n E_{n+1}(z) = e^{-z} - z E_n(z)
    CHECK(3 * expint_en(4, z) == doctest::Approx(std::exp(-z) - z * expint_en(3, z)).epsilon(1e-12));
  }
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const auto gl = gauss_legendre(10);
  double s = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * std::pow(gl.nodes[i], 18);
  CHECK(s == doctest::Approx(2.0 / 19.0).epsilon(1e-14));
}

TEST_CASE("lattice sums") {
  const double reference = oracle::lattice_sum_brute(4.0, 2000) + lattice_tail_upper(4.0, 2000) * 0.5;
  const double v200 = lattice_sum(LatticeSumSpec(4.0, 200));
  CHECK(std::abs(v200 - reference) < 1e-6 * reference);
  CHECK(v200 == doctest::Approx(6.026812040).epsilon(1e-9));
  const LatticeSumSpec a(4.0, 100), b(4.0, 400);
  CHECK(std::abs(lattice_sum(a) - lattice_sum(b)) <= a.tail_bound() + b.tail_bound());
  const LatticeSumSpec raw(4.0, 100, TailMode::Raw);
  CHECK(lattice_sum(raw) == doctest::Approx(oracle::lattice_sum_brute(4.0, 100)).epsilon(1e-13));
  CHECK_THROWS_AS(LatticeSumSpec(2.0, 10), DomainError);
  CHECK_THROWS_AS(LatticeSumSpec(4.0, 0), DomainError);
  CHECK(lattice_tail_upper(4.0, 100) >= lattice_sum(b) - lattice_sum(LatticeSumSpec(4.0, 100, TailMode::Raw)));
}
