#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vortexclt/diagnostics.hpp"
#include "vortexclt/ensemble.hpp"
#include "vortexclt/errors.hpp"
#include "vortexclt/gaussian.hpp"

using namespace vortexclt;

namespace {
constexpr double kPi = std::numbers::pi;

VortexConfig make_config(const EnsembleParams& p, std::vector<DomainPoint> pts) { return {p, std::move(pts)}; }
}  // namespace

TEST_CASE("signs and intensities") {
  CHECK(make_signs("alternating", 4) == std::vector<int>{1, -1, 1, -1});
  CHECK(make_signs("balanced", 4) == std::vector<int>{1, 1, -1, -1});
  CHECK(make_signs("+-+", 3) == std::vector<int>{1, -1, 1});
  CHECK_THROWS_AS(make_signs("+-", 3), std::invalid_argument);
  const EnsembleParams p(1.0, 1.0, Domain::Torus2, {1, 1, -1, -1});
  CHECK(p.intensities() == std::vector<double>{0.5, 0.5, -0.5, -0.5});
  const EnsembleParams q(0.0, 2.0, Domain::Torus2, make_signs("alternating", 100));
  double s2 = 0.0;
  for (double x : q.intensities()) s2 += x * x;
  CHECK(s2 == doctest::Approx(0.5));
  CHECK_THROWS_AS(EnsembleParams(1.0, 1.0, Domain::UnitDisk, {1, 1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleParams(1.0, 0.0, Domain::Torus2, {1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleParams(1.0, 1.0, Domain::Torus2, {1, 2}), std::invalid_argument);
}

TEST_CASE("validity windows") {
  const EnsembleParams ok(10.0, 1.0, Domain::Torus2, make_signs("alternating", 8));
  CHECK(ok.validity().ok);
  const EnsembleParams bad(30.0, 1.0, Domain::Torus2, make_signs("alternating", 8));
  CHECK_FALSE(bad.validity().ok);
  CHECK_THROWS_AS(bad.require_valid(), ValidityError);
  Rng rng(1);
  CHECK_THROWS_AS(sample_gibbs(bad, {10, 10, 1, true}, rng), ValidityError);
  const EnsembleParams disk(1.0, 1.0, Domain::UnitDisk, make_signs("alternating", 4));
  CHECK(disk.validity().max_beta_over_gamma == doctest::Approx(4 * kPi * 4 / 3.0));
}

TEST_CASE("Hamiltonian closed forms") {
  const EnsembleParams p(1.0, 1.0, Domain::Torus2, {1, -1});
  const auto a = DomainPoint::torus(0.1, 0.2);
  const auto b = DomainPoint::torus(0.45, 0.9);
  CHECK(hamiltonian(make_config(p, {a, b})) == doctest::Approx(-torus_green(a, b) / 2).epsilon(1e-9));
  CHECK(hamiltonian_split(make_config(p, {a, b}), default_split()) ==
        doctest::Approx(-torus_green(a, b) / 2).epsilon(1e-12));

  const EnsembleParams d(1.0, 1.0, Domain::UnitDisk, {1, -1});
  const auto x = DomainPoint::disk(0.6, 0.0);
  const auto y = DomainPoint::disk(-0.6, 0.0);
  CHECK(hamiltonian(make_config(d, {x, y})) ==
        doctest::Approx(-disk_green(x, y) / 2 + 2 * std::log(0.64) / (8 * kPi)).epsilon(1e-12));
}

TEST_CASE("sphere Hamiltonian against a triple loop") {
  const EnsembleParams p(1.0, 1.0, Domain::Sphere2, {1, -1, 1});
  Rng rng(4);
  const VortexConfig c = uniform_config(p, rng);
  double h = 0.0;
  const auto& xi = p.intensities();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const double r = norm(c.positions[i].coords() - c.positions[j].coords());
      h += 0.5 * xi[i] * xi[j] * (-std::log(r) / (2 * kPi) + (std::log(2.0) - 0.5) / (2 * kPi));
    }
  }
  CHECK(hamiltonian(c) == doctest::Approx(h).epsilon(1e-12));
}

TEST_CASE("Fourier-side Hamiltonian converges to the kernel one") {
  const EnsembleParams p(1.0, 1.0, Domain::Torus2, make_signs("alternating", 8));
  Rng rng(12);
  const VortexConfig c = uniform_config(p, rng);
  const double h = hamiltonian_split(c, default_split());
  const double gap64 = std::abs(hamiltonian_via_double_integral(c, 64) - h);
  const double gap256 = std::abs(hamiltonian_via_double_integral(c, 256) - h);
  CHECK(gap256 < gap64);
  CHECK(gap64 < 0.05);
  CHECK(hamiltonian_via_double_integral(c, 0) == 0.0);
  // Global sign flip leaves H unchanged.
  std::vector<int> flipped = p.signs();
  for (int& s : flipped) s = -s;
  const EnsembleParams q(1.0, 1.0, Domain::Torus2, flipped);
  CHECK(hamiltonian(VortexConfig{q, c.positions}) == doctest::Approx(hamiltonian(c)).epsilon(1e-14));
}

TEST_CASE("vorticity Fourier coefficients") {
  const EnsembleParams one(0.0, 1.0, Domain::Torus2, {1});
  const SpectralField w = vorticity_fourier(make_config(one, {DomainPoint::torus(0, 0)}), 3);
  CHECK(std::abs(w.torus_coeff(2, -1) - std::complex<double>(1, 0)) < 1e-14);
  const EnsembleParams two(0.0, 1.0, Domain::Torus2, {1, -1});
  const SpectralField v =
      vorticity_fourier(make_config(two, {DomainPoint::torus(0, 0), DomainPoint::torus(0.5, 0.5)}), 2);
  CHECK(std::abs(v.torus_coeff(1, 0) - std::complex<double>(2 / std::sqrt(2.0), 0)) < 1e-14);
}

TEST_CASE("uniform sampling gives the white-noise mode variance") {
  const EnsembleParams p(0.0, 1.0, Domain::Torus2, make_signs("alternating", 16));
  Rng rng(31);
  std::vector<double> m;
  std::vector<double> pairing;
  for (int s = 0; s < 100000; ++s) {
    const VortexConfig c = uniform_config(p, rng);
    m.push_back(std::norm(vorticity_fourier(c, 1).torus_coeff(1, 1)));
    double f = 0.0;
    for (int i = 0; i < p.n(); ++i) f += p.intensities()[i] * std::sqrt(2.0) * std::cos(2 * kPi * c.positions[i][0]);
    pairing.push_back(f * f);
  }
  const auto e = iid_mean(m);
  CHECK(std::abs(e.value - 1.0) < 3 * e.std_error);
  const auto v = iid_mean(pairing);
  CHECK(std::abs(v.value - 1.0) < 3 * v.std_error);
}

TEST_CASE("Metropolis chain") {
  const EnsembleParams p0(0.0, 1.0, Domain::Torus2, make_signs("alternating", 8));
  Rng rng(5);
  auto chain = make_chain(uniform_config(p0, rng), Rng(6), 0.2);
  double mean = 0.0;
  const int sweeps = 10000;
  for (int s = 0; s < sweeps; ++s) {
    mcmc_sweep(chain, p0);
    mean += chain.config.positions[0][0];
  }
  CHECK(chain.acceptance() == 1.0);
  // Successive sweeps are correlated; allow a factor for tau.
  CHECK(std::abs(mean / sweeps - 0.5) < 3 * 0.2887 * std::sqrt(10.0 / sweeps));

  const EnsembleParams p(2.0, 1.0, Domain::Torus2, make_signs("alternating", 16));
  SamplingOptions so{300, 300, 2, true};
  Rng r1(77), r2(77);
  const auto a = sample_gibbs(p, so, r1);
  const auto b = sample_gibbs(p, so, r2);
  CHECK(a.energies == b.energies);
  // Tuning aims at [0.2, 0.5] unless the step is already at its cap.
  CHECK(a.acceptance >= 0.15);
  CHECK((a.acceptance <= 0.55 || a.step_size == max_step(Domain::Torus2)));
  const EnsembleParams hot(20.0, 1.0, Domain::Torus2, make_signs("alternating", 16));
  const auto c = sample_gibbs(hot, so, r1);
  CHECK(c.acceptance >= 0.15);
  CHECK((c.acceptance <= 0.55 || c.step_size == max_step(Domain::Torus2)));
  for (std::size_t i = 0; i < a.samples.size(); i += 50) {
    CHECK(a.energies[i] == doctest::Approx(hamiltonian(a.samples[i])).epsilon(1e-10));
  }
  SamplingOptions none{0, 0, 1, true};
  CHECK(sample_gibbs(p, none, r1).samples.empty());
}

TEST_CASE("energy suppresses the lowest modes") {
  const EnsembleParams p(2.0, 1.0, Domain::Torus2, make_signs("alternating", 32));
  Rng rng(99);
  const auto g = sample_gibbs(p, {20000, 500, 1, true}, rng);
  std::vector<double> m;
  for (const auto& c : g.samples) m.push_back(std::norm(vorticity_fourier(c, 1).torus_coeff(1, 0)));
  const auto e = batch_means(m);
  const double lambda = 4 * kPi * kPi;
  CHECK(e.value < 1.0 - 3 * e.std_error);
  CHECK(std::abs(e.value - lambda / (2 + lambda)) < 5 * e.std_error + 0.02);
}

TEST_CASE("disk chain respects the geometry") {
  const EnsembleParams p(1.0, 1.0, Domain::UnitDisk, make_signs("alternating", 8));
  Rng rng(3);
  const auto g = sample_gibbs(p, {200, 200, 1, true}, rng);
  for (const auto& c : g.samples) {
    for (const auto& x : c.positions) CHECK(x[0] * x[0] + x[1] * x[1] < 1.0);
  }
  CHECK(g.energies.back() == doctest::Approx(hamiltonian(g.samples.back())).epsilon(1e-10));
}

TEST_CASE("minimal dipole pairing") {
  const EnsembleParams two(0.0, 1.0, Domain::Torus2, {1, -1});
  const auto single = minimal_dipole_pairing(make_config(two, {DomainPoint::torus(0.1, 0.1), DomainPoint::torus(0.15, 0.1)}));
  REQUIRE(single.pairs.size() == 1);
  CHECK(single.pairs[0] == std::pair<int, int>{0, 1});

  const EnsembleParams four(0.0, 1.0, Domain::Torus2, {1, 1, -1, -1});
  const auto dip = minimal_dipole_pairing(make_config(
      four, {DomainPoint::torus(0.1, 0.1), DomainPoint::torus(0.6, 0.6), DomainPoint::torus(0.62, 0.6),
             DomainPoint::torus(0.1, 0.13)}));
  REQUIRE(dip.pairs.size() == 2);
  std::vector<std::pair<int, int>> sorted = dip.pairs;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});

  const EnsembleParams p(0.0, 1.0, Domain::Torus2, make_signs("+++++---", 8));
  Rng rng(14);
  int violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const VortexConfig c = uniform_config(p, rng);
    const auto r = minimal_dipole_pairing(c);
    CHECK(r.pairs.size() == 3);
    CHECK(r.surplus.size() == 2);
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
      for (std::size_t j = i; j < r.pairs.size(); ++j) {
        const auto& yi = c.positions[r.pairs[i].first];
        const auto& zi = c.positions[r.pairs[i].second];
        const auto& yj = c.positions[r.pairs[j].first];
        const auto& zj = c.positions[r.pairs[j].second];
        const double dii = distance(yi, zi);
        if (dii > distance(yi, zj) + 1e-15 || dii > distance(yj, zi) + 1e-15) ++violations;
      }
    }
  }
  CHECK(violations == 0);
}
