#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vortexclt/cli.hpp"
#include "vortexclt/diagnostics.hpp"
#include "vortexclt/ensemble.hpp"
#include "vortexclt/gaussian.hpp"
#include "vortexclt/greens.hpp"
#include "vortexclt/specfun.hpp"
#include "vortexclt/version.hpp"

namespace py = pybind11;
using namespace vortexclt;

namespace {

EnsembleParams ensemble(const std::string& domain, double beta, double gamma, int n, const std::string& signs) {
  return EnsembleParams(beta, gamma, parse_domain(domain), make_signs(signs, n));
}

py::dict estimate_dict(const EstimateWithError& e) {
  py::dict d;
  d["value"] = e.value;
  d["stderr"] = e.std_error;
  d["n_eff"] = e.n_eff;
  d["method"] = method_name(e.method);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Point-vortex Gibbs ensembles and their Gaussian limits";
  m.attr("__version__") = kVersion;

  m.def("bessel_k0", &bessel_k0, py::arg("r"));
  m.def("bessel_k1", &bessel_k1, py::arg("r"));
  m.def("bessel_jn", &bessel_jn, py::arg("n"), py::arg("r"));
  m.def("bessel_j_zeros", &bessel_j_zeros, py::arg("n"), py::arg("count"));
  m.def(
      "lattice_sum",
      [](double exponent, int cutoff) { return lattice_sum(LatticeSumSpec(exponent, cutoff)); },
      py::arg("exponent"), py::arg("cutoff"));

  m.def(
      "torus_green",
      [](std::pair<double, double> x, std::pair<double, double> y) {
        return torus_green(DomainPoint::torus(x.first, x.second), DomainPoint::torus(y.first, y.second));
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "sphere_green",
      [](std::array<double, 3> x, std::array<double, 3> y) {
        return sphere_green(DomainPoint::sphere(x[0], x[1], x[2]), DomainPoint::sphere(y[0], y[1], y[2]));
      },
      py::arg("x"), py::arg("y"));
  m.def(
      "disk_green",
      [](std::pair<double, double> x, std::pair<double, double> y) {
        return disk_green(DomainPoint::disk(x.first, x.second), DomainPoint::disk(y.first, y.second));
      },
      py::arg("x"), py::arg("y"));
  m.def("disk_gbar", &disk_gbar, py::arg("radial_nodes") = 1000);

  m.def(
      "gaussian_partition_function",
      [](double beta, double gamma, int cutoff) {
        const TruncatedValue v = gaussian_partition_function(beta, gamma, cutoff);
        return std::make_pair(v.value, v.tail_bound);
      },
      py::arg("beta"), py::arg("gamma"), py::arg("cutoff"));

  m.def(
      "estimate_z",
      [](const std::string& domain, double beta, double gamma, int n, const std::string& signs, std::size_t samples,
         std::uint64_t seed) {
        const EnsembleParams p = ensemble(domain, beta, gamma, n, signs);
        Rng rng = stream_for(seed, 0);
        ZEstimateReport r;
        {
          py::gil_scoped_release release;
          r = estimate_z_vortex_report(p, samples, rng);
        }
        py::dict d = estimate_dict(r.plain);
        d["control_variate"] = estimate_dict(r.control_variate);
        d["kurtosis"] = r.kurtosis;
        d["heavy_tail_warning"] = r.heavy_tail;
        return d;
      },
      py::arg("domain"), py::arg("beta"), py::arg("gamma"), py::arg("n"), py::arg("signs") = "alternating",
      py::arg("samples") = 10000, py::arg("seed") = 0);

  m.def(
      "sample_gibbs",
      [](const std::string& domain, double beta, double gamma, int n, const std::string& signs, std::size_t samples,
         std::size_t burn_in, std::size_t thinning, std::uint64_t seed) {
        const EnsembleParams p = ensemble(domain, beta, gamma, n, signs);
        Rng rng = stream_for(seed, 0);
        GibbsSamples g;
        {
          py::gil_scoped_release release;
          g = sample_gibbs(p, SamplingOptions{samples, burn_in, thinning, true}, rng);
        }
        std::vector<std::vector<std::vector<double>>> positions;
        positions.reserve(g.samples.size());
        for (const auto& c : g.samples) {
          std::vector<std::vector<double>> row;
          for (const auto& x : c.positions) {
            std::vector<double> v{x[0], x[1]};
            if (x.dimension() == 3) v.push_back(x[2]);
            row.push_back(std::move(v));
          }
          positions.push_back(std::move(row));
        }
        py::dict d;
        d["positions"] = positions;
        d["energies"] = g.energies;
        d["acceptance"] = g.acceptance;
        d["step_size"] = g.step_size;
        d["signs"] = p.signs();
        return d;
      },
      py::arg("domain"), py::arg("beta"), py::arg("gamma"), py::arg("n"), py::arg("signs") = "alternating",
      py::arg("samples") = 100, py::arg("burn_in") = 100, py::arg("thinning") = 1, py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "vortexclt");
        return run(args);
      },
      py::arg("args"), "Runs a CLI command in-process and returns its exit code.");
}
