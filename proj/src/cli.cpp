#include "vortexclt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "vortexclt/diagnostics.hpp"
#include "vortexclt/dynamics.hpp"
#include "vortexclt/ensemble.hpp"
#include "vortexclt/errors.hpp"
#include "vortexclt/gaussian.hpp"
#include "vortexclt/greens.hpp"
#include "vortexclt/version.hpp"

namespace vortexclt {

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

using Json = nlohmann::ordered_json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Moves `--config FILE` out of the argument list and splices the file's
// key = value pairs in front of the user's flags, so that flags win.
std::vector<std::string> expand_config(const std::vector<std::string>& in) {
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == "--config") {
      if (i + 1 >= in.size()) throw std::invalid_argument("--config requires a file name");
      path = in[++i];
    } else if (in[i].rfind("--config=", 0) == 0) {
      path = in[i].substr(9);
    } else {
      rest.push_back(in[i]);
    }
  }
  if (path.empty()) return rest;
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::vector<std::string> from_file;
  std::string line;
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    from_file.push_back("--" + key);
    from_file.push_back(trim(line.substr(eq + 1)));
  }
  // rest = [program, subcommand, flags...]
  std::vector<std::string> out;
  std::size_t insert_at = std::min<std::size_t>(2, rest.size());
  out.insert(out.end(), rest.begin(), rest.begin() + insert_at);
  out.insert(out.end(), from_file.begin(), from_file.end());
  out.insert(out.end(), rest.begin() + insert_at, rest.end());
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  std::ostream& summary() { return path_.empty() ? std::cerr : std::cout; }

 private:
  std::string path_;
  std::ofstream file_;
};

void csv_header(std::ostream& os, const RunConfig& rc) {
  os << "# vortexclt " << kVersion << "\n";
  for (const auto& [k, v] : rc.entries()) os << "# " << k << " = " << v << "\n";
}

Json config_json(const RunConfig& rc) {
  Json j;
  j["version"] = kVersion;
  for (const auto& [k, v] : rc.entries()) j[k] = v;
  return j;
}

EnsembleParams ensemble_from(const RunConfig& rc) {
  return EnsembleParams(rc.beta, rc.gamma, parse_domain(rc.domain), make_signs(rc.signs, rc.n_vortices));
}

std::uint64_t seed_of(const RunConfig& rc) {
  if (rc.seed < 0) throw std::invalid_argument("--seed is required and must be nonnegative");
  return static_cast<std::uint64_t>(rc.seed);
}

void write_coords(std::ostream& os, const DomainPoint& p) {
  os << num(p[0]) << "," << num(p[1]);
  if (p.dimension() == 3) os << "," << num(p[2]);
}

std::string coord_header(Domain d) { return d == Domain::Sphere2 ? "coord1,coord2,coord3" : "coord1,coord2"; }

int cmd_greens(const RunConfig& rc) {
  const Domain d = parse_domain(rc.domain);
  if (rc.grid < 2) throw std::invalid_argument("--grid must be >= 2");
  Output out(rc.output);
  std::ostream& os = out.stream();
  csv_header(os, rc);
  os << "domain,x,y,G,g_or_Wm,m\n";
  std::size_t rows = 0;
  if (d == Domain::Torus2) {
    const SplitPotential split(rc.m);
    const DomainPoint origin = DomainPoint::torus(0.0, 0.0);
    for (int i = 0; i < rc.grid; ++i) {
      for (int j = 0; j < rc.grid; ++j) {
        if (i == 0 && j == 0) continue;
        const DomainPoint p = DomainPoint::torus(static_cast<double>(i) / rc.grid, static_cast<double>(j) / rc.grid);
        os << "torus," << num(p[0]) << "," << num(p[1]) << "," << num(torus_green(origin, p, split)) << ","
           << num(torus_yukawa(origin, p, split)) << "," << num(rc.m) << "\n";
        ++rows;
      }
    }
  } else if (d == Domain::Sphere2) {
    const DomainPoint pole = DomainPoint::sphere(0.0, 0.0, 1.0);
    for (int i = 1; i <= rc.grid; ++i) {
      const double theta = std::numbers::pi * i / rc.grid;
      const DomainPoint p = DomainPoint::sphere_from({std::sin(theta), 0.0, std::cos(theta)});
      const double g = sphere_green(pole, p);
      os << "sphere," << num(theta) << ",0," << num(g) << ","
         << num(g + std::log(distance(pole, p)) / (2.0 * std::numbers::pi)) << ",\n";
      ++rows;
    }
  } else {
    double sx = 0.0;
    double sy = 0.0;
    char comma = 0;
    std::istringstream src(rc.source);
    if (!(src >> sx >> comma >> sy) || comma != ',') throw std::invalid_argument("--source must look like x,y");
    const DomainPoint source = DomainPoint::disk(sx, sy);
    for (int i = 0; i < rc.grid; ++i) {
      for (int j = 0; j < rc.grid; ++j) {
        const double x = -1.0 + (2.0 * i + 1.0) / rc.grid;
        const double y = -1.0 + (2.0 * j + 1.0) / rc.grid;
        if (x * x + y * y >= 1.0 || (x == sx && y == sy)) continue;
        const DomainPoint p = DomainPoint::disk(x, y);
        os << "disk," << num(x) << "," << num(y) << "," << num(disk_green(source, p)) << ","
           << num(disk_g(source, p)) << ",\n";
        ++rows;
      }
    }
  }
  out.summary() << "greens: wrote " << rows << " rows for the " << rc.domain << "\n";
  return 0;
}

int cmd_sample_gibbs(const RunConfig& rc) {
  const EnsembleParams params = ensemble_from(rc);
  const std::uint64_t seed = seed_of(rc);
  if (rc.chains < 1) throw std::invalid_argument("--chains must be >= 1");
  if (rc.n_samples < 0 || rc.burn_in < 0 || rc.thinning < 1) {
    throw std::invalid_argument("samples and burn-in must be >= 0, thinning >= 1");
  }
  params.require_valid();
  SamplingOptions so;
  so.n_samples = static_cast<std::size_t>(rc.n_samples);
  so.burn_in = static_cast<std::size_t>(rc.burn_in);
  so.thinning = static_cast<std::size_t>(rc.thinning);
  std::vector<GibbsSamples> runs;
  for (int c = 0; c < rc.chains; ++c) {
    Rng rng = stream_for(seed, static_cast<std::uint64_t>(c));
    runs.push_back(sample_gibbs(params, so, rng));
  }
  Output out(rc.output);
  std::ostream& os = out.stream();
  csv_header(os, rc);
  os << "sample_id,vortex_id,sign," << coord_header(params.domain()) << ",hamiltonian\n";
  std::size_t id = 0;
  double acc = 0.0;
  double mean_h = 0.0;
  std::size_t count = 0;
  for (const auto& run : runs) {
    acc += run.acceptance;
    for (std::size_t s = 0; s < run.samples.size(); ++s, ++id) {
      const auto& cfg = run.samples[s];
      mean_h += run.energies[s];
      ++count;
      for (int i = 0; i < params.n(); ++i) {
        os << id << "," << i << "," << params.signs()[i] << ",";
        write_coords(os, cfg.positions[i]);
        os << "," << num(run.energies[s]) << "\n";
      }
    }
  }
  out.summary() << "sample-gibbs: " << count << " samples from " << rc.chains << " chain(s), mean H "
                << num(count ? mean_h / count : 0.0) << ", acceptance " << num(acc / rc.chains) << "\n";
  return 0;
}

int cmd_sample_gaussian(const RunConfig& rc) {
  const GaussianParams gp(rc.beta, rc.gamma, parse_domain(rc.domain), rc.cutoff);
  Rng rng = stream_for(seed_of(rc), 0);
  const SpectralField f = sample_field(gp, rng);
  Output out(rc.output);
  std::ostream& os = out.stream();
  csv_header(os, rc);
  if (gp.domain == Domain::Torus2) {
    os << "k1,k2,re,im\n";
    for (int k1 = -rc.cutoff; k1 <= rc.cutoff; ++k1) {
      for (int k2 = -rc.cutoff; k2 <= rc.cutoff; ++k2) {
        if (k1 == 0 && k2 == 0) continue;
        const auto c = f.torus_coeff(k1, k2);
        os << k1 << "," << k2 << "," << num(c.real()) << "," << num(c.imag()) << "\n";
      }
    }
  } else {
    os << "l,m,coeff\n";
    for (int l = 1; l <= rc.cutoff; ++l) {
      for (int m = -l; m <= l; ++m) os << l << "," << m << "," << num(f.sphere_coeff(l, m)) << "\n";
    }
  }
  out.summary() << "sample-gaussian: renormalized energy " << num(renormalized_energy(f, rc.gamma)) << "\n";
  return 0;
}

Json estimate_json(const EstimateWithError& e) {
  return Json{{"value", e.value}, {"stderr", e.std_error}, {"n_eff", e.n_eff}, {"method", method_name(e.method)}};
}

int cmd_estimate_z(const RunConfig& rc) {
  const EnsembleParams params = ensemble_from(rc);
  Rng rng = stream_for(seed_of(rc), 0);
  if (rc.n_samples < 2) throw std::invalid_argument("--samples must be >= 2");
  const ZEstimateReport r = estimate_z_vortex_report(params, static_cast<std::size_t>(rc.n_samples), rng);
  Json j;
  j["run_config"] = config_json(rc);
  Json res = estimate_json(r.plain);
  res["control_variate"] = estimate_json(r.control_variate);
  res["kurtosis"] = r.kurtosis;
  res["heavy_tail_warning"] = r.heavy_tail;
  j["result"] = res;
  Output out(rc.output);
  out.stream() << j.dump(2) << "\n";
  out.summary() << "estimate-z: Z = " << num(r.plain.value) << " +- " << num(r.plain.std_error) << " ("
                << rc.n_samples << " samples)\n";
  return 0;
}

int cmd_verify_clt(const RunConfig& rc) {
  const EnsembleParams params = ensemble_from(rc);
  if (params.domain() != Domain::Torus2) throw UnsupportedDomain("verify-clt runs on the torus");
  const std::uint64_t seed = seed_of(rc);
  if (rc.n_samples < 100) throw std::invalid_argument("--samples must be >= 100");
  params.require_valid();
  Rng rng = stream_for(seed, 0);
  SamplingOptions so;
  so.n_samples = static_cast<std::size_t>(rc.n_samples);
  so.burn_in = static_cast<std::size_t>(rc.burn_in);
  so.thinning = static_cast<std::size_t>(rc.thinning);
  const GibbsSamples gibbs = sample_gibbs(params, so, rng);
  CltReport report = mode_covariance_test(gibbs.samples, params, rc.cutoff);
  report.test = "clt";

  // Characteristic functional at f = sqrt2 cos(2 pi k.x).
  const GaussianParams gp(params.beta(), params.gamma(), Domain::Torus2, std::max(rc.cutoff, 1));
  for (const auto& [k1, k2] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}}) {
    std::vector<double> vals;
    vals.reserve(gibbs.samples.size());
    for (const auto& cfg : gibbs.samples) {
      double pair = 0.0;
      for (int i = 0; i < params.n(); ++i) {
        const Vec3& c = cfg.positions[i].coords();
        pair += params.intensities()[i] * std::numbers::sqrt2 *
                std::cos(2.0 * std::numbers::pi * (k1 * c.x + k2 * c.y));
      }
      vals.push_back(std::cos(pair));
    }
    const EstimateWithError e = vals.size() >= 1000 ? batch_means(vals) : iid_mean(vals);
    const double v = mode_variance(params.beta(), params.gamma(), SpectralField::torus_eigenvalue(k1, k2));
    const double target = std::exp(-0.5 * v);
    report.rows.push_back({"E cos<w,f(" + std::to_string(k1) + "," + std::to_string(k2) + ")>", e.value, target,
                           e.std_error, 4.0, std::abs(e.value - target) <= 4.0 * e.std_error});
  }

  std::vector<double> energies;
  const GaussianParams white(params.beta(), params.gamma(), Domain::Torus2, rc.gaussian_cutoff);
  for (std::size_t s = 0; s < gibbs.samples.size(); ++s) {
    energies.push_back(renormalized_energy(sample_field(white, rng), params.gamma()));
  }
  const LawTest law = hamiltonian_law_test(gibbs.energies, energies);
  report.rows.push_back({"KS(H, :E:)", law.ks.distance, 0.0, 0.0, law.tolerance, law.pass});

  if (rc.z_samples > 0) {
    const EstimateWithError z = estimate_z_vortex(params, static_cast<std::size_t>(rc.z_samples), rng);
    const TruncatedValue zg = gaussian_partition_function(params.beta(), params.gamma(), 64);
    report.rows.push_back({"Z_N", z.value, zg.value, z.std_error, 3.0,
                           std::abs(z.value - zg.value) <= 3.0 * z.std_error + zg.tail_bound});
  }

  Json j = Json::parse(report.to_json());
  j["run_config"] = config_json(rc);
  j["acceptance"] = gibbs.acceptance;
  j["tau_h"] = std::isnan(gibbs.tau_h) ? Json(nullptr) : Json(gibbs.tau_h);
  Output out(rc.output);
  out.stream() << j.dump(2) << "\n";
  const auto passed = std::count_if(report.rows.begin(), report.rows.end(), [](const CltRow& r) { return r.pass; });
  out.summary() << "verify-clt: " << passed << "/" << report.rows.size() << " rows within tolerance\n";
  return 0;
}

int cmd_dynamics(const RunConfig& rc) {
  RunConfig fixed = rc;
  fixed.beta = 0.0;
  const EnsembleParams params = ensemble_from(fixed);
  if (params.domain() == Domain::UnitDisk) throw UnsupportedDomain("dynamics run on the torus or the sphere");
  const TrajectoryConfig tc(rc.dt, rc.steps, rc.record_every);
  Rng rng = stream_for(seed_of(rc), 0);
  const VortexConfig start = uniform_config(params, rng);
  const SplitPotential split(rc.m);
  const std::vector<Snapshot> traj = integrate(start, tc, split);
  Output out(rc.output);
  std::ostream& os = out.stream();
  csv_header(os, rc);
  os << "t,vortex_id," << coord_header(params.domain()) << ",hamiltonian\n";
  for (const Snapshot& s : traj) {
    for (int i = 0; i < params.n(); ++i) {
      os << num(s.t) << "," << i << ",";
      write_coords(os, s.config.positions[i]);
      os << "," << num(s.hamiltonian) << "\n";
    }
  }
  const double h0 = traj.front().hamiltonian;
  const double h1 = traj.back().hamiltonian;
  out.summary() << "dynamics: " << traj.size() << " snapshots, relative energy drift "
                << num(h0 != 0.0 ? std::abs(h1 - h0) / std::abs(h0) : std::abs(h1 - h0)) << "\n";
  return 0;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  std::vector<std::pair<std::string, std::string>> e;
  e.emplace_back("command", command);
  const bool ensemble = command == "sample-gibbs" || command == "estimate-z" || command == "verify-clt" ||
                        command == "dynamics";
  e.emplace_back("domain", domain);
  if (command != "greens" && command != "dynamics") e.emplace_back("beta", num(beta));
  if (command != "greens") e.emplace_back("gamma", num(gamma));
  if (ensemble) {
    e.emplace_back("n", std::to_string(n_vortices));
    e.emplace_back("signs", signs);
  }
  if (command == "sample-gibbs" || command == "estimate-z" || command == "verify-clt") {
    e.emplace_back("samples", std::to_string(n_samples));
  }
  if (command == "sample-gibbs" || command == "verify-clt") {
    e.emplace_back("burn-in", std::to_string(burn_in));
    e.emplace_back("thinning", std::to_string(thinning));
  }
  if (command == "sample-gibbs") e.emplace_back("chains", std::to_string(chains));
  if (command == "sample-gaussian" || command == "verify-clt") e.emplace_back("cutoff", std::to_string(cutoff));
  if (command == "verify-clt") {
    e.emplace_back("gaussian-cutoff", std::to_string(gaussian_cutoff));
    e.emplace_back("z-samples", std::to_string(z_samples));
  }
  if (command == "greens" || command == "dynamics") e.emplace_back("m", num(m));
  if (command == "greens") {
    e.emplace_back("grid", std::to_string(grid));
    if (domain == "disk") e.emplace_back("source", source);
  }
  if (command == "dynamics") {
    e.emplace_back("dt", num(dt));
    e.emplace_back("steps", std::to_string(steps));
    e.emplace_back("record-every", std::to_string(record_every));
  }
  if (command != "greens") e.emplace_back("seed", std::to_string(seed));
  e.emplace_back("format", format);
  e.emplace_back("output", output.empty() ? "-" : output);
  return e;
}

int run(const std::vector<std::string>& args_in) {
  RunConfig rc;
  CLI::App app{"Gibbs ensembles of point vortices and their Gaussian limits"};
  app.name(args_in.empty() ? "vortexclt" : args_in.front());
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.set_version_flag("--version", std::string("vortexclt ") + kVersion);
  app.require_subcommand(1);
  app.footer("Options may also be read from --config FILE (key = value lines); flags override the file.");

  const auto domain_check = CLI::IsMember({"torus", "sphere", "disk"});
  auto common = [&](CLI::App* sub, const std::string& default_format, std::vector<std::string> formats) {
    rc.format = default_format;
    sub->add_option("--domain", rc.domain, "torus, sphere or disk")->check(domain_check)->capture_default_str();
    sub->add_option("--output,-o", rc.output, "output path (stdout when omitted)");
    sub->add_option("--format", rc.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
  };
  auto physics = [&](CLI::App* sub) {
    sub->add_option("--beta", rc.beta, "inverse temperature")->capture_default_str();
    sub->add_option("--gamma", rc.gamma, "enstrophy scale gamma")->capture_default_str();
  };
  auto ensemble = [&](CLI::App* sub) {
    sub->add_option("--n", rc.n_vortices, "number of vortices")->capture_default_str();
    sub->add_option("--signs", rc.signs, "alternating, balanced or a +/- string")->capture_default_str();
  };
  auto seed = [&](CLI::App* sub) {
    sub->add_option("--seed", rc.seed, "master random seed")->required()->check(CLI::NonNegativeNumber);
  };

  CLI::App* greens = app.add_subcommand("greens", "tabulate Green functions as CSV");
  common(greens, "csv", {"csv"});
  greens->add_option("--grid", rc.grid, "grid points per axis")->capture_default_str();
  greens->add_option("--m", rc.m, "Yukawa mass of the torus split")->capture_default_str();
  greens->add_option("--source", rc.source, "disk source point x,y")->capture_default_str();

  CLI::App* gibbs = app.add_subcommand("sample-gibbs", "sample the canonical Gibbs ensemble");
  common(gibbs, "csv", {"csv"});
  physics(gibbs);
  ensemble(gibbs);
  seed(gibbs);
  gibbs->add_option("--samples", rc.n_samples, "retained samples per chain")->capture_default_str();
  gibbs->add_option("--burn-in", rc.burn_in, "burn-in sweeps")->capture_default_str();
  gibbs->add_option("--thinning", rc.thinning, "sweeps between retained samples")->capture_default_str();
  gibbs->add_option("--chains", rc.chains, "independent chains with split seeds")->capture_default_str();

  CLI::App* gauss = app.add_subcommand("sample-gaussian", "sample the energy-enstrophy Gaussian field");
  common(gauss, "csv", {"csv"});
  physics(gauss);
  seed(gauss);
  gauss->add_option("--cutoff", rc.cutoff, "spectral cutoff")->capture_default_str();

  CLI::App* estz = app.add_subcommand("estimate-z", "Monte Carlo partition function");
  common(estz, "json", {"json"});
  physics(estz);
  ensemble(estz);
  seed(estz);
  estz->add_option("--samples", rc.n_samples, "uniform configurations")->capture_default_str();

  CLI::App* clt = app.add_subcommand("verify-clt", "central limit diagnostics on the torus");
  common(clt, "json", {"json"});
  physics(clt);
  ensemble(clt);
  seed(clt);
  clt->add_option("--samples", rc.n_samples, "retained Gibbs samples")->capture_default_str();
  clt->add_option("--burn-in", rc.burn_in, "burn-in sweeps")->capture_default_str();
  clt->add_option("--thinning", rc.thinning, "sweeps between retained samples")->capture_default_str();
  clt->add_option("--cutoff", rc.cutoff, "largest |k|_inf in the mode table")->capture_default_str();
  clt->add_option("--gaussian-cutoff", rc.gaussian_cutoff, "cutoff of the :E: samples")->capture_default_str();
  clt->add_option("--z-samples", rc.z_samples, "uniform samples for the Z_N row (0 skips it)")
      ->capture_default_str();

  CLI::App* dyn = app.add_subcommand("dynamics", "integrate point-vortex dynamics");
  common(dyn, "csv", {"csv"});
  ensemble(dyn);
  seed(dyn);
  dyn->add_option("--gamma", rc.gamma, "enstrophy scale gamma")->capture_default_str();
  dyn->add_option("--dt", rc.dt, "time step")->capture_default_str();
  dyn->add_option("--steps", rc.steps, "number of steps")->capture_default_str();
  dyn->add_option("--record-every", rc.record_every, "steps between snapshots")->capture_default_str();
  dyn->add_option("--m", rc.m, "Yukawa mass of the torus split")->capture_default_str();

  try {
    const std::vector<std::string> args = expand_config(args_in);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    // Formats default per subcommand; resolve before parsing.
    for (CLI::App* sub : {greens, gibbs, gauss, estz, clt, dyn}) {
      if (std::find(args.begin(), args.end(), sub->get_name()) != args.end()) {
        rc.format = (sub == estz || sub == clt) ? "json" : "csv";
        break;
      }
    }
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (greens->parsed()) {
      rc.command = "greens";
      return cmd_greens(rc);
    }
    if (gibbs->parsed()) {
      rc.command = "sample-gibbs";
      return cmd_sample_gibbs(rc);
    }
    if (gauss->parsed()) {
      rc.command = "sample-gaussian";
      return cmd_sample_gaussian(rc);
    }
    if (estz->parsed()) {
      rc.command = "estimate-z";
      return cmd_estimate_z(rc);
    }
    if (clt->parsed()) {
      rc.command = "verify-clt";
      return cmd_verify_clt(rc);
    }
    if (dyn->parsed()) {
      rc.command = "dynamics";
      return cmd_dynamics(rc);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitValidation;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args);
}

}  // namespace vortexclt
