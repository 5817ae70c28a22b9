#include "vortexclt/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "vortexclt/errors.hpp"

namespace vortexclt {

namespace {

constexpr double kPi = std::numbers::pi;

struct Moments {
  double mean = 0.0;
  double var = 0.0;
  double m4 = 0.0;
};

Moments moments(const std::vector<double>& xs) {
  Moments m;
  if (xs.empty()) return m;
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  double s2 = 0.0;
  double s4 = 0.0;
  for (double x : xs) {
    const double d = (x - m.mean) * (x - m.mean);
    s2 += d;
    s4 += d * d;
  }
  if (xs.size() > 1) m.var = s2 / (xs.size() - 1);
  m.m4 = s4 / xs.size();
  return m;
}

}  // namespace

std::string method_name(EstimateMethod m) {
  switch (m) {
    case EstimateMethod::Iid: return "iid";
    case EstimateMethod::BatchMeans: return "batch-means";
    case EstimateMethod::ControlVariate: return "control-variate";
  }
  return "unknown";
}

EstimateWithError iid_mean(const std::vector<double>& xs) {
  if (xs.empty()) throw InsufficientData("mean of an empty sample");
  const Moments m = moments(xs);
  const double n = static_cast<double>(xs.size());
  return {m.mean, std::sqrt(m.var / n), n, EstimateMethod::Iid};
}

EstimateWithError batch_means(const std::vector<double>& xs, std::size_t n_batches) {
  if (n_batches < 2) throw std::invalid_argument("batch means needs at least two batches");
  if (xs.size() < 2 * n_batches) throw InsufficientData("too few samples for batch means");
  const std::size_t b = xs.size() / n_batches;
  const std::size_t offset = xs.size() - b * n_batches;
  std::vector<double> means(n_batches, 0.0);
  for (std::size_t i = 0; i < n_batches; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < b; ++j) acc += xs[offset + i * b + j];
    means[i] = acc / b;
  }
  const Moments bm = moments(means);
  const Moments all = moments(xs);
  const double se = std::sqrt(bm.var / n_batches);
  const double n = static_cast<double>(xs.size());
  double n_eff = n;
  if (se > 0.0) n_eff = std::min(n, all.var / (se * se));
  return {std::accumulate(xs.begin(), xs.end(), 0.0) / n, se, n_eff, EstimateMethod::BatchMeans};
}

double autocorrelation_time(const std::vector<double>& series) {
  const std::size_t n = series.size();
  if (n < 1000) throw InsufficientData("autocorrelation time needs at least 1000 points");
  const Moments m = moments(series);
  if (!(m.var > 0.0)) throw InsufficientData("series has zero variance");
  std::vector<double> c(series);
  for (double& x : c) x -= m.mean;
  double c0 = 0.0;
  for (double x : c) c0 += x * x;
  c0 /= n;
  double tau = 0.5;
  for (std::size_t t = 1; t < n / 2; ++t) {
    double acc = 0.0;
    for (std::size_t i = 0; i + t < n; ++i) acc += c[i] * c[i + t];
    tau += acc / n / c0;
    if (static_cast<double>(t) >= 5.0 * tau) break;
  }
  return std::max(tau, 0.5 / n);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.size() < 100 || b.size() < 100) throw InsufficientData("KS test needs at least 100 samples per side");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  const double ne = na * nb / (na + nb);
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  double q = 0.0;
  if (lambda < 1e-3) {
    q = 1.0;
  } else {
    double sign = 1.0;
    for (int k = 1; k <= 200; ++k) {
      const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
      q += term;
      if (std::abs(term) < 1e-16) break;
      sign = -sign;
    }
    q = std::clamp(2.0 * q, 0.0, 1.0);
  }
  return {d, q};
}

ZEstimateReport estimate_z_vortex_report(const EnsembleParams& params, std::size_t n_samples, Rng& rng) {
  params.require_valid();
  if (n_samples < 2) throw InsufficientData("need at least two samples");
  ZEstimateReport r;
  const double n = static_cast<double>(n_samples);
  const double beta = params.beta();
  if (beta == 0.0) {
    r.plain = {1.0, 0.0, n, EstimateMethod::Iid};
    r.control_variate = {1.0, 0.0, n, EstimateMethod::ControlVariate};
    return r;
  }
  const InteractionKernel kernel(params.domain());
  const double mu = uniform_mean_hamiltonian(params);
  const double slope = beta * std::exp(-beta * mu);
  std::vector<double> weights(n_samples);
  std::vector<double> cv(n_samples);
  VortexConfig config = uniform_config(params, rng);
  for (std::size_t s = 0; s < n_samples; ++s) {
    for (auto& p : config.positions) p = sample_uniform(params.domain(), rng);
    const double h = hamiltonian(config, kernel);
    weights[s] = std::exp(-beta * h);
    cv[s] = weights[s] + slope * (h - mu);
  }
  r.plain = iid_mean(weights);
  r.control_variate = iid_mean(cv);
  r.control_variate.method = EstimateMethod::ControlVariate;
  const Moments m = moments(weights);
  r.kurtosis = m.var > 0.0 ? m.m4 / (m.var * m.var) : 0.0;
  r.heavy_tail = r.kurtosis > 100.0;
  return r;
}

EstimateWithError estimate_z_vortex(const EnsembleParams& params, std::size_t n_samples, Rng& rng) {
  return estimate_z_vortex_report(params, n_samples, rng).plain;
}

ZEstimateReport estimate_z_yukawa(const EnsembleParams& params, const TorusYukawaTable& kernel,
                                  std::size_t n_samples, Rng& rng) {
  if (params.domain() != Domain::Torus2) throw UnsupportedDomain("Yukawa partition function is torus-only");
  params.require_valid();
  if (n_samples < 2) throw InsufficientData("need at least two samples");
  const double beta = params.beta();
  std::vector<double> weights(n_samples);
  std::vector<double> cv(n_samples);
  VortexConfig config = uniform_config(params, rng);
  for (std::size_t s = 0; s < n_samples; ++s) {
    for (auto& p : config.positions) p = sample_uniform(Domain::Torus2, rng);
    const double h = hamiltonian_yukawa(config, kernel);
    weights[s] = std::exp(-beta * h);
    cv[s] = weights[s] + beta * h;
  }
  ZEstimateReport r;
  r.plain = iid_mean(weights);
  r.control_variate = iid_mean(cv);
  r.control_variate.method = EstimateMethod::ControlVariate;
  const Moments m = moments(weights);
  r.kurtosis = m.var > 0.0 ? m.m4 / (m.var * m.var) : 0.0;
  r.heavy_tail = r.kurtosis > 100.0;
  return r;
}

bool CltReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CltRow& r) { return r.pass; });
}

std::string CltReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["test"] = test;
  j["params"] = {{"beta", beta}, {"gamma", gamma}, {"N", n}, {"domain", domain}};
  j["rows"] = nlohmann::ordered_json::array();
  for (const CltRow& r : rows) {
    j["rows"].push_back({{"name", r.name},
                         {"empirical", r.empirical},
                         {"target", r.target},
                         {"stderr", r.std_error},
                         {"tol", r.tol},
                         {"pass", r.pass}});
  }
  j["pass"] = all_pass();
  return j.dump(indent);
}

CltReport mode_covariance_test(const std::vector<VortexConfig>& samples, const EnsembleParams& params, int cutoff,
                               double tol_se) {
  if (params.domain() != Domain::Torus2) throw UnsupportedDomain("mode covariance test is torus-only");
  if (samples.size() < 100) throw InsufficientData("mode covariance test needs at least 100 samples");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");
  CltReport report;
  report.test = "mode_covariance";
  report.beta = params.beta();
  report.gamma = params.gamma();
  report.n = params.n();
  report.domain = std::string(domain_name(params.domain()));
  std::vector<SpectralField> fields;
  fields.reserve(samples.size());
  for (const auto& s : samples) fields.push_back(vorticity_fourier(s, cutoff));
  const auto estimate = [&](const std::vector<double>& xs) {
    return xs.size() >= 1000 ? batch_means(xs) : iid_mean(xs);
  };
  std::vector<double> sq(samples.size());
  std::vector<double> re(samples.size());
  std::vector<double> im(samples.size());
  for_each_half_mode(cutoff, [&](int k1, int k2) {
    for (std::size_t s = 0; s < fields.size(); ++s) {
      const std::complex<double> w = fields[s].torus_coeff(k1, k2);
      sq[s] = std::norm(w);
      re[s] = w.real();
      im[s] = w.imag();
    }
    const std::string tag = "(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
    const double target = mode_variance(params.beta(), params.gamma(), SpectralField::torus_eigenvalue(k1, k2));
    const EstimateWithError e2 = estimate(sq);
    report.rows.push_back({"E|w" + tag + "|^2", e2.value, target, e2.std_error, tol_se,
                           std::abs(e2.value - target) <= tol_se * e2.std_error});
    const EstimateWithError er = estimate(re);
    report.rows.push_back({"E Re w" + tag, er.value, 0.0, er.std_error, tol_se,
                           std::abs(er.value) <= tol_se * er.std_error});
    const EstimateWithError ei = estimate(im);
    report.rows.push_back({"E Im w" + tag, ei.value, 0.0, ei.std_error, tol_se,
                           std::abs(ei.value) <= tol_se * ei.std_error});
  });
  return report;
}

LawTest hamiltonian_law_test(const std::vector<double>& vortex_h, const std::vector<double>& gaussian_e, double shift,
                             double tolerance) {
  std::vector<double> shifted(vortex_h);
  for (double& h : shifted) h -= shift;
  LawTest t;
  t.ks = ks_two_sample(std::move(shifted), gaussian_e);
  t.tolerance = tolerance;
  t.pass = t.ks.distance <= tolerance;
  return t;
}

std::vector<LaplaceRow> laplace_transform_test(const EnsembleParams& params, const std::vector<double>& alphas,
                                               const LaplaceOptions& options, Rng& rng) {
  params.require_valid();
  const double beta = params.beta();
  SamplingOptions so;
  so.n_samples = options.gibbs_samples;
  so.burn_in = options.burn_in;
  so.thinning = options.thinning;
  const GibbsSamples chain = sample_gibbs(params, so, rng);
  const EstimateWithError z_beta = estimate_z_vortex(params, options.z_samples, rng);
  std::vector<LaplaceRow> rows;
  for (double alpha : alphas) {
    LaplaceRow row;
    row.alpha = alpha;
    const double b = beta - alpha;
    if (b < 0.0 || !params.with_beta(std::max(b, 0.0)).validity().ok) {
      row.refused = true;
      rows.push_back(row);
      continue;
    }
    std::vector<double> e(chain.energies.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::exp(alpha * chain.energies[i]);
    row.lhs = e.size() >= 100 ? batch_means(e) : iid_mean(e);
    if (alpha == 0.0) {
      row.rhs = {1.0, 0.0, static_cast<double>(options.z_samples), EstimateMethod::Iid};
    } else {
      const EstimateWithError z_b = estimate_z_vortex(params.with_beta(b), options.z_samples, rng);
      const double ratio = z_b.value / z_beta.value;
      const double rel = std::hypot(z_b.std_error / z_b.value, z_beta.std_error / z_beta.value);
      row.rhs = {ratio, ratio * rel, std::min(z_b.n_eff, z_beta.n_eff), EstimateMethod::Iid};
    }
    const double combined = std::hypot(row.lhs.std_error, row.rhs.std_error);
    row.pass = std::abs(row.lhs.value - row.rhs.value) <= options.tol_se * combined;
    rows.push_back(row);
  }
  return rows;
}

void TrigPolynomial::add(int k1, int k2, std::complex<double> c) {
  if (k1 == 0 && k2 == 0) throw std::invalid_argument("trig polynomial must have zero mean");
  if (k1 < 0 || (k1 == 0 && k2 < 0)) {
    k1 = -k1;
    k2 = -k2;
    c = std::conj(c);
  }
  for (auto& [k, v] : terms_) {
    if (k.first == k1 && k.second == k2) {
      v += c;
      return;
    }
  }
  terms_.push_back({{k1, k2}, c});
}

double TrigPolynomial::operator()(double x, double y) const {
  double total = 0.0;
  for (const auto& [k, c] : terms_) {
    const double phase = 2.0 * kPi * (k.first * x + k.second * y);
    total += 2.0 * (c.real() * std::cos(phase) - c.imag() * std::sin(phase));
  }
  return total;
}

double TrigPolynomial::l2_squared() const {
  double total = 0.0;
  for (const auto& term : terms_) total += 2.0 * std::norm(term.second);
  return total;
}

int TrigPolynomial::degree() const {
  int d = 0;
  for (const auto& term : terms_) d = std::max({d, std::abs(term.first.first), std::abs(term.first.second)});
  return d;
}

InequalityCheck exp_integral_inequality_check(const TrigPolynomial& f, int grid) {
  const int m = grid > 0 ? grid : std::max(128, 32 * f.degree());
  std::complex<double> mean_exp{0.0, 0.0};
  double cube = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double v = f(static_cast<double>(i) / m, static_cast<double>(j) / m);
      mean_exp += std::polar(1.0, v);
      cube += std::abs(v) * v * v;
    }
  }
  const double cells = static_cast<double>(m) * m;
  mean_exp /= cells;
  cube /= cells;
  const double l2 = f.l2_squared();
  InequalityCheck r;
  r.lhs = std::abs(mean_exp - std::exp(-0.5 * l2));
  r.rhs = cube / 6.0 + l2 * l2 / 8.0;
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-12) + 1e-15;
  return r;
}

}  // namespace vortexclt
