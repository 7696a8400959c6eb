#include "netbayes/gof.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "netbayes/ergm_sim.hpp"
#include "netbayes/netstats.hpp"
#include "netbayes/rng.hpp"
#include "netbayes/svg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace netbayes {

void GofConfig::validate() const {
  if (n_sim <= 0) throw std::invalid_argument("GofConfig: n_sim <= 0");
  if (aux_iters <= 0) throw std::invalid_argument("GofConfig: aux_iters <= 0");
  if (n_deg < 1 || n_esp < 1 || n_dist < 1)
    throw std::invalid_argument("GofConfig: truncation limits must be >= 1");
}

double GofFamily::envelope_coverage() const {
  int eligible = 0, inside = 0;
  for (size_t b = 0; b < observed.size(); ++b) {
    if (observed[b] == 0.0) continue;
    ++eligible;
    if (observed[b] >= qmin[b] && observed[b] <= qmax[b]) ++inside;
  }
  return eligible == 0 ? 1.0 : static_cast<double>(inside) / eligible;
}

std::vector<double> degree_bins(const Graph& g, int n_deg) {
  std::vector<double> out(static_cast<size_t>(n_deg) + 1, 0.0);
  const auto dist = degree_distribution(g);
  for (size_t k = 0; k < dist.size(); ++k) {
    if (static_cast<int>(k) < n_deg)
      out[k] += dist[k];
    else
      out[n_deg] += dist[k];
  }
  return out;
}

std::vector<double> esp_bins(const Graph& g, int n_esp) {
  std::vector<double> out(static_cast<size_t>(n_esp) + 1, 0.0);
  const auto ep = esp_counts(g);
  for (size_t k = 0; k < ep.size(); ++k) {
    if (static_cast<int>(k) < n_esp)
      out[k] += ep[k];
    else
      out[n_esp] += ep[k];
  }
  return out;
}

std::vector<double> dist_bins(const Graph& g, int n_dist) {
  // bins: distance 1..n_dist-1, ">= n_dist", unreachable
  std::vector<double> out(static_cast<size_t>(n_dist) + 1, 0.0);
  const auto gd = geodesic_distribution(g);
  for (size_t d = 1; d < gd.count_by_distance.size(); ++d) {
    if (static_cast<int>(d) < n_dist)
      out[d - 1] += gd.count_by_distance[d];
    else
      out[n_dist - 1] += gd.count_by_distance[d];
  }
  out[n_dist] = static_cast<double>(gd.unreachable);
  return out;
}

namespace {

std::vector<std::string> degree_labels(int n_deg) {
  std::vector<std::string> out;
  for (int k = 0; k < n_deg; ++k) out.push_back(std::to_string(k));
  out.push_back(">=" + std::to_string(n_deg));
  return out;
}
std::vector<std::string> esp_labels(int n_esp) {
  std::vector<std::string> out;
  for (int k = 0; k < n_esp; ++k) out.push_back(std::to_string(k));
  out.push_back(">=" + std::to_string(n_esp));
  return out;
}
std::vector<std::string> dist_labels(int n_dist) {
  std::vector<std::string> out;
  for (int d = 1; d < n_dist; ++d) out.push_back(std::to_string(d));
  out.push_back(">=" + std::to_string(n_dist));
  out.push_back("unreachable");
  return out;
}

// order-statistic quantile (linear interpolation, R type 7)
double quantile_sorted(const std::vector<double>& sorted, double q) {
  const size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = q * (n - 1);
  const size_t lo = static_cast<size_t>(h);
  const size_t hi = std::min(lo + 1, n - 1);
  return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}

void summarize_family(GofFamily& fam) {
  const size_t bins = fam.observed.size();
  fam.qmin.assign(bins, 0.0);
  fam.q25.assign(bins, 0.0);
  fam.q50.assign(bins, 0.0);
  fam.q75.assign(bins, 0.0);
  fam.qmax.assign(bins, 0.0);
  std::vector<double> col(fam.simulated.size());
  for (size_t b = 0; b < bins; ++b) {
    for (size_t s = 0; s < fam.simulated.size(); ++s)
      col[s] = fam.simulated[s][b];
    std::sort(col.begin(), col.end());
    fam.qmin[b] = col.front();
    fam.qmax[b] = col.back();
    fam.q25[b] = quantile_sorted(col, 0.25);
    fam.q50[b] = quantile_sorted(col, 0.50);
    fam.q75[b] = quantile_sorted(col, 0.75);
  }
}

GofSummary assemble(const Graph& y, const GofConfig& cfg,
                    std::vector<Graph>&& sims) {
  GofSummary out;
  out.degree.name = "degree";
  out.esp.name = "esp";
  out.dist.name = "distance";
  out.degree.bin_labels = degree_labels(cfg.n_deg);
  out.esp.bin_labels = esp_labels(cfg.n_esp);
  out.dist.bin_labels = dist_labels(cfg.n_dist);
  out.degree.observed = degree_bins(y, cfg.n_deg);
  out.esp.observed = esp_bins(y, cfg.n_esp);
  out.dist.observed = dist_bins(y, cfg.n_dist);
  out.degree.simulated.resize(sims.size());
  out.esp.simulated.resize(sims.size());
  out.dist.simulated.resize(sims.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t s = 0; s < sims.size(); ++s) {
    out.degree.simulated[s] = degree_bins(sims[s], cfg.n_deg);
    out.esp.simulated[s] = esp_bins(sims[s], cfg.n_esp);
    out.dist.simulated[s] = dist_bins(sims[s], cfg.n_dist);
  }
  summarize_family(out.degree);
  summarize_family(out.esp);
  summarize_family(out.dist);
  return out;
}

}  // namespace

GofSummary gof_ergm(const PosteriorDraws& draws, const Graph& y,
                    const ModelSpec& model, const GofConfig& cfg) {
  cfg.validate();
  if (draws.kept_iters <= 0 || draws.n_chains <= 0)
    throw std::invalid_argument("gof_ergm: empty draws");
  const long long total =
      static_cast<long long>(draws.n_chains) * draws.kept_iters;
  Rng pick_rng(cfg.seed);
  // draw parameter vectors from the pooled post-burn-in draws: without
  // replacement when possible, with replacement otherwise
  std::vector<long long> picks(cfg.n_sim);
  if (cfg.n_sim <= total) {
    std::vector<long long> pool(total);
    for (long long t = 0; t < total; ++t) pool[t] = t;
    for (int s = 0; s < cfg.n_sim; ++s) {
      const long long r =
          s + static_cast<long long>(pick_rng.uniform_int(total - s));
      std::swap(pool[s], pool[r]);
      picks[s] = pool[s];
    }
  } else {
    for (int s = 0; s < cfg.n_sim; ++s)
      picks[s] = static_cast<long long>(pick_rng.uniform_int(total));
  }
  std::vector<Graph> sims(static_cast<size_t>(cfg.n_sim), y);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < cfg.n_sim; ++s) {
    const int chain = static_cast<int>(picks[s] / draws.kept_iters);
    const int iter = static_cast<int>(picks[s] % draws.kept_iters);
    std::vector<double> theta(draws.p);
    for (int k = 0; k < draws.p; ++k) theta[k] = draws.at(chain, iter, k);
    Rng rng = Rng::stream(cfg.seed, 1000 + static_cast<uint64_t>(s));
    SimConfig sim;
    sim.aux_iters = cfg.aux_iters;
    sim.proposal = cfg.proposal;
    sims[s] = simulate_ergm(theta, model, y, sim, rng).graph;
  }
  return assemble(y, cfg, std::move(sims));
}

namespace {

Graph bernoulli_graph(const Eigen::MatrixXd& Z, double alpha, Metric metric,
                      bool directed, Rng& rng) {
  const int n = static_cast<int>(Z.rows());
  Graph g(n, directed);
  for (int i = 0; i < n; ++i) {
    const int j0 = directed ? 0 : i + 1;
    for (int j = j0; j < n; ++j) {
      if (j == i) continue;
      const double p = edge_prob(alpha, pair_distance(Z, i, j, metric));
      if (rng.u01() < p) g.set_edge(i, j, true);
    }
  }
  return g;
}

}  // namespace

GofSummary gof_lsm(const LsmDraws& draws, const Graph& y, Metric metric,
                   const GofConfig& cfg) {
  cfg.validate();
  if (draws.Z.empty()) throw std::invalid_argument("gof_lsm: empty draws");
  Rng pick_rng(cfg.seed);
  std::vector<size_t> picks(cfg.n_sim);
  const size_t total = draws.Z.size();
  for (int s = 0; s < cfg.n_sim; ++s)
    picks[s] = static_cast<size_t>(pick_rng.uniform_int(total));
  std::vector<Graph> sims(static_cast<size_t>(cfg.n_sim), y);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < cfg.n_sim; ++s) {
    Rng rng = Rng::stream(cfg.seed, 2000 + static_cast<uint64_t>(s));
    sims[s] = bernoulli_graph(draws.Z[picks[s]], draws.alpha[picks[s]], metric,
                              y.directed(), rng);
  }
  return assemble(y, cfg, std::move(sims));
}

GofSummary gof_lsm(const VariationalState& vb, const Graph& y,
                   const GofConfig& cfg) {
  cfg.validate();
  const int n = static_cast<int>(vb.Zmean.rows());
  const int d = static_cast<int>(vb.Zmean.cols());
  std::vector<Graph> sims(static_cast<size_t>(cfg.n_sim), y);
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < cfg.n_sim; ++s) {
    Rng rng = Rng::stream(cfg.seed, 3000 + static_cast<uint64_t>(s));
    // sample (alpha, Z) jointly from the variational factors
    const double alpha = vb.xi + std::sqrt(vb.psi2) * rng.normal();
    Eigen::MatrixXd Z(n, d);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < d; ++k)
        Z(i, k) = vb.Zmean(i, k) + std::sqrt(vb.sigma(k)) * rng.normal();
    sims[s] = bernoulli_graph(Z, alpha, Metric::SED, y.directed(), rng);
  }
  return assemble(y, cfg, std::move(sims));
}

namespace {

void write_family_csv(const GofFamily& fam, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "bin,observed,min,q25,median,q75,max\n";
  char buf[256];
  for (size_t b = 0; b < fam.observed.size(); ++b) {
    std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  fam.bin_labels[b].c_str(), fam.observed[b], fam.qmin[b],
                  fam.q25[b], fam.q50[b], fam.q75[b], fam.qmax[b]);
    out << buf;
  }
}

}  // namespace

void emit_gof(const GofSummary& s, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  write_family_csv(s.degree, out_dir + "/gof_degree.csv");
  write_family_csv(s.esp, out_dir + "/gof_esp.csv");
  write_family_csv(s.dist, out_dir + "/gof_dist.csv");
  svg_gof_panel(s.degree, "degree", out_dir + "/gof_degree.svg");
  svg_gof_panel(s.esp, "edgewise shared partners", out_dir + "/gof_esp.svg");
  svg_gof_panel(s.dist, "geodesic distance", out_dir + "/gof_dist.svg");
}

}  // namespace netbayes
