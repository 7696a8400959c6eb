#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netbayes/ergm_bayes.hpp"
#include "netbayes/graph.hpp"
#include "netbayes/lsm.hpp"
#include "netbayes/lsm_mcmc.hpp"
#include "netbayes/lsm_vb.hpp"

namespace netbayes {

struct GofConfig {
  int n_sim = 100;
  long long aux_iters = 10000;  // toggles per ERGM simulation
  int n_deg = 20;
  int n_esp = 15;
  int n_dist = 15;
  uint64_t seed = 1;
  Proposal proposal = Proposal::TieNoTie;

  void validate() const;
};

// One statistic family: observed vector, per-simulation vectors, and
// per-bin quantiles of the simulated distribution.
struct GofFamily {
  std::string name;
  std::vector<std::string> bin_labels;
  std::vector<double> observed;
  std::vector<std::vector<double>> simulated;  // [sim][bin]
  std::vector<double> qmin, q25, q50, q75, qmax;

  // fraction of bins with nonzero observed count whose observed value lies
  // inside the simulated min-max envelope
  double envelope_coverage() const;
};

struct GofSummary {
  GofFamily degree;
  GofFamily esp;
  GofFamily dist;
};

// Binning: degree 0..n_deg-1 plus an overflow bin; esp 0..n_esp-1 plus
// overflow; geodesic distance 1..n_dist-1 plus a ">= n_dist" bin and a
// distinct unreachable bin.
std::vector<double> degree_bins(const Graph& g, int n_deg);
std::vector<double> esp_bins(const Graph& g, int n_esp);
std::vector<double> dist_bins(const Graph& g, int n_dist);

GofSummary gof_ergm(const PosteriorDraws& draws, const Graph& y,
                    const ModelSpec& model, const GofConfig& cfg);

// LSM posterior-predictive GoF: each sampled (Z, alpha) generates one graph
// by independent Bernoulli dyads.
GofSummary gof_lsm(const LsmDraws& draws, const Graph& y, Metric metric,
                   const GofConfig& cfg);
GofSummary gof_lsm(const VariationalState& vb, const Graph& y,
                   const GofConfig& cfg);  // SED; samples from q

void emit_gof(const GofSummary& s, const std::string& out_dir);

}  // namespace netbayes
