#pragma once

#include <cstdint>
#include <vector>

#include "netbayes/layout.hpp"
#include "netbayes/lsm.hpp"

namespace netbayes {

struct LsmMcmcConfig {
  int iters = 5000;
  int burn_in = 1000;
  int thin = 1;  // keep every thin-th post-burn-in iteration
  double prop_sd_z = 0.2;
  double prop_sd_alpha = 0.1;
  bool adapt = true;  // tune proposal sds toward 0.25 acceptance in burn-in
  InitMethod init = InitMethod::FruchtermanReingold;
  uint64_t seed = 1;
  // test hook: sample from the prior alone (likelihood term dropped)
  bool likelihood_off = false;

  void validate() const;
};

struct LsmDraws {
  std::vector<Eigen::MatrixXd> Z;  // kept draws, Procrustes-aligned
  std::vector<double> alpha;
  std::vector<double> log_post;
  long long accept_z = 0, propose_z = 0;
  long long accept_alpha = 0, propose_alpha = 0;
  int reference_draw = 0;  // index of the max-log-posterior draw
  Eigen::MatrixXd z_mean;  // posterior mean of aligned positions
  double alpha_mean = 0.0;
  double alpha_sd = 0.0;
};

// Metropolis-within-Gibbs for the latent space model: random-walk updates of
// each z_i (dyads involving i only) then of alpha; kept draws are aligned to
// the maximum-log-posterior draw before summarization.
LsmDraws fit_lsm_mcmc(const Graph& y, int d, Metric metric,
                      const LsmPrior& prior, const LsmMcmcConfig& cfg);

}  // namespace netbayes
