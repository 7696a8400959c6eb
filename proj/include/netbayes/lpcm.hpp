#pragma once

#include <cstdint>
#include <vector>

#include "netbayes/lsm_mcmc.hpp"

namespace netbayes {

// Latent position cluster model: Gaussian mixture prior on the latent
// positions with conjugate Gibbs updates for labels, component means and
// variances, and mixture weights.
struct LpcmPrior {
  double alpha_mean = 0.0;
  double alpha_var = 4.0;
  double mu_var = 4.0;       // mu_g ~ N(0, mu_var I)
  double sigma_a0 = 2.0;     // sigma_g^2 ~ InverseGamma(a0, b0)
  double sigma_b0 = 1.0;
  double dirichlet_alpha = 1.0;
  double z_var = 1.0;        // used by the G = 1 reduction

  LsmPrior lsm() const { return {alpha_mean, alpha_var, z_var}; }
};

struct LpcmState {
  Eigen::MatrixXd Z;
  double alpha = 0.0;
  std::vector<int> labels;       // in 0..G-1
  Eigen::MatrixXd mu;            // G x d
  Eigen::VectorXd sigma2;        // G
  Eigen::VectorXd weights;       // G, sums to 1
};

struct LpcmDraws {
  // kept draws, Procrustes-aligned and relabeled against the reference draw
  std::vector<Eigen::MatrixXd> Z;
  std::vector<double> alpha;
  std::vector<std::vector<int>> labels;
  std::vector<double> log_post;
  int reference_draw = 0;
  Eigen::MatrixXd z_mean;
  double alpha_mean = 0.0;
  std::vector<int> modal_labels;          // majority vote over kept draws
  std::vector<std::vector<double>> label_freq;  // [node][cluster]
  int G = 1;
};

LpcmDraws fit_lpcm_mcmc(const Graph& y, int d, int G, const LpcmPrior& prior,
                        const LsmMcmcConfig& cfg, Metric metric = Metric::ED);

}  // namespace netbayes
