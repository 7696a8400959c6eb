#pragma once

#include <cstdint>
#include <vector>

#include "netbayes/lsm.hpp"

namespace netbayes {

struct VbConfig {
  int d = 2;
  int max_iters = 500;
  double tol = 1e-6;   // stop when one full sweep gains less than this
  int n_starts = 1;
  bool random_z = false;  // start from random positions instead of FR layout
  uint64_t seed = 1;

  void validate() const;
};

// Factorized Gaussian variational posterior for the SED latent space model:
// q(alpha) = N(xi, psi2), q(z_i) = N(Zmean_i, diag(sigma)) with one shared
// diagonal covariance across nodes.
struct VariationalState {
  double xi = 0.0;
  double psi2 = 1.0;
  Eigen::MatrixXd Zmean;   // n x d
  Eigen::VectorXd sigma;   // d diagonal entries of the shared covariance
  std::vector<double> elbo_trace;
  bool converged = false;
  int start_index = 0;  // which start won (n_starts > 1)

  double elbo() const { return elbo_trace.empty() ? -1e300 : elbo_trace.back(); }
};

// Evidence lower bound for the state (the optimization objective).
double vb_elbo(const Graph& y, const LsmPrior& prior, const VariationalState& s);

// Coordinate ascent on the bound; metric is SED by construction. With
// n_starts > 1 the start reaching the highest bound is returned.
VariationalState fit_lsm_vb(const Graph& y, const LsmPrior& prior,
                            const VbConfig& cfg);

}  // namespace netbayes
