#pragma once

#include <vector>

#include "netbayes/ergm_bayes.hpp"
#include "netbayes/graph.hpp"
#include "netbayes/netstats.hpp"

namespace netbayes {

// Exhaustive enumeration of all undirected graphs on n <= 6 nodes, giving
// exact likelihood normalizers for trivially-small networks.
class ExactEnumeration {
 public:
  ExactEnumeration(const ModelSpec& model, int n);

  double log_z(const std::vector<double>& theta) const;
  const std::vector<StatVector>& all_stats() const { return stats_; }

 private:
  std::vector<StatVector> stats_;  // one per graph, 2^(n(n-1)/2) entries
};

// Normalized posterior weights on a finite theta grid:
// w_g ∝ exp(theta_g' s(y)) p(theta_g) / z(theta_g).
std::vector<double> exact_posterior_weights(
    const Graph& y, const ModelSpec& model, const Prior& prior,
    const std::vector<std::vector<double>>& theta_grid);

std::vector<double> exact_posterior_mean(
    const Graph& y, const ModelSpec& model, const Prior& prior,
    const std::vector<std::vector<double>>& theta_grid);

}  // namespace netbayes
