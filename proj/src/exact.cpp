#include "netbayes/exact.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace netbayes {

ExactEnumeration::ExactEnumeration(const ModelSpec& model, int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument(
        "ExactEnumeration: n must be in [1, 6] (enumeration of all graphs)");
  model.validate();
  const int dyads = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(dyads);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const uint64_t total = uint64_t{1} << dyads;
  stats_.reserve(total);
  Graph g(n, false);
  uint64_t prev = 0;
  stats_.push_back(stat_vector(g, model));
  for (uint64_t mask = 1; mask < total; ++mask) {
    // Gray-code walk: one toggle per step
    const uint64_t gray = mask ^ (mask >> 1);
    const uint64_t prev_gray = prev ^ (prev >> 1);
    uint64_t diff = gray ^ prev_gray;
    while (diff) {
      const int bit = std::countr_zero(diff);
      g.toggle(pairs[bit].first, pairs[bit].second);
      diff &= diff - 1;
    }
    prev = mask;
    stats_.push_back(stat_vector(g, model));
  }
}

double ExactEnumeration::log_z(const std::vector<double>& theta) const {
  if (stats_.empty()) throw std::logic_error("ExactEnumeration: empty");
  if (theta.size() != stats_[0].size())
    throw std::invalid_argument("log_z: dimension mismatch");
  double max_e = -INFINITY;
  std::vector<double> energy(stats_.size());
  for (size_t gidx = 0; gidx < stats_.size(); ++gidx) {
    double e = 0.0;
    for (size_t k = 0; k < theta.size(); ++k) e += theta[k] * stats_[gidx][k];
    energy[gidx] = e;
    max_e = std::max(max_e, e);
  }
  double sum = 0.0;
  for (double e : energy) sum += std::exp(e - max_e);
  return max_e + std::log(sum);
}

std::vector<double> exact_posterior_weights(
    const Graph& y, const ModelSpec& model, const Prior& prior,
    const std::vector<std::vector<double>>& theta_grid) {
  if (y.directed())
    throw std::invalid_argument("exact_posterior_weights: undirected only");
  if (theta_grid.empty())
    throw std::invalid_argument("exact_posterior_weights: empty grid");
  ExactEnumeration enumeration(model, y.n());
  const StatVector s_obs = stat_vector(y, model);
  std::vector<double> logw(theta_grid.size());
  double max_lw = -INFINITY;
  for (size_t gidx = 0; gidx < theta_grid.size(); ++gidx) {
    const auto& theta = theta_grid[gidx];
    double lp = prior.log_density(theta) - enumeration.log_z(theta);
    for (size_t k = 0; k < theta.size(); ++k) lp += theta[k] * s_obs[k];
    logw[gidx] = lp;
    max_lw = std::max(max_lw, lp);
  }
  double sum = 0.0;
  for (double lw : logw) sum += std::exp(lw - max_lw);
  std::vector<double> w(theta_grid.size());
  for (size_t gidx = 0; gidx < w.size(); ++gidx)
    w[gidx] = std::exp(logw[gidx] - max_lw) / sum;
  return w;
}

std::vector<double> exact_posterior_mean(
    const Graph& y, const ModelSpec& model, const Prior& prior,
    const std::vector<std::vector<double>>& theta_grid) {
  const auto w = exact_posterior_weights(y, model, prior, theta_grid);
  std::vector<double> mean(theta_grid[0].size(), 0.0);
  for (size_t gidx = 0; gidx < theta_grid.size(); ++gidx)
    for (size_t k = 0; k < mean.size(); ++k)
      mean[k] += w[gidx] * theta_grid[gidx][k];
  return mean;
}

}  // namespace netbayes
