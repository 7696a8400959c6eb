#include "netbayes/mcmc_summary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace netbayes {

std::vector<double> autocorrelation(const std::vector<double>& series, int lag) {
  const int n = static_cast<int>(series.size());
  if (n < 2) throw std::invalid_argument("autocorrelation: series too short");
  if (lag >= n) throw std::invalid_argument("autocorrelation: lag >= length");
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : series) var += (v - mean) * (v - mean);
  std::vector<double> acf(lag + 1);
  if (var == 0.0) {
    std::fill(acf.begin(), acf.end(),
              std::numeric_limits<double>::quiet_NaN());
    return acf;
  }
  for (int k = 0; k <= lag; ++k) {
    double c = 0.0;
    for (int t = 0; t + k < n; ++t)
      c += (series[t] - mean) * (series[t + k] - mean);
    acf[k] = c / var;
  }
  return acf;
}

SummaryReport summarize(const PosteriorDraws& draws, int lag) {
  if (draws.kept_iters <= 0 || draws.n_chains <= 0)
    throw std::invalid_argument("summarize: empty draws");
  if (lag >= draws.kept_iters)
    throw std::invalid_argument("summarize: lag must be < kept iterations");
  SummaryReport rep;
  rep.param_names = draws.model.term_names();
  rep.lag = lag;
  for (int c = 0; c < draws.n_chains; ++c) {
    rep.chain_mean.push_back(draws.chain_mean(c));
    rep.chain_sd.push_back(draws.chain_sd(c));
    rep.chain_accept.push_back(draws.acceptance_rate(c));
  }
  rep.pooled_mean = draws.pooled_mean();
  rep.pooled_sd = draws.pooled_sd();
  rep.overall_accept = draws.overall_acceptance_rate();

  rep.acf.assign(draws.p, std::vector<double>(lag + 1, 0.0));
  std::vector<double> series(draws.kept_iters);
  for (int k = 0; k < draws.p; ++k) {
    std::vector<double> acc(lag + 1, 0.0);
    bool any_nan = false;
    for (int c = 0; c < draws.n_chains; ++c) {
      for (int t = 0; t < draws.kept_iters; ++t) series[t] = draws.at(c, t, k);
      const auto a = autocorrelation(series, lag);
      if (std::isnan(a[0])) {
        any_nan = true;
        break;
      }
      for (int l = 0; l <= lag; ++l) acc[l] += a[l];
    }
    if (any_nan)
      std::fill(rep.acf[k].begin(), rep.acf[k].end(),
                std::numeric_limits<double>::quiet_NaN());
    else
      for (int l = 0; l <= lag; ++l) rep.acf[k][l] = acc[l] / draws.n_chains;
  }
  return rep;
}

DensityCurve kernel_density(const std::vector<double>& samples, int grid_points) {
  if (samples.empty())
    throw std::invalid_argument("kernel_density: no samples");
  const int n = static_cast<int>(samples.size());
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : samples) var += (v - mean) * (v - mean);
  var = n > 1 ? var / (n - 1) : 0.0;
  const double sd = std::sqrt(var);
  const auto [mn_it, mx_it] = std::minmax_element(samples.begin(), samples.end());
  double lo = *mn_it, hi = *mx_it;
  double h = sd > 0 ? 1.06 * sd * std::pow(n, -0.2) : 1.0;
  lo -= 3 * h;
  hi += 3 * h;
  DensityCurve out;
  out.x.resize(grid_points);
  out.y.resize(grid_points);
  const double step = (hi - lo) / (grid_points - 1);
  const double norm = 1.0 / (n * h * std::sqrt(2.0 * M_PI));
  for (int gidx = 0; gidx < grid_points; ++gidx) {
    const double x = lo + gidx * step;
    double y = 0.0;
    for (double v : samples) {
      const double z = (x - v) / h;
      y += std::exp(-0.5 * z * z);
    }
    out.x[gidx] = x;
    out.y[gidx] = y * norm;
  }
  return out;
}

}  // namespace netbayes
