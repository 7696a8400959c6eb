#pragma once

#include <string>
#include <vector>

#include "netbayes/ergm_bayes.hpp"

namespace netbayes {

// Posterior summaries in the shape of the bergm.output report: per-chain and
// pooled means/sds, acceptance rates, and per-parameter autocorrelations.
struct SummaryReport {
  std::vector<std::string> param_names;
  std::vector<std::vector<double>> chain_mean;  // [chain][param]
  std::vector<std::vector<double>> chain_sd;
  std::vector<double> chain_accept;
  std::vector<double> pooled_mean;
  std::vector<double> pooled_sd;
  double overall_accept = 0.0;
  int lag = 0;
  // acf[param][k], k = 0..lag; averaged over chains. NaN when a chain is
  // constant (autocorrelation undefined).
  std::vector<std::vector<double>> acf;
};

SummaryReport summarize(const PosteriorDraws& draws, int lag);

// Autocorrelation of one series at lags 0..lag (NaN if the series is constant).
std::vector<double> autocorrelation(const std::vector<double>& series, int lag);

// Gaussian kernel density on a regular grid (Silverman bandwidth), used by
// the diagnostics plots.
struct DensityCurve {
  std::vector<double> x;
  std::vector<double> y;
};
DensityCurve kernel_density(const std::vector<double>& samples, int grid_points = 128);

}  // namespace netbayes
