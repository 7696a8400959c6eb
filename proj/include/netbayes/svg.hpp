#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netbayes/graph.hpp"
#include "netbayes/mcmc_summary.hpp"

namespace netbayes {

struct GofFamily;

// Boxplot panel per bin with the observed polyline overlaid.
void svg_gof_panel(const GofFamily& fam, const std::string& title,
                   const std::string& path);

// p x 3 grid: marginal density, trace, autocorrelation per parameter.
void svg_diagnostics(const PosteriorDraws& draws, const SummaryReport& rep,
                     const std::string& path);

// Latent positions with edges; optional cluster labels pick node colors.
void svg_latent_plot(const Graph& g, const Eigen::MatrixXd& Z,
                     const std::vector<int>& labels, const std::string& title,
                     const std::string& path);

}  // namespace netbayes
