#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "netbayes/ergm_sim.hpp"
#include "netbayes/graph.hpp"
#include "netbayes/netstats.hpp"
#include "netbayes/rng.hpp"

namespace netbayes {

// Parameter prior: improper flat, or Gaussian with full covariance.
class Prior {
 public:
  enum class Kind { Flat, Gaussian };

  static Prior flat() { return Prior(); }
  static Prior gaussian(Eigen::VectorXd mean, Eigen::MatrixXd cov);
  // N(0, 100 I): the weakly informative default.
  static Prior default_gaussian(int p);

  Kind kind() const { return kind_; }
  // log density (with normalizing constant for the Gaussian; 0 for flat)
  double log_density(const std::vector<double>& theta) const;

 private:
  Prior() : kind_(Kind::Flat) {}
  Kind kind_;
  Eigen::VectorXd mean_;
  Eigen::MatrixXd cov_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  double log_norm_ = 0.0;
};

struct FitConfig {
  int main_iters = 1200;
  long long aux_iters = 3000;
  int n_chains = 9;
  double ads_gamma = 0.5;      // scale of the chain-difference move
  double ads_noise_sd = 0.05;  // epsilon ~ N(0, sd^2 I)
  int burn_in = -1;            // -1: main_iters / 4
  uint64_t seed = 1;
  Proposal proposal = Proposal::TieNoTie;
  double init_jitter_sd = 0.1;  // chains start at 0 + N(0, sd^2) per coord

  int effective_burn_in() const {
    return burn_in >= 0 ? burn_in : main_iters / 4;
  }
  void validate() const;
};

struct PosteriorDraws {
  int n_chains = 0;
  int kept_iters = 0;
  int p = 0;
  std::vector<double> draws;  // [chain][iter][param], chain-major
  std::vector<long long> accept_count;
  int main_iters = 0;
  ModelSpec model;
  FitConfig config;

  double at(int chain, int iter, int param) const {
    return draws[(static_cast<size_t>(chain) * kept_iters + iter) * p + param];
  }
  std::vector<double> chain_mean(int chain) const;
  std::vector<double> chain_sd(int chain) const;
  std::vector<double> pooled_mean() const;
  std::vector<double> pooled_sd() const;
  double acceptance_rate(int chain) const {
    return static_cast<double>(accept_count[chain]) / main_iters;
  }
  double overall_acceptance_rate() const;
};

struct ExchangeResult {
  std::vector<double> theta;
  bool accepted = false;
};

// One update of a single chain: ADS difference proposal from two other
// chains, auxiliary ERGM draw at theta' started from y, and the exchange
// accept step  min(0, [theta - theta']'[s(y') - s(y)] + log p(theta')/p(theta)).
ExchangeResult exchange_step(const std::vector<double>& theta,
                             const std::vector<std::vector<double>>& others,
                             const Graph& y, const StatVector& s_obs,
                             const ModelSpec& model, const Prior& prior,
                             long long aux_iters, Proposal proposal,
                             double ads_gamma, double ads_noise_sd, Rng& rng);

// Approximate exchange algorithm with n_chains ADS chains advancing in
// lockstep; deterministic given (seed, config, data).
PosteriorDraws fit_ergm(const Graph& y, const ModelSpec& model,
                        const Prior& prior, const FitConfig& cfg);

}  // namespace netbayes
