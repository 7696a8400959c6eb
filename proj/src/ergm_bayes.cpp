#include "netbayes/ergm_bayes.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace netbayes {

Prior Prior::gaussian(Eigen::VectorXd mean, Eigen::MatrixXd cov) {
  Prior p;
  p.kind_ = Kind::Gaussian;
  if (cov.rows() != cov.cols() || cov.rows() != mean.size())
    throw std::invalid_argument("Prior: covariance/mean shape mismatch");
  if (!cov.isApprox(cov.transpose(), 1e-10))
    throw std::invalid_argument("Prior: covariance not symmetric");
  p.llt_ = Eigen::LLT<Eigen::MatrixXd>(cov);
  if (p.llt_.info() != Eigen::Success)
    throw std::invalid_argument("Prior: covariance not positive-definite");
  double log_det = 0.0;
  for (int i = 0; i < cov.rows(); ++i)
    log_det += 2.0 * std::log(p.llt_.matrixL()(i, i));
  p.log_norm_ = -0.5 * (mean.size() * std::log(2.0 * M_PI) + log_det);
  p.mean_ = std::move(mean);
  p.cov_ = std::move(cov);
  return p;
}

Prior Prior::default_gaussian(int p) {
  return gaussian(Eigen::VectorXd::Zero(p),
                  100.0 * Eigen::MatrixXd::Identity(p, p));
}

double Prior::log_density(const std::vector<double>& theta) const {
  if (kind_ == Kind::Flat) return 0.0;
  Eigen::Map<const Eigen::VectorXd> t(theta.data(),
                                      static_cast<Eigen::Index>(theta.size()));
  if (t.size() != mean_.size())
    throw std::invalid_argument("Prior::log_density: dimension mismatch");
  const Eigen::VectorXd diff = t - mean_;
  const Eigen::VectorXd z = llt_.matrixL().solve(diff);
  return log_norm_ - 0.5 * z.squaredNorm();
}

void FitConfig::validate() const {
  if (main_iters <= 0) throw std::invalid_argument("FitConfig: main_iters <= 0");
  if (aux_iters <= 0) throw std::invalid_argument("FitConfig: aux_iters <= 0");
  if (n_chains < 3)
    throw std::invalid_argument(
        "FitConfig: ADS needs at least 3 chains (two distinct others)");
  if (!(ads_gamma > 0)) throw std::invalid_argument("FitConfig: ads_gamma <= 0");
  if (!(ads_noise_sd > 0))
    throw std::invalid_argument("FitConfig: ads_noise_sd <= 0");
  const int b = effective_burn_in();
  if (b < 0 || b >= main_iters)
    throw std::invalid_argument("FitConfig: need main_iters > burn_in >= 0");
}

std::vector<double> PosteriorDraws::chain_mean(int chain) const {
  std::vector<double> m(p, 0.0);
  for (int t = 0; t < kept_iters; ++t)
    for (int k = 0; k < p; ++k) m[k] += at(chain, t, k);
  for (double& v : m) v /= kept_iters;
  return m;
}

std::vector<double> PosteriorDraws::chain_sd(int chain) const {
  const auto m = chain_mean(chain);
  std::vector<double> s(p, 0.0);
  for (int t = 0; t < kept_iters; ++t)
    for (int k = 0; k < p; ++k) {
      const double d = at(chain, t, k) - m[k];
      s[k] += d * d;
    }
  for (double& v : s)
    v = kept_iters > 1 ? std::sqrt(v / (kept_iters - 1)) : 0.0;
  return s;
}

std::vector<double> PosteriorDraws::pooled_mean() const {
  std::vector<double> m(p, 0.0);
  for (int c = 0; c < n_chains; ++c)
    for (int t = 0; t < kept_iters; ++t)
      for (int k = 0; k < p; ++k) m[k] += at(c, t, k);
  const double total = static_cast<double>(n_chains) * kept_iters;
  for (double& v : m) v /= total;
  return m;
}

std::vector<double> PosteriorDraws::pooled_sd() const {
  const auto m = pooled_mean();
  std::vector<double> s(p, 0.0);
  for (int c = 0; c < n_chains; ++c)
    for (int t = 0; t < kept_iters; ++t)
      for (int k = 0; k < p; ++k) {
        const double d = at(c, t, k) - m[k];
        s[k] += d * d;
      }
  const double total = static_cast<double>(n_chains) * kept_iters;
  for (double& v : s) v = total > 1 ? std::sqrt(v / (total - 1)) : 0.0;
  return s;
}

double PosteriorDraws::overall_acceptance_rate() const {
  long long acc = 0;
  for (long long a : accept_count) acc += a;
  return static_cast<double>(acc) /
         (static_cast<double>(main_iters) * n_chains);
}

ExchangeResult exchange_step(const std::vector<double>& theta,
                             const std::vector<std::vector<double>>& others,
                             const Graph& y, const StatVector& s_obs,
                             const ModelSpec& model, const Prior& prior,
                             long long aux_iters, Proposal proposal,
                             double ads_gamma, double ads_noise_sd, Rng& rng) {
  if (others.size() < 2)
    throw std::invalid_argument("exchange_step: need two distinct other chains");
  const size_t p = theta.size();

  // step 1: ADS difference proposal
  const size_t a = rng.uniform_int(others.size());
  size_t b = rng.uniform_int(others.size() - 1);
  if (b >= a) ++b;
  std::vector<double> proposal_theta(p);
  for (size_t k = 0; k < p; ++k) {
    proposal_theta[k] = theta[k] + ads_gamma * (others[a][k] - others[b][k]) +
                        rng.normal(0.0, ads_noise_sd);
    if (!std::isfinite(proposal_theta[k]))
      throw std::runtime_error("exchange_step: non-finite proposal");
  }

  // step 2: auxiliary draw s(y') from the likelihood at theta', started at y
  SimConfig sim;
  sim.aux_iters = aux_iters;
  sim.proposal = proposal;
  const SimResult aux = simulate_ergm(proposal_theta, model, y, sim, rng);

  // step 3: exchange acceptance
  double log_acc = 0.0;
  for (size_t k = 0; k < p; ++k)
    log_acc += (theta[k] - proposal_theta[k]) * (aux.stats[k] - s_obs[k]);
  log_acc += prior.log_density(proposal_theta) - prior.log_density(theta);
  if (log_acc >= 0.0 || std::log(rng.u01()) < log_acc)
    return {std::move(proposal_theta), true};
  return {theta, false};
}

PosteriorDraws fit_ergm(const Graph& y, const ModelSpec& model,
                        const Prior& prior, const FitConfig& cfg) {
  cfg.validate();
  model.validate();
  const int p = static_cast<int>(model.size());
  const int H = cfg.n_chains;
  const StatVector s_obs = stat_vector(y, model);

  std::vector<Rng> rngs;
  rngs.reserve(H);
  for (int h = 0; h < H; ++h) rngs.push_back(Rng::stream(cfg.seed, h));

  std::vector<std::vector<double>> state(H, std::vector<double>(p, 0.0));
  for (int h = 0; h < H; ++h)
    for (int k = 0; k < p; ++k)
      state[h][k] = rngs[h].normal(0.0, cfg.init_jitter_sd);

  const int burn = cfg.effective_burn_in();
  PosteriorDraws out;
  out.n_chains = H;
  out.kept_iters = cfg.main_iters - burn;
  out.p = p;
  out.main_iters = cfg.main_iters;
  out.model = model;
  out.config = cfg;
  out.accept_count.assign(H, 0);
  out.draws.assign(static_cast<size_t>(H) * out.kept_iters * p, 0.0);

  std::vector<std::vector<double>> prev = state;
  for (int iter = 0; iter < cfg.main_iters; ++iter) {
    prev = state;  // synchronization point: everyone reads iteration t-1
#pragma omp parallel for schedule(static)
    for (int h = 0; h < H; ++h) {
      std::vector<std::vector<double>> others;
      others.reserve(H - 1);
      for (int o = 0; o < H; ++o)
        if (o != h) others.push_back(prev[o]);
      ExchangeResult res =
          exchange_step(state[h], others, y, s_obs, model, prior,
                        cfg.aux_iters, cfg.proposal, cfg.ads_gamma,
                        cfg.ads_noise_sd, rngs[h]);
      state[h] = std::move(res.theta);
      if (res.accepted) ++out.accept_count[h];
      if (iter >= burn) {
        double* dst =
            out.draws.data() +
            (static_cast<size_t>(h) * out.kept_iters + (iter - burn)) * p;
        for (int k = 0; k < p; ++k) dst[k] = state[h][k];
      }
    }
  }
  return out;
}

}  // namespace netbayes
