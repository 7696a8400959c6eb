#include "netbayes/lsm_mcmc.hpp"

#include <cmath>
#include <stdexcept>

#include "netbayes/procrustes.hpp"
#include "netbayes/rng.hpp"

namespace netbayes {

void LsmMcmcConfig::validate() const {
  if (iters <= 0) throw std::invalid_argument("LsmMcmcConfig: iters <= 0");
  if (burn_in < 0 || burn_in >= iters)
    throw std::invalid_argument("LsmMcmcConfig: need iters > burn_in >= 0");
  if (thin <= 0) throw std::invalid_argument("LsmMcmcConfig: thin <= 0");
  if (!(prop_sd_z > 0) || !(prop_sd_alpha > 0))
    throw std::invalid_argument("LsmMcmcConfig: proposal sds must be > 0");
}

namespace {

double z_log_prior(const Eigen::RowVectorXd& z, double z_var) {
  return -0.5 * z.squaredNorm() / z_var;
}

double alpha_log_prior(double a, const LsmPrior& p) {
  const double d = a - p.alpha_mean;
  return -0.5 * d * d / p.alpha_var;
}

}  // namespace

LsmDraws fit_lsm_mcmc(const Graph& y, int d, Metric metric,
                      const LsmPrior& prior, const LsmMcmcConfig& cfg) {
  cfg.validate();
  const int n = y.n();
  Rng rng(cfg.seed);
  Eigen::MatrixXd Z = initial_positions(y, d, cfg.init, cfg.seed);
  double alpha = 0.0;

  double sd_z = cfg.prop_sd_z, sd_a = cfg.prop_sd_alpha;
  const double lik_scale = cfg.likelihood_off ? 0.0 : 1.0;

  LsmDraws out;
  const int kept = (cfg.iters - cfg.burn_in + cfg.thin - 1) / cfg.thin;
  out.Z.reserve(kept);
  out.alpha.reserve(kept);

  // adaptation bookkeeping (burn-in only, then frozen)
  long long win_acc_z = 0, win_prop_z = 0, win_acc_a = 0, win_prop_a = 0;
  const int adapt_window = 100;

  Eigen::RowVectorXd znew(d);
  for (int iter = 0; iter < cfg.iters; ++iter) {
    for (int i = 0; i < n; ++i) {
      const double ll_old = lik_scale * loglik_node(y, Z, alpha, i, metric) +
                            z_log_prior(Z.row(i), prior.z_var);
      for (int k = 0; k < d; ++k) znew(k) = Z(i, k) + rng.normal(0.0, sd_z);
      const Eigen::RowVectorXd zold = Z.row(i);
      Z.row(i) = znew;
      const double ll_new = lik_scale * loglik_node(y, Z, alpha, i, metric) +
                            z_log_prior(Z.row(i), prior.z_var);
      ++out.propose_z;
      ++win_prop_z;
      if (std::log(rng.u01()) < ll_new - ll_old) {
        ++out.accept_z;
        ++win_acc_z;
      } else {
        Z.row(i) = zold;
      }
    }
    {
      const double anew = alpha + rng.normal(0.0, sd_a);
      const double ll_old =
          lik_scale * loglik(y, {Z, alpha}, metric) + alpha_log_prior(alpha, prior);
      const double ll_new =
          lik_scale * loglik(y, {Z, anew}, metric) + alpha_log_prior(anew, prior);
      ++out.propose_alpha;
      ++win_prop_a;
      if (std::log(rng.u01()) < ll_new - ll_old) {
        alpha = anew;
        ++out.accept_alpha;
        ++win_acc_a;
      }
    }
    if (cfg.adapt && iter < cfg.burn_in && (iter + 1) % adapt_window == 0) {
      const double rz = static_cast<double>(win_acc_z) / win_prop_z;
      const double ra = static_cast<double>(win_acc_a) / win_prop_a;
      sd_z *= std::exp(rz - 0.25);
      sd_a *= std::exp(ra - 0.25);
      win_acc_z = win_prop_z = win_acc_a = win_prop_a = 0;
    }
    if (iter >= cfg.burn_in && (iter - cfg.burn_in) % cfg.thin == 0) {
      out.Z.push_back(Z);
      out.alpha.push_back(alpha);
      double lp = loglik(y, {Z, alpha}, metric) + alpha_log_prior(alpha, prior);
      for (int i = 0; i < n; ++i) lp += z_log_prior(Z.row(i), prior.z_var);
      out.log_post.push_back(lp);
    }
  }

  // identifiability: align every draw to the max-log-posterior draw
  int ref = 0;
  for (size_t t = 1; t < out.log_post.size(); ++t)
    if (out.log_post[t] > out.log_post[ref]) ref = static_cast<int>(t);
  out.reference_draw = ref;
  if (metric != Metric::Bilinear) {
    const Eigen::MatrixXd refZ = out.Z[ref];
    for (auto& Zt : out.Z) Zt = procrustes_rotate(Zt, refZ);
  }

  out.z_mean = Eigen::MatrixXd::Zero(n, d);
  double am = 0.0, a2 = 0.0;
  for (size_t t = 0; t < out.Z.size(); ++t) {
    out.z_mean += out.Z[t];
    am += out.alpha[t];
    a2 += out.alpha[t] * out.alpha[t];
  }
  const double T = static_cast<double>(out.Z.size());
  out.z_mean /= T;
  out.alpha_mean = am / T;
  out.alpha_sd = T > 1 ? std::sqrt((a2 - T * out.alpha_mean * out.alpha_mean) / (T - 1)) : 0.0;
  return out;
}

}  // namespace netbayes
