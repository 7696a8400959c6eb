#include "netbayes/lpcm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "netbayes/procrustes.hpp"
#include "netbayes/rng.hpp"

namespace netbayes {

namespace {

double log_normal_iso(const Eigen::RowVectorXd& x, const Eigen::RowVectorXd& mu,
                      double var) {
  const int d = static_cast<int>(x.size());
  return -0.5 * d * std::log(2.0 * M_PI * var) -
         0.5 * (x - mu).squaredNorm() / var;
}

// Best permutation of cluster ids matching `labels` to `ref` by overlap
// (exhaustive over permutations; G is small).
std::vector<int> best_permutation(const std::vector<int>& labels,
                                  const std::vector<int>& ref, int G) {
  std::vector<int> perm(G);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  long long best_overlap = -1;
  std::vector<int> p = perm;
  std::sort(p.begin(), p.end());
  do {
    long long overlap = 0;
    for (size_t i = 0; i < labels.size(); ++i)
      if (p[labels[i]] == ref[i]) ++overlap;
    if (overlap > best_overlap) {
      best_overlap = overlap;
      best = p;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

LpcmDraws from_lsm(const LsmDraws& base, int n) {
  LpcmDraws out;
  out.G = 1;
  out.Z = base.Z;
  out.alpha = base.alpha;
  out.log_post = base.log_post;
  out.reference_draw = base.reference_draw;
  out.z_mean = base.z_mean;
  out.alpha_mean = base.alpha_mean;
  out.labels.assign(base.Z.size(), std::vector<int>(n, 0));
  out.modal_labels.assign(n, 0);
  out.label_freq.assign(n, {1.0});
  return out;
}

}  // namespace

LpcmDraws fit_lpcm_mcmc(const Graph& y, int d, int G, const LpcmPrior& prior,
                        const LsmMcmcConfig& cfg, Metric metric) {
  cfg.validate();
  const int n = y.n();
  if (G < 1) throw std::invalid_argument("fit_lpcm_mcmc: G >= 1 required");
  if (G > n) throw std::invalid_argument("fit_lpcm_mcmc: G > node count");
  if (metric == Metric::Bilinear)
    throw std::invalid_argument("fit_lpcm_mcmc: bilinear metric not supported");
  if (G == 1) {
    // one component with fixed N(0, z_var I) prior is exactly the LSM
    return from_lsm(fit_lsm_mcmc(y, d, metric, prior.lsm(), cfg), n);
  }

  Rng rng(cfg.seed);
  LpcmState st;
  st.Z = initial_positions(y, d, cfg.init, cfg.seed);
  st.alpha = 0.0;
  st.mu = Eigen::MatrixXd::Zero(G, d);
  for (int g = 0; g < G; ++g)
    for (int k = 0; k < d; ++k) st.mu(g, k) = rng.normal(0.0, 0.5);
  st.sigma2 = Eigen::VectorXd::Constant(G, 1.0);
  st.weights = Eigen::VectorXd::Constant(G, 1.0 / G);
  st.labels.assign(n, 0);
  for (int i = 0; i < n; ++i)
    st.labels[i] = static_cast<int>(rng.uniform_int(G));

  double sd_z = cfg.prop_sd_z, sd_a = cfg.prop_sd_alpha;
  long long win_acc_z = 0, win_prop_z = 0, win_acc_a = 0, win_prop_a = 0;
  const int adapt_window = 100;

  LpcmDraws out;
  out.G = G;

  auto log_post_all = [&]() {
    double lp = loglik(y, {st.Z, st.alpha}, metric);
    const double da = st.alpha - prior.alpha_mean;
    lp += -0.5 * da * da / prior.alpha_var;
    for (int i = 0; i < n; ++i)
      lp += std::log(st.weights(st.labels[i])) +
            log_normal_iso(st.Z.row(i), st.mu.row(st.labels[i]),
                           st.sigma2(st.labels[i]));
    for (int g = 0; g < G; ++g) {
      lp += log_normal_iso(st.mu.row(g), Eigen::RowVectorXd::Zero(d), prior.mu_var);
      lp += -(prior.sigma_a0 + 1.0) * std::log(st.sigma2(g)) -
            prior.sigma_b0 / st.sigma2(g);
    }
    return lp;
  };

  Eigen::RowVectorXd znew(d);
  std::vector<double> logw(G);
  for (int iter = 0; iter < cfg.iters; ++iter) {
    // latent positions: random-walk Metropolis under the mixture prior
    for (int i = 0; i < n; ++i) {
      const int g = st.labels[i];
      const double prior_old =
          log_normal_iso(st.Z.row(i), st.mu.row(g), st.sigma2(g));
      const double ll_old = loglik_node(y, st.Z, st.alpha, i, metric);
      const Eigen::RowVectorXd zold = st.Z.row(i);
      for (int k = 0; k < d; ++k) znew(k) = zold(k) + rng.normal(0.0, sd_z);
      st.Z.row(i) = znew;
      const double prior_new =
          log_normal_iso(st.Z.row(i), st.mu.row(g), st.sigma2(g));
      const double ll_new = loglik_node(y, st.Z, st.alpha, i, metric);
      ++win_prop_z;
      if (std::log(rng.u01()) < ll_new + prior_new - ll_old - prior_old) {
        ++win_acc_z;
      } else {
        st.Z.row(i) = zold;
      }
    }
    // intercept
    {
      const double anew = st.alpha + rng.normal(0.0, sd_a);
      const double da_old = st.alpha - prior.alpha_mean;
      const double da_new = anew - prior.alpha_mean;
      const double ll_old = loglik(y, {st.Z, st.alpha}, metric) -
                            0.5 * da_old * da_old / prior.alpha_var;
      const double ll_new = loglik(y, {st.Z, anew}, metric) -
                            0.5 * da_new * da_new / prior.alpha_var;
      ++win_prop_a;
      if (std::log(rng.u01()) < ll_new - ll_old) {
        st.alpha = anew;
        ++win_acc_a;
      }
    }
    // labels: multinomial from mixture responsibilities
    for (int i = 0; i < n; ++i) {
      double mx = -1e300;
      for (int g = 0; g < G; ++g) {
        logw[g] = std::log(st.weights(g)) +
                  log_normal_iso(st.Z.row(i), st.mu.row(g), st.sigma2(g));
        mx = std::max(mx, logw[g]);
      }
      double sum = 0.0;
      for (int g = 0; g < G; ++g) sum += std::exp(logw[g] - mx);
      double u = rng.u01() * sum;
      int pick = G - 1;
      for (int g = 0; g < G; ++g) {
        u -= std::exp(logw[g] - mx);
        if (u <= 0.0) {
          pick = g;
          break;
        }
      }
      st.labels[i] = pick;
    }
    // component means: conjugate Normal update per dimension
    for (int g = 0; g < G; ++g) {
      Eigen::RowVectorXd sum = Eigen::RowVectorXd::Zero(d);
      int ng = 0;
      for (int i = 0; i < n; ++i)
        if (st.labels[i] == g) {
          sum += st.Z.row(i);
          ++ng;
        }
      const double prec = ng / st.sigma2(g) + 1.0 / prior.mu_var;
      const double post_var = 1.0 / prec;
      for (int k = 0; k < d; ++k) {
        const double post_mean = post_var * (sum(k) / st.sigma2(g));
        st.mu(g, k) = rng.normal(post_mean, std::sqrt(post_var));
      }
      // component variance: conjugate inverse-gamma
      double rss = 0.0;
      for (int i = 0; i < n; ++i)
        if (st.labels[i] == g)
          rss += (st.Z.row(i) - st.mu.row(g)).squaredNorm();
      const double a_post = prior.sigma_a0 + 0.5 * ng * d;
      const double b_post = prior.sigma_b0 + 0.5 * rss;
      st.sigma2(g) = b_post / rng.gamma(a_post);
    }
    // weights: Dirichlet
    {
      std::vector<double> conc(G, prior.dirichlet_alpha);
      for (int i = 0; i < n; ++i) conc[st.labels[i]] += 1.0;
      const auto w = rng.dirichlet(conc);
      for (int g = 0; g < G; ++g) st.weights(g) = w[g];
    }

    if (cfg.adapt && iter < cfg.burn_in && (iter + 1) % adapt_window == 0) {
      sd_z *= std::exp(static_cast<double>(win_acc_z) / win_prop_z - 0.25);
      sd_a *= std::exp(static_cast<double>(win_acc_a) / win_prop_a - 0.25);
      win_acc_z = win_prop_z = win_acc_a = win_prop_a = 0;
    }

    if (iter >= cfg.burn_in && (iter - cfg.burn_in) % cfg.thin == 0) {
      out.Z.push_back(st.Z);
      out.alpha.push_back(st.alpha);
      out.labels.push_back(st.labels);
      out.log_post.push_back(log_post_all());
    }
  }

  // reference draw: max log-posterior; align positions and labels to it
  int ref = 0;
  for (size_t t = 1; t < out.log_post.size(); ++t)
    if (out.log_post[t] > out.log_post[ref]) ref = static_cast<int>(t);
  out.reference_draw = ref;
  const Eigen::MatrixXd refZ = out.Z[ref];
  const std::vector<int> ref_labels = out.labels[ref];
  for (size_t t = 0; t < out.Z.size(); ++t) {
    out.Z[t] = procrustes_rotate(out.Z[t], refZ);
    const auto perm = best_permutation(out.labels[t], ref_labels, G);
    for (int i = 0; i < n; ++i) out.labels[t][i] = perm[out.labels[t][i]];
  }

  out.z_mean = Eigen::MatrixXd::Zero(n, d);
  double am = 0.0;
  for (size_t t = 0; t < out.Z.size(); ++t) {
    out.z_mean += out.Z[t];
    am += out.alpha[t];
  }
  out.z_mean /= static_cast<double>(out.Z.size());
  out.alpha_mean = am / static_cast<double>(out.alpha.size());

  out.label_freq.assign(n, std::vector<double>(G, 0.0));
  for (const auto& lab : out.labels)
    for (int i = 0; i < n; ++i) ++out.label_freq[i][lab[i]];
  out.modal_labels.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < G; ++g) out.label_freq[i][g] /= out.labels.size();
    out.modal_labels[i] = static_cast<int>(
        std::max_element(out.label_freq[i].begin(), out.label_freq[i].end()) -
        out.label_freq[i].begin());
  }
  return out;
}

}  // namespace netbayes
