#include "netbayes/lsm_vb.hpp"

#include <cmath>
#include <stdexcept>

#include "netbayes/layout.hpp"
#include "netbayes/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace netbayes {

void VbConfig::validate() const {
  if (d < 1) throw std::invalid_argument("VbConfig: d >= 1 required");
  if (max_iters <= 0) throw std::invalid_argument("VbConfig: max_iters <= 0");
  if (!(tol > 0)) throw std::invalid_argument("VbConfig: tol must be > 0");
  if (n_starts < 1) throw std::invalid_argument("VbConfig: n_starts < 1");
}

namespace {

// The bound replaces E_q log(1+exp(alpha - d_ij)) by log(1 + E_q exp(...)),
// which has closed form under the SED metric:
//   E_q exp(alpha - d_ij) = exp(xi + psi2/2) * prod_k (1+4 s_k)^{-1/2}
//                           * exp(-delta_k^2 / (1+4 s_k)).
struct BoundEval {
  const Graph& y;
  const LsmPrior& prior;

  // log of E_q exp(alpha - d_ij) for one dyad
  static double log_EB(double xi, double psi2, const Eigen::VectorXd& sigma,
                       const Eigen::RowVectorXd& delta) {
    double v = xi + 0.5 * psi2;
    for (int k = 0; k < sigma.size(); ++k) {
      const double c = 1.0 + 4.0 * sigma(k);
      v += -0.5 * std::log(c) - delta(k) * delta(k) / c;
    }
    return v;
  }

  double dyad_term(bool edge, double xi, double psi2,
                   const Eigen::VectorXd& sigma, const Eigen::RowVectorXd& delta,
                   double tr_sigma) const {
    const double E_d = delta.squaredNorm() + 2.0 * tr_sigma;
    const double L = log_EB(xi, psi2, sigma, delta);
    return (edge ? (xi - E_d) : 0.0) - log1pexp(L);
  }

  double kl_alpha(double xi, double psi2) const {
    return 0.5 * std::log(prior.alpha_var) - 0.5 * std::log(psi2) +
           (psi2 + (xi - prior.alpha_mean) * (xi - prior.alpha_mean)) /
               (2.0 * prior.alpha_var) -
           0.5;
  }

  double kl_z(const Eigen::MatrixXd& Z, const Eigen::VectorXd& sigma) const {
    const int n = static_cast<int>(Z.rows());
    const int d = static_cast<int>(Z.cols());
    const double tr = sigma.sum();
    double logdet = 0.0;
    for (int k = 0; k < d; ++k) logdet += std::log(sigma(k));
    double sqn = Z.squaredNorm();
    return 0.5 * (n * tr / prior.z_var + sqn / prior.z_var - n * d +
                  n * d * std::log(prior.z_var) - n * logdet);
  }

  double full(const VariationalState& s) const {
    const int n = y.n();
    const double tr = s.sigma.sum();
    double t1 = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        t1 += dyad_term(y.edge(i, j), s.xi, s.psi2, s.sigma,
                        s.Zmean.row(i) - s.Zmean.row(j), tr);
    return t1 - kl_alpha(s.xi, s.psi2) - kl_z(s.Zmean, s.sigma);
  }

  // terms involving node i only (for z_i block updates)
  double node_local(const VariationalState& s, int i) const {
    const int n = y.n();
    const double tr = s.sigma.sum();
    double t = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      t += dyad_term(y.edge(i, j), s.xi, s.psi2, s.sigma,
                     s.Zmean.row(i) - s.Zmean.row(j), tr);
    }
    t -= 0.5 * s.Zmean.row(i).squaredNorm() / prior.z_var;
    return t;
  }
};

// Backtracking ascent step on a scalar-vector block: propose x + t*g,
// halving t until the objective does not decrease. Returns gain.
template <typename Vec, typename Obj>
double ascend(Vec& x, const Vec& grad, Obj&& objective, double t0 = 1.0) {
  const double f0 = objective(x);
  double t = t0;
  for (int tries = 0; tries < 40; ++tries) {
    Vec cand = x + t * grad;
    const double f1 = objective(cand);
    if (std::isfinite(f1) && f1 > f0) {
      x = cand;
      return f1 - f0;
    }
    t *= 0.5;
  }
  return 0.0;
}

VariationalState vb_single_start(const Graph& y, const LsmPrior& prior,
                                 const VbConfig& cfg, InitMethod init,
                                 uint64_t seed, int start_index) {
  const int n = y.n();
  const int d = cfg.d;
  BoundEval be{y, prior};

  VariationalState s;
  s.start_index = start_index;
  s.Zmean = initial_positions(y, d, init, seed);
  s.xi = 0.0;
  s.psi2 = 0.25;
  s.sigma = Eigen::VectorXd::Constant(d, 0.1);

  double elbo = be.full(s);
  s.elbo_trace.push_back(elbo);

  Eigen::RowVectorXd grad_z(d);
  for (int sweep = 0; sweep < cfg.max_iters; ++sweep) {
    // xi and log psi2 (gradients over all dyads)
    {
      double gxi = -(s.xi - prior.alpha_mean) / prior.alpha_var;
      double gpsi = -1.0 / (2.0 * prior.alpha_var) + 1.0 / (2.0 * s.psi2);
      const double tr = s.sigma.sum();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const Eigen::RowVectorXd delta = s.Zmean.row(i) - s.Zmean.row(j);
          const double L = BoundEval::log_EB(s.xi, s.psi2, s.sigma, delta);
          const double p = 1.0 / (1.0 + std::exp(-L));
          gxi += (y.edge(i, j) ? 1.0 : 0.0) - p;
          gpsi -= 0.5 * p;
          (void)tr;
        }
      double xi = s.xi;
      ascend(xi, gxi, [&](double v) {
        VariationalState t = s;
        t.xi = v;
        return be.full(t);
      }, 0.1);
      s.xi = xi;
      double u = std::log(s.psi2);
      const double gu = gpsi * s.psi2;
      ascend(u, gu, [&](double v) {
        VariationalState t = s;
        t.psi2 = std::exp(v);
        return be.full(t);
      }, 0.5);
      s.psi2 = std::exp(u);
    }

    // each z_i against its local objective
    for (int i = 0; i < n; ++i) {
      grad_z.setZero();
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const Eigen::RowVectorXd delta = s.Zmean.row(i) - s.Zmean.row(j);
        const double L = BoundEval::log_EB(s.xi, s.psi2, s.sigma, delta);
        const double p = 1.0 / (1.0 + std::exp(-L));
        for (int k = 0; k < d; ++k) {
          const double c = 1.0 + 4.0 * s.sigma(k);
          grad_z(k) += -2.0 * (y.edge(i, j) ? 1.0 : 0.0) * delta(k) +
                       p * 2.0 * delta(k) / c;
        }
      }
      grad_z -= s.Zmean.row(i) / prior.z_var;
      Eigen::RowVectorXd zi = s.Zmean.row(i);
      ascend(zi, grad_z, [&](const Eigen::RowVectorXd& v) {
        VariationalState t = s;
        t.Zmean.row(i) = v;
        return be.node_local(t, i);
      }, 0.1);
      s.Zmean.row(i) = zi;
    }

    // shared diagonal covariance, one log-coordinate at a time
    for (int k = 0; k < d; ++k) {
      double g = -n / (2.0 * prior.z_var) + n / (2.0 * s.sigma(k));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const Eigen::RowVectorXd delta = s.Zmean.row(i) - s.Zmean.row(j);
          const double L = BoundEval::log_EB(s.xi, s.psi2, s.sigma, delta);
          const double p = 1.0 / (1.0 + std::exp(-L));
          const double c = 1.0 + 4.0 * s.sigma(k);
          g += -2.0 * (y.edge(i, j) ? 1.0 : 0.0) +
               p * (2.0 / c - 4.0 * delta(k) * delta(k) / (c * c));
        }
      double u = std::log(s.sigma(k));
      const double gu = g * s.sigma(k);
      ascend(u, gu, [&](double v) {
        VariationalState t = s;
        t.sigma(k) = std::exp(v);
        return be.full(t);
      }, 0.5);
      s.sigma(k) = std::exp(u);
    }

    const double new_elbo = be.full(s);
    const double gain = new_elbo - elbo;
    elbo = new_elbo;
    s.elbo_trace.push_back(elbo);
    if (gain < cfg.tol && gain >= 0) {
      s.converged = true;
      break;
    }
  }
  return s;
}

}  // namespace

double vb_elbo(const Graph& y, const LsmPrior& prior, const VariationalState& s) {
  return BoundEval{y, prior}.full(s);
}

VariationalState fit_lsm_vb(const Graph& y, const LsmPrior& prior,
                            const VbConfig& cfg) {
  cfg.validate();
  if (y.directed())
    throw std::invalid_argument("fit_lsm_vb: undirected graphs only");
  std::vector<VariationalState> results(cfg.n_starts);
#pragma omp parallel for schedule(dynamic) if (cfg.n_starts > 1)
  for (int s = 0; s < cfg.n_starts; ++s) {
    const InitMethod init = (s == 0 && !cfg.random_z)
                                ? InitMethod::FruchtermanReingold
                                : InitMethod::Random;
    results[s] = vb_single_start(y, prior, cfg, init,
                                 cfg.seed + static_cast<uint64_t>(s), s);
  }
  int best = 0;
  for (int s = 1; s < cfg.n_starts; ++s)
    if (results[s].elbo() > results[best].elbo()) best = s;
  return results[best];
}

}  // namespace netbayes
