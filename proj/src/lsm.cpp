#include "netbayes/lsm.hpp"

#include <cmath>
#include <stdexcept>

namespace netbayes {

Metric metric_from_string(const std::string& s) {
  if (s == "ed") return Metric::ED;
  if (s == "sed") return Metric::SED;
  if (s == "bilinear") return Metric::Bilinear;
  throw std::invalid_argument("unknown metric '" + s +
                              "' (expected ed, sed, or bilinear)");
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::ED:
      return "ed";
    case Metric::SED:
      return "sed";
    case Metric::Bilinear:
      return "bilinear";
  }
  return "?";
}

double log1pexp(double x) {
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

double edge_prob(double alpha, double d) {
  const double eta = alpha - d;
  if (eta >= 0.0) return 1.0 / (1.0 + std::exp(-eta));
  const double e = std::exp(eta);
  return e / (1.0 + e);
}

double pair_distance(const Eigen::MatrixXd& Z, int i, int j, Metric metric) {
  switch (metric) {
    case Metric::ED:
      return (Z.row(i) - Z.row(j)).norm();
    case Metric::SED:
      return (Z.row(i) - Z.row(j)).squaredNorm();
    case Metric::Bilinear:
      return -Z.row(i).dot(Z.row(j));
  }
  return 0.0;
}

namespace {
double dyad_term(bool y, double alpha, double d) {
  const double eta = alpha - d;
  return (y ? eta : 0.0) - log1pexp(eta);
}
}  // namespace

double loglik(const Graph& y, const LatentConfig& cfg, Metric metric) {
  if (cfg.Z.rows() != y.n())
    throw std::invalid_argument("loglik: Z rows != node count");
  const int n = y.n();
  double ll = 0.0;
  for (int i = 0; i < n; ++i) {
    const int j0 = y.directed() ? 0 : i + 1;
    for (int j = j0; j < n; ++j) {
      if (j == i) continue;
      ll += dyad_term(y.edge(i, j), cfg.alpha,
                      pair_distance(cfg.Z, i, j, metric));
    }
  }
  return ll;
}

double loglik_node(const Graph& y, const Eigen::MatrixXd& Z, double alpha,
                   int i, Metric metric) {
  double ll = 0.0;
  for (int j = 0; j < y.n(); ++j) {
    if (j == i) continue;
    const double d = pair_distance(Z, i, j, metric);
    ll += dyad_term(y.edge(i, j), alpha, d);
    if (y.directed()) ll += dyad_term(y.edge(j, i), alpha,
                                      pair_distance(Z, j, i, metric));
  }
  return ll;
}

}  // namespace netbayes
