#pragma once

#include <Eigen/Dense>

#include "netbayes/graph.hpp"

namespace netbayes {

// Latent space metric: edge probability is logistic(alpha - d_ij).
//   ED       d_ij = |z_i - z_j|
//   SED      d_ij = |z_i - z_j|^2
//   Bilinear d_ij = -z_i' z_j  (sign flipped so that a larger inner product
//            raises the edge probability; intended for directed graphs)
enum class Metric { ED, SED, Bilinear };

Metric metric_from_string(const std::string& s);
std::string metric_name(Metric m);

struct LatentConfig {
  Eigen::MatrixXd Z;  // n x d latent positions
  double alpha = 0.0;
};

struct LsmPrior {
  double alpha_mean = 0.0;
  double alpha_var = 4.0;
  double z_var = 1.0;  // z_i ~ N(0, z_var I)
};

// log(1 + exp(x)) without overflow.
double log1pexp(double x);

// logistic(alpha - d), numerically stable.
double edge_prob(double alpha, double d);

double pair_distance(const Eigen::MatrixXd& Z, int i, int j, Metric metric);

// Sum over dyads of y_ij (alpha - d_ij) - log(1 + exp(alpha - d_ij)).
// Unordered pairs for undirected graphs, ordered pairs for directed.
double loglik(const Graph& y, const LatentConfig& cfg, Metric metric);

// Contribution to loglik of all dyads involving node i.
double loglik_node(const Graph& y, const Eigen::MatrixXd& Z, double alpha,
                   int i, Metric metric);

}  // namespace netbayes
