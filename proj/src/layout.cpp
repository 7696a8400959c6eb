#include "netbayes/layout.hpp"

#include <cmath>
#include <stdexcept>

#include "netbayes/netstats.hpp"
#include "netbayes/rng.hpp"

namespace netbayes {

InitMethod init_method_from_string(const std::string& s) {
  if (s == "fr" || s == "fruchterman-reingold") return InitMethod::FruchtermanReingold;
  if (s == "random") return InitMethod::Random;
  if (s == "mds" || s == "geodesic-mds") return InitMethod::GeodesicMDS;
  throw std::invalid_argument("unknown init method '" + s + "'");
}

namespace {

void center(Eigen::MatrixXd& Z) { Z.rowwise() -= Z.colwise().mean(); }

Eigen::MatrixXd random_layout(int n, int d, uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd Z(n, d);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) Z(i, k) = rng.normal();
  center(Z);
  return Z;
}

Eigen::MatrixXd fruchterman_reingold(const Graph& g, int d, uint64_t seed) {
  const int n = g.n();
  Eigen::MatrixXd Z = random_layout(n, d, seed);
  if (n == 1) return Z;
  const double k = std::sqrt(1.0 / n);  // ideal spring length in unit area
  const int iters = 200;
  double temp = 0.1;
  const double cool = std::pow(1e-3 / temp, 1.0 / iters);
  Eigen::MatrixXd disp(n, d);
  for (int it = 0; it < iters; ++it) {
    disp.setZero();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Eigen::RowVectorXd delta = Z.row(i) - Z.row(j);
        double dist = delta.norm();
        if (dist < 1e-9) dist = 1e-9;
        const Eigen::RowVectorXd dir = delta / dist;
        // repulsion between all pairs
        const double rep = k * k / dist;
        disp.row(i) += dir * rep;
        disp.row(j) -= dir * rep;
        if (g.edge(i, j) || g.edge(j, i)) {
          const double att = dist * dist / k;
          disp.row(i) -= dir * att;
          disp.row(j) += dir * att;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      const double len = disp.row(i).norm();
      if (len > 1e-12) Z.row(i) += disp.row(i) / len * std::min(len, temp);
    }
    temp *= cool;
  }
  center(Z);
  return Z;
}

Eigen::MatrixXd geodesic_mds(const Graph& g, int d) {
  const int n = g.n();
  // BFS geodesics; unreachable pairs get (max finite distance + 1)
  Eigen::MatrixXd D = Eigen::MatrixXd::Constant(n, n, -1.0);
  int maxfin = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), queue(n);
    int head = 0, tail = 0;
    dist[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      for (int v : g.neighbors(u))
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
    }
    for (int t = 0; t < n; ++t) {
      D(s, t) = dist[t];
      maxfin = std::max(maxfin, dist[t]);
    }
  }
  const double far = maxfin + 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (D(i, j) < 0) D(i, j) = far;
  // classical MDS: B = -1/2 J D^2 J
  Eigen::MatrixXd D2 = D.array().square();
  Eigen::MatrixXd J =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::MatrixXd B = -0.5 * J * D2 * J;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B);
  Eigen::MatrixXd Z(n, d);
  for (int k = 0; k < d; ++k) {
    const int idx = n - 1 - k;  // eigenvalues ascending
    const double lam = idx >= 0 ? std::max(es.eigenvalues()(idx), 0.0) : 0.0;
    Z.col(k) = es.eigenvectors().col(idx) * std::sqrt(lam);
  }
  center(Z);
  return Z;
}

}  // namespace

Eigen::MatrixXd initial_positions(const Graph& g, int d, InitMethod method,
                                  uint64_t seed) {
  if (d < 1) throw std::invalid_argument("initial_positions: d >= 1 required");
  switch (method) {
    case InitMethod::Random:
      return random_layout(g.n(), d, seed);
    case InitMethod::FruchtermanReingold:
      return fruchterman_reingold(g, d, seed);
    case InitMethod::GeodesicMDS:
      return geodesic_mds(g, d);
  }
  throw std::logic_error("initial_positions: unreachable");
}

}  // namespace netbayes
