#include "netbayes/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace netbayes::reference {

int shared_partners(const Graph& g, int i, int j) {
  if (g.directed())
    throw std::invalid_argument("reference::shared_partners: undirected only");
  int c = 0;
  for (int k = 0; k < g.n(); ++k) {
    if (k == i || k == j) continue;
    if (g.edge(i, k) && g.edge(j, k)) ++c;
  }
  return c;
}

std::vector<long long> esp_counts(const Graph& g) {
  std::vector<long long> counts(std::max(g.n() - 1, 1), 0);
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (g.edge(i, j)) ++counts[shared_partners(g, i, j)];
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

std::vector<long long> nsp_counts(const Graph& g) {
  std::vector<long long> counts(std::max(g.n() - 1, 1), 0);
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (!g.edge(i, j)) ++counts[shared_partners(g, i, j)];
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

namespace {
double gw_sum(const std::vector<long long>& counts, double phi) {
  double s = 0.0;
  for (size_t k = 1; k < counts.size(); ++k)
    s += std::exp(phi) *
         (1.0 - std::pow(1.0 - std::exp(-phi), static_cast<double>(k))) *
         static_cast<double>(counts[k]);
  return s;
}
}  // namespace

double gwesp(const Graph& g, double phi) { return gw_sum(esp_counts(g), phi); }
double gwnsp(const Graph& g, double phi) { return gw_sum(nsp_counts(g), phi); }

StatVector stat_vector(const Graph& g, const ModelSpec& model) {
  StatVector out;
  out.reserve(model.size());
  for (const auto& term : model.terms) {
    switch (term.kind) {
      case TermKind::Edges:
        out.push_back(static_cast<double>(g.edge_count()));
        break;
      case TermKind::Gwesp:
        out.push_back(gwesp(g, term.phi));
        break;
      case TermKind::Gwnsp:
        out.push_back(gwnsp(g, term.phi));
        break;
    }
  }
  return out;
}

StatVector change_stats(const Graph& g, const ModelSpec& model, int i, int j) {
  const StatVector before = stat_vector(g, model);
  Graph h = g;
  h.toggle(i, j);
  const StatVector after = stat_vector(h, model);
  StatVector out(before.size());
  for (size_t t = 0; t < out.size(); ++t) out[t] = after[t] - before[t];
  return out;
}

GeodesicDistribution geodesic_distribution(const Graph& g) {
  const int n = g.n();
  const int INF = n + 1;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, INF));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.edge(i, j)) d[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  GeodesicDistribution out;
  out.count_by_distance.assign(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!g.directed() && j < i) continue;
      if (d[i][j] >= INF)
        ++out.unreachable;
      else
        ++out.count_by_distance[d[i][j]];
    }
  }
  while (out.count_by_distance.size() > 1 && out.count_by_distance.back() == 0)
    out.count_by_distance.pop_back();
  return out;
}

}  // namespace netbayes::reference
