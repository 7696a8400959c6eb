#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "netbayes/graph.hpp"

namespace netbayes {

enum class TermKind { Edges, Gwesp, Gwnsp };

struct StatTerm {
  TermKind kind = TermKind::Edges;
  double phi = 0.0;  // decay, gwesp/gwnsp only
  std::string name() const;
  bool operator==(const StatTerm&) const = default;
};

// Ordered list of statistic terms; fixes the ordering of s(y) and theta.
struct ModelSpec {
  std::vector<StatTerm> terms;

  size_t size() const { return terms.size(); }
  void validate() const;
  bool needs_undirected() const;
  std::vector<std::string> term_names() const;

  static ModelSpec edges_only() { return {{{TermKind::Edges, 0.0}}}; }
  bool operator==(const ModelSpec&) const = default;
};

using StatVector = std::vector<double>;

// |N(i) ∩ N(j)| excluding i, j. Undirected graphs only.
int shared_partners(const Graph& g, int i, int j);

// EP_k / NEP_k: connected / non-connected pairs with exactly k common
// neighbours. Returned vectors are truncated at the largest nonzero index;
// entries beyond the size are zero.
std::vector<long long> esp_counts(const Graph& g);
std::vector<long long> nsp_counts(const Graph& g);

double gwesp(const Graph& g, double phi);
double gwnsp(const Graph& g, double phi);

StatVector stat_vector(const Graph& g, const ModelSpec& model);

// Change statistics for toggling dyad (i, j): s(toggled) - s(current),
// computed from the local neighbourhoods of i and j only. Weight tables are
// cached per (model, n); reuse one calculator across many calls.
class ChangeStatCalc {
 public:
  ChangeStatCalc(const ModelSpec& model, int n, bool directed);
  size_t dim() const { return model_.size(); }
  void compute(const Graph& g, int i, int j, double* out) const;

 private:
  ModelSpec model_;
  int n_;
  // per gw term: w[k] = e^phi * (1 - (1 - e^-phi)^k), k = 0..n-2
  std::vector<std::vector<double>> weights_;
};

StatVector change_stats(const Graph& g, const ModelSpec& model, int i, int j);

// degree_distribution[k] = number of nodes with degree k.
std::vector<long long> degree_distribution(const Graph& g);

struct GeodesicDistribution {
  // count_by_distance[d] = pair count at shortest-path distance d (index 0
  // unused). Unordered pairs for undirected graphs, ordered for directed.
  std::vector<long long> count_by_distance;
  long long unreachable = 0;
  long long total() const;
};

GeodesicDistribution geodesic_distribution(const Graph& g);

}  // namespace netbayes
