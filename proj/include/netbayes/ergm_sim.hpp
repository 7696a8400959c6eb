#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netbayes/graph.hpp"
#include "netbayes/netstats.hpp"
#include "netbayes/rng.hpp"

namespace netbayes {

enum class Proposal { RandomDyad, TieNoTie };

struct SimConfig {
  long long aux_iters = 3000;  // toggle proposals
  Proposal proposal = Proposal::TieNoTie;
  uint64_t seed = 1;
};

// Single-dyad Metropolis sampler for p(y|theta) ∝ exp(theta' s(y)).
// Owns a private graph copy; statistics are tracked incrementally through
// change statistics.
class ErgmSampler {
 public:
  ErgmSampler(Graph start, const ModelSpec& model, std::vector<double> theta,
              Proposal proposal);

  void step(Rng& rng);
  void run(long long proposals, Rng& rng);

  const Graph& graph() const { return g_; }
  const StatVector& stats() const { return stats_; }
  void set_theta(std::vector<double> theta);

 private:
  long long dyad_index(int i, int j) const;
  void pick_dyad(Rng& rng, int& i, int& j, bool& is_tie);
  double log_pick_prob(long long m, bool tie) const;
  void apply_toggle(int i, int j, bool was_tie);

  Graph g_;
  ModelSpec model_;
  std::vector<double> theta_;
  Proposal proposal_;
  ChangeStatCalc calc_;
  StatVector stats_;
  std::vector<double> delta_;
  // tie bookkeeping for TieNoTie: position of each dyad in ties_, or -1
  std::vector<std::pair<int, int>> ties_;
  std::vector<long long> tie_pos_;
};

struct SimResult {
  Graph graph;
  StatVector stats;
};

// Step-2 auxiliary draw: aux_iters single-dyad Metropolis proposals from
// `start`, returning the final graph and its statistic vector.
SimResult simulate_ergm(const std::vector<double>& theta, const ModelSpec& model,
                        const Graph& start, const SimConfig& cfg, Rng& rng);
SimResult simulate_ergm(const std::vector<double>& theta, const ModelSpec& model,
                        const Graph& start, const SimConfig& cfg);

// Burn aux_iters proposals, then collect n_samples statistic vectors spaced
// `thin` proposals apart.
std::vector<StatVector> sample_stats(const std::vector<double>& theta,
                                     const ModelSpec& model, const Graph& start,
                                     const SimConfig& cfg, long long n_samples,
                                     long long thin);

}  // namespace netbayes
