#include "netbayes/ergm_sim.hpp"

#include <cmath>
#include <stdexcept>

namespace netbayes {

ErgmSampler::ErgmSampler(Graph start, const ModelSpec& model,
                         std::vector<double> theta, Proposal proposal)
    : g_(std::move(start)),
      model_(model),
      theta_(std::move(theta)),
      proposal_(proposal),
      calc_(model, g_.n(), g_.directed()),
      delta_(model.size(), 0.0) {
  if (theta_.size() != model_.size())
    throw std::invalid_argument("ErgmSampler: dim(theta) != number of terms");
  stats_ = stat_vector(g_, model_);
  tie_pos_.assign(static_cast<size_t>(g_.dyad_count()), -1);
  ties_.reserve(static_cast<size_t>(g_.edge_count()));
  for (const auto& [i, j] : g_.edges()) {
    tie_pos_[dyad_index(i, j)] = static_cast<long long>(ties_.size());
    ties_.emplace_back(i, j);
  }
}

void ErgmSampler::set_theta(std::vector<double> theta) {
  if (theta.size() != model_.size())
    throw std::invalid_argument("set_theta: dimension mismatch");
  theta_ = std::move(theta);
}

long long ErgmSampler::dyad_index(int i, int j) const {
  const long long n = g_.n();
  if (g_.directed()) return static_cast<long long>(i) * (n - 1) + (j > i ? j - 1 : j);
  if (i > j) std::swap(i, j);
  // packed upper triangle
  return static_cast<long long>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

double ErgmSampler::log_pick_prob(long long m, bool tie) const {
  // Probability that the TieNoTie proposal selects one given dyad from a
  // state with m ties: a fair coin picks the tie side (uniform over ties)
  // or the non-tie side (uniform over non-ties); an empty side forfeits
  // its coin flip to the other.
  const long long dyads = g_.dyad_count();
  if (m == 0) return tie ? -INFINITY : -std::log(static_cast<double>(dyads));
  if (m == dyads) return tie ? -std::log(static_cast<double>(m)) : -INFINITY;
  return tie ? -std::log(2.0 * static_cast<double>(m))
             : -std::log(2.0 * static_cast<double>(dyads - m));
}

void ErgmSampler::pick_dyad(Rng& rng, int& i, int& j, bool& is_tie) {
  const int n = g_.n();
  auto random_dyad = [&](int& a, int& b) {
    a = static_cast<int>(rng.uniform_int(n));
    b = static_cast<int>(rng.uniform_int(n - 1));
    if (b >= a) ++b;
    if (!g_.directed() && a > b) std::swap(a, b);
  };
  if (proposal_ == Proposal::RandomDyad) {
    random_dyad(i, j);
    is_tie = g_.edge(i, j);
    return;
  }
  const long long m = static_cast<long long>(ties_.size());
  const long long dyads = g_.dyad_count();
  const bool pick_tie = (m == dyads) || (m > 0 && rng.u01() < 0.5);
  if (pick_tie) {
    const auto& e = ties_[rng.uniform_int(static_cast<uint64_t>(m))];
    i = e.first;
    j = e.second;
    is_tie = true;
  } else {
    do {
      random_dyad(i, j);
    } while (g_.edge(i, j));
    is_tie = false;
  }
}

void ErgmSampler::apply_toggle(int i, int j, bool was_tie) {
  const long long idx = dyad_index(i, j);
  if (was_tie) {
    const long long pos = tie_pos_[idx];
    const long long last = static_cast<long long>(ties_.size()) - 1;
    if (pos != last) {
      ties_[pos] = ties_[last];
      tie_pos_[dyad_index(ties_[pos].first, ties_[pos].second)] = pos;
    }
    ties_.pop_back();
    tie_pos_[idx] = -1;
  } else {
    tie_pos_[idx] = static_cast<long long>(ties_.size());
    ties_.emplace_back(i, j);
  }
  g_.toggle(i, j);
}

void ErgmSampler::step(Rng& rng) {
  int i, j;
  bool is_tie;
  pick_dyad(rng, i, j, is_tie);
  calc_.compute(g_, i, j, delta_.data());
  double log_acc = 0.0;
  for (size_t t = 0; t < theta_.size(); ++t) log_acc += theta_[t] * delta_[t];
  if (proposal_ == Proposal::TieNoTie) {
    const long long m = static_cast<long long>(ties_.size());
    const long long m_after = is_tie ? m - 1 : m + 1;
    // Hastings: q(reverse toggle) / q(forward toggle)
    log_acc += log_pick_prob(m_after, !is_tie) - log_pick_prob(m, is_tie);
  }
  if (log_acc >= 0.0 || std::log(rng.u01()) < log_acc) {
    apply_toggle(i, j, is_tie);
    for (size_t t = 0; t < stats_.size(); ++t) stats_[t] += delta_[t];
  }
}

void ErgmSampler::run(long long proposals, Rng& rng) {
  for (long long k = 0; k < proposals; ++k) step(rng);
#ifndef NDEBUG
  // guard against incremental-statistic drift
  const StatVector full = stat_vector(g_, model_);
  for (size_t t = 0; t < stats_.size(); ++t) {
    if (std::abs(full[t] - stats_[t]) > 1e-8 * (1.0 + std::abs(full[t])))
      throw std::logic_error("ErgmSampler: statistic drift detected");
  }
#endif
}

SimResult simulate_ergm(const std::vector<double>& theta, const ModelSpec& model,
                        const Graph& start, const SimConfig& cfg, Rng& rng) {
  if (cfg.aux_iters <= 0)
    throw std::invalid_argument("simulate_ergm: aux_iters must be > 0");
  ErgmSampler sampler(start, model, theta, cfg.proposal);
  sampler.run(cfg.aux_iters, rng);
  return {sampler.graph(), sampler.stats()};
}

SimResult simulate_ergm(const std::vector<double>& theta, const ModelSpec& model,
                        const Graph& start, const SimConfig& cfg) {
  Rng rng(cfg.seed);
  return simulate_ergm(theta, model, start, cfg, rng);
}

std::vector<StatVector> sample_stats(const std::vector<double>& theta,
                                     const ModelSpec& model, const Graph& start,
                                     const SimConfig& cfg, long long n_samples,
                                     long long thin) {
  if (n_samples <= 0)
    throw std::invalid_argument("sample_stats: n_samples must be > 0");
  if (thin <= 0) throw std::invalid_argument("sample_stats: thin must be > 0");
  if (cfg.aux_iters <= 0)
    throw std::invalid_argument("sample_stats: aux_iters must be > 0");
  Rng rng(cfg.seed);
  ErgmSampler sampler(start, model, theta, cfg.proposal);
  sampler.run(cfg.aux_iters, rng);  // burn-in
  std::vector<StatVector> out;
  out.reserve(static_cast<size_t>(n_samples));
  for (long long s = 0; s < n_samples; ++s) {
    sampler.run(thin, rng);
    out.push_back(sampler.stats());
  }
  return out;
}

}  // namespace netbayes
