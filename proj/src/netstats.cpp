#include "netbayes/netstats.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <queue>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace netbayes {

std::string StatTerm::name() const {
  char buf[64];
  switch (kind) {
    case TermKind::Edges:
      return "edges";
    case TermKind::Gwesp:
      std::snprintf(buf, sizeof buf, "gwesp.%g", phi);
      return buf;
    case TermKind::Gwnsp:
      std::snprintf(buf, sizeof buf, "gwnsp.%g", phi);
      return buf;
  }
  return "?";
}

void ModelSpec::validate() const {
  if (terms.empty()) throw std::invalid_argument("ModelSpec: no terms");
  for (const auto& t : terms) {
    if (t.kind != TermKind::Edges && !(t.phi >= 0.0 && std::isfinite(t.phi)))
      throw std::invalid_argument("ModelSpec: phi must be finite and >= 0");
  }
}

bool ModelSpec::needs_undirected() const {
  for (const auto& t : terms)
    if (t.kind != TermKind::Edges) return true;
  return false;
}

std::vector<std::string> ModelSpec::term_names() const {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.name());
  return out;
}

namespace {

void require_undirected(const Graph& g, const char* what) {
  if (g.directed())
    throw std::invalid_argument(std::string(what) +
                                ": defined for undirected graphs only");
}

int popcount_and(std::span<const uint64_t> a, std::span<const uint64_t> b) {
  int c = 0;
  for (size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

void trim_zeros(std::vector<long long>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// gw weight of one pair with k shared partners.
double gw_weight(double phi, long long k) {
  return std::exp(phi) * (1.0 - std::pow(1.0 - std::exp(-phi), static_cast<double>(k)));
}

double gw_sum(const std::vector<long long>& counts, double phi) {
  double s = 0.0;
  for (size_t k = 1; k < counts.size(); ++k)
    if (counts[k]) s += gw_weight(phi, static_cast<long long>(k)) *
                        static_cast<double>(counts[k]);
  return s;
}

}  // namespace

int shared_partners(const Graph& g, int i, int j) {
  require_undirected(g, "shared_partners");
  return popcount_and(g.row(i), g.row(j));
}

std::vector<long long> esp_counts(const Graph& g) {
  require_undirected(g, "esp_counts");
  const int n = g.n();
  std::vector<long long> counts(std::max(n - 1, 1), 0);
#pragma omp parallel if (n > 256)
  {
    std::vector<long long> local(counts.size(), 0);
#pragma omp for schedule(dynamic, 16) nowait
    for (int i = 0; i < n; ++i) {
      for (int j : g.neighbors(i)) {
        if (j <= i) continue;
        ++local[popcount_and(g.row(i), g.row(j))];
      }
    }
#pragma omp critical
    for (size_t k = 0; k < counts.size(); ++k) counts[k] += local[k];
  }
  trim_zeros(counts);
  return counts;
}

std::vector<long long> nsp_counts(const Graph& g) {
  require_undirected(g, "nsp_counts");
  const int n = g.n();
  std::vector<long long> counts(std::max(n - 1, 1), 0);
#pragma omp parallel if (n > 256)
  {
    std::vector<long long> local(counts.size(), 0);
#pragma omp for schedule(dynamic, 16) nowait
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (g.edge(i, j)) continue;
        ++local[popcount_and(g.row(i), g.row(j))];
      }
    }
#pragma omp critical
    for (size_t k = 0; k < counts.size(); ++k) counts[k] += local[k];
  }
  trim_zeros(counts);
  return counts;
}

double gwesp(const Graph& g, double phi) {
  require_undirected(g, "gwesp");
  return gw_sum(esp_counts(g), phi);
}

double gwnsp(const Graph& g, double phi) {
  require_undirected(g, "gwnsp");
  return gw_sum(nsp_counts(g), phi);
}

StatVector stat_vector(const Graph& g, const ModelSpec& model) {
  model.validate();
  if (g.directed() && model.needs_undirected())
    throw std::invalid_argument(
        "stat_vector: gwesp/gwnsp require an undirected graph");
  std::vector<long long> ep, nep;
  bool have_ep = false, have_nep = false;
  StatVector out(model.size(), 0.0);
  for (size_t t = 0; t < model.terms.size(); ++t) {
    const auto& term = model.terms[t];
    switch (term.kind) {
      case TermKind::Edges:
        out[t] = static_cast<double>(g.edge_count());
        break;
      case TermKind::Gwesp:
        if (!have_ep) {
          ep = esp_counts(g);
          have_ep = true;
        }
        out[t] = gw_sum(ep, term.phi);
        break;
      case TermKind::Gwnsp:
        if (!have_nep) {
          nep = nsp_counts(g);
          have_nep = true;
        }
        out[t] = gw_sum(nep, term.phi);
        break;
    }
  }
  return out;
}

ChangeStatCalc::ChangeStatCalc(const ModelSpec& model, int n, bool directed)
    : model_(model), n_(n) {
  model_.validate();
  if (directed && model_.needs_undirected())
    throw std::invalid_argument(
        "change_stats: gwesp/gwnsp require an undirected graph");
  weights_.resize(model_.size());
  for (size_t t = 0; t < model_.terms.size(); ++t) {
    const auto& term = model_.terms[t];
    if (term.kind == TermKind::Edges) continue;
    auto& w = weights_[t];
    w.resize(std::max(n - 1, 1), 0.0);
    const double ephi = std::exp(term.phi);
    const double u = 1.0 - std::exp(-term.phi);
    double upow = 1.0;  // u^k
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
      w[k] = ephi * (1.0 - upow);
      upow *= u;
    }
  }
}

void ChangeStatCalc::compute(const Graph& g, int i, int j, double* out) const {
  if (i == j) throw std::invalid_argument("change_stats: i == j");
  const bool adding = !g.edge(i, j);
  const double sgn = adding ? 1.0 : -1.0;
  bool need_gw = false;
  for (size_t t = 0; t < model_.terms.size(); ++t) {
    out[t] = 0.0;
    if (model_.terms[t].kind == TermKind::Edges)
      out[t] = sgn;
    else
      need_gw = true;
  }
  if (!need_gw) return;

  // Shared-partner count of a dyad changes by +-1 exactly for dyads (i,k)
  // with k in N(j), and (j,k) with k in N(i). The shift direction matches
  // the toggle; the toggled dyad itself enters or leaves the edge set at
  // its own (unchanged) shared-partner count.
  const int c0 = popcount_and(g.row(i), g.row(j));
  const int delta = adding ? 1 : -1;
  auto accumulate_dyad = [&](int a, int k, bool is_edge) {
    // dyad (a,k) moves from c shared partners to c+delta
    const int c = popcount_and(g.row(a), g.row(k));
    for (size_t t = 0; t < model_.terms.size(); ++t) {
      const auto& term = model_.terms[t];
      if (term.kind == TermKind::Edges) continue;
      const bool wants_edge = term.kind == TermKind::Gwesp;
      if (is_edge != wants_edge) continue;
      out[t] += weights_[t][c + delta] - weights_[t][c];
    }
  };
  for (int k : g.neighbors(j)) {
    if (k == i) continue;
    accumulate_dyad(i, k, g.edge(i, k));
  }
  for (int k : g.neighbors(i)) {
    if (k == j) continue;
    accumulate_dyad(j, k, g.edge(j, k));
  }
  for (size_t t = 0; t < model_.terms.size(); ++t) {
    const auto& term = model_.terms[t];
    if (term.kind == TermKind::Edges) continue;
    const double w0 = weights_[t][c0];
    if (term.kind == TermKind::Gwesp)
      out[t] += sgn * w0;  // dyad (i,j) enters/leaves the edge set
    else
      out[t] -= sgn * w0;  // and leaves/enters the non-edge set
  }
}

StatVector change_stats(const Graph& g, const ModelSpec& model, int i, int j) {
  ChangeStatCalc calc(model, g.n(), g.directed());
  StatVector out(model.size());
  calc.compute(g, i, j, out.data());
  return out;
}

std::vector<long long> degree_distribution(const Graph& g) {
  int maxdeg = 0;
  for (int i = 0; i < g.n(); ++i) maxdeg = std::max(maxdeg, g.degree(i));
  std::vector<long long> dist(maxdeg + 1, 0);
  for (int i = 0; i < g.n(); ++i) ++dist[g.degree(i)];
  return dist;
}

long long GeodesicDistribution::total() const {
  long long t = unreachable;
  for (size_t d = 1; d < count_by_distance.size(); ++d)
    t += count_by_distance[d];
  return t;
}

GeodesicDistribution geodesic_distribution(const Graph& g) {
  const int n = g.n();
  std::vector<long long> counts(static_cast<size_t>(n) + 1, 0);
  long long unreachable = 0;

#pragma omp parallel if (n > 256)
  {
    std::vector<long long> lc(counts.size(), 0);
    long long lu = 0;
    std::vector<int> dist(n);
    std::vector<int> queue(n);
#pragma omp for schedule(dynamic, 8) nowait
    for (int s = 0; s < n; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      int head = 0, tail = 0;
      dist[s] = 0;
      queue[tail++] = s;
      while (head < tail) {
        const int u = queue[head++];
        for (int v : g.neighbors(u)) {
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            queue[tail++] = v;
          }
        }
      }
      for (int t = 0; t < n; ++t) {
        if (t == s) continue;
        if (!g.directed() && t < s) continue;  // unordered pairs once
        if (dist[t] < 0)
          ++lu;
        else
          ++lc[dist[t]];
      }
    }
#pragma omp critical
    {
      for (size_t d = 0; d < counts.size(); ++d) counts[d] += lc[d];
      unreachable += lu;
    }
  }
  GeodesicDistribution out;
  out.count_by_distance = std::move(counts);
  trim_zeros(out.count_by_distance);
  if (out.count_by_distance.empty()) out.count_by_distance.assign(1, 0);
  out.unreachable = unreachable;
  return out;
}

}  // namespace netbayes
