#pragma once

// Naive single-threaded reference implementations, kept deliberately
// independent of the optimized kernels: direct definitions, no bit tricks,
// no incremental updates. Tests compare the optimized paths against these;
// the benchmark tool measures the gap.

#include <vector>

#include "netbayes/graph.hpp"
#include "netbayes/netstats.hpp"

namespace netbayes::reference {

int shared_partners(const Graph& g, int i, int j);
std::vector<long long> esp_counts(const Graph& g);
std::vector<long long> nsp_counts(const Graph& g);
double gwesp(const Graph& g, double phi);
double gwnsp(const Graph& g, double phi);
StatVector stat_vector(const Graph& g, const ModelSpec& model);

// s(toggled) - s(current) by full recomputation on a copy.
StatVector change_stats(const Graph& g, const ModelSpec& model, int i, int j);

// All-pairs shortest paths via Floyd-Warshall.
GeodesicDistribution geodesic_distribution(const Graph& g);

}  // namespace netbayes::reference
