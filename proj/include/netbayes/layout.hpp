#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "netbayes/graph.hpp"

namespace netbayes {

enum class InitMethod { FruchtermanReingold, Random, GeodesicMDS };

InitMethod init_method_from_string(const std::string& s);

// Initial latent positions: finite coordinates centered at the origin.
Eigen::MatrixXd initial_positions(const Graph& g, int d, InitMethod method,
                                  uint64_t seed);

}  // namespace netbayes
