#pragma once

#include <Eigen/Dense>

namespace netbayes {

// Transform of X minimizing the Frobenius distance to Y over rotations,
// reflections, and translations (orthogonal Procrustes after centering).
Eigen::MatrixXd procrustes_rotate(const Eigen::MatrixXd& X,
                                  const Eigen::MatrixXd& Y);

}  // namespace netbayes
