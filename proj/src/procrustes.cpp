#include "netbayes/procrustes.hpp"

#include <stdexcept>

namespace netbayes {

Eigen::MatrixXd procrustes_rotate(const Eigen::MatrixXd& X,
                                  const Eigen::MatrixXd& Y) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols())
    throw std::invalid_argument("procrustes_rotate: shape mismatch");
  const Eigen::RowVectorXd xc = X.colwise().mean();
  const Eigen::RowVectorXd yc = Y.colwise().mean();
  const Eigen::MatrixXd Xc = X.rowwise() - xc;
  const Eigen::MatrixXd Yc = Y.rowwise() - yc;
  const Eigen::MatrixXd M = Xc.transpose() * Yc;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd R = svd.matrixU() * svd.matrixV().transpose();
  return (Xc * R).rowwise() + yc;
}

}  // namespace netbayes
