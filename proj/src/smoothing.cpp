#include "fdml/smoothing.hpp"

#include <Eigen/QR>
#include <cmath>

#include "fdml/errors.hpp"

namespace fdml {

BasisDataset smooth_to_basis(const DiscretizedDataset& raw,
                             const BasisSystem& basis) {
  const Eigen::Index m = raw.n_points();
  const Eigen::Index k = basis.size();
  if (k > m) {
    throw InvalidParameterError("basis size " + std::to_string(k) +
                                " exceeds grid size " + std::to_string(m));
  }
  const double lo = raw.grid().points()(0);
  const double hi = raw.grid().points()(m - 1);
  if (lo < basis.domain_lower() - 1e-12 || hi > basis.domain_upper() + 1e-12) {
    throw InvalidParameterError("basis domain does not cover the grid span");
  }

  // Solve the weighted normal problem via QR of sqrt(W) Phi, one shared
  // factorization for all curves.
  const Eigen::MatrixXd design = basis.evaluate_at(raw.grid().points());
  const Eigen::VectorXd sqrt_w = raw.grid().weights().cwiseSqrt();
  const Eigen::MatrixXd weighted_design = sqrt_w.asDiagonal() * design;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(weighted_design);
  qr.setThreshold(1e-10);
  if (qr.rank() < k) {
    throw SingularFitError("rank-deficient design matrix for basis " +
                           basis.describe() + " (rank " +
                           std::to_string(qr.rank()) + " of " +
                           std::to_string(k) + ")");
  }

  const Eigen::MatrixXd weighted_rhs =
      sqrt_w.asDiagonal() * raw.values().transpose();  // m x n
  Eigen::MatrixXd coefficients = qr.solve(weighted_rhs).transpose();  // n x k
  return BasisDataset(basis, std::move(coefficients), raw.labels());
}

}  // namespace fdml
