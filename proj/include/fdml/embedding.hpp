#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace fdml {

/// Low-dimensional coordinates for N curves. Column l carries the
/// eigenvalue and spectral index it was built from, so exports stay
/// self-describing across methods.
struct Embedding {
  Eigen::MatrixXd coordinates;  // N x L
  std::string method;           // "fdm", "dm", "fpca", "isomap"
  std::vector<double> axis_eigenvalues;
  std::vector<int> axis_components;  // 1-based spectral index per column

  Eigen::Index n_points() const noexcept { return coordinates.rows(); }
  Eigen::Index dimension() const noexcept { return coordinates.cols(); }
};

/// Fixes the sign of a vector so its largest-magnitude entry is positive
/// (first such entry on ties). Returns true when the vector was flipped.
/// Eigenvectors are defined only up to sign; pinning it makes exports and
/// golden files reproducible.
bool fix_sign(Eigen::Ref<Eigen::VectorXd> v);

}  // namespace fdml
