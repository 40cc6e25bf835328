#pragma once

#include <Eigen/Core>

namespace fdml {

/// Composite-trapezoid quadrature weights for an arbitrary strictly
/// increasing point set:
///   w_1 = (t_2 - t_1)/2,  w_M = (t_M - t_{M-1})/2,
///   w_j = (t_{j+1} - t_{j-1})/2 otherwise.
/// The weights always sum to the grid span t_M - t_1.
Eigen::VectorXd trapezoidal_weights(const Eigen::VectorXd& points);

/// Shared evaluation grid of a discretized functional sample: ordered
/// abscissae plus quadrature weights that turn pointwise sums into
/// approximate integrals over [t_1, t_M].
class SamplingGrid {
 public:
  /// Trapezoidal weights derived from the points.
  static SamplingGrid trapezoidal(Eigen::VectorXd points);

  /// Caller-supplied weights (must be nonnegative).
  static SamplingGrid with_weights(Eigen::VectorXd points,
                                   Eigen::VectorXd weights);

  /// m equispaced points covering [a, b], trapezoidal weights.
  static SamplingGrid uniform(double a, double b, Eigen::Index m);

  /// Points 0, 1, ..., m-1 with unit weights; the multivariate view used by
  /// plain (non-functional) diffusion maps.
  static SamplingGrid unit(Eigen::Index m);

  const Eigen::VectorXd& points() const noexcept { return points_; }
  const Eigen::VectorXd& weights() const noexcept { return weights_; }
  Eigen::Index size() const noexcept { return points_.size(); }
  double span() const noexcept {
    return points_(points_.size() - 1) - points_(0);
  }

  bool same_points(const SamplingGrid& other) const noexcept;

 private:
  SamplingGrid(Eigen::VectorXd points, Eigen::VectorXd weights);

  Eigen::VectorXd points_;
  Eigen::VectorXd weights_;
};

}  // namespace fdml
