#include "fdml/grid.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fdml/errors.hpp"

namespace fdml {

namespace {

void check_points(const Eigen::VectorXd& points) {
  if (points.size() < 2) {
    throw InvalidGridError("grid needs at least 2 points, got " +
                           std::to_string(points.size()));
  }
  for (Eigen::Index j = 0; j < points.size(); ++j) {
    if (!std::isfinite(points(j))) {
      throw InvalidGridError("grid point " + std::to_string(j) +
                             " is not finite");
    }
    if (j > 0 && points(j) <= points(j - 1)) {
      throw InvalidGridError("grid points must be strictly increasing (index " +
                             std::to_string(j) + ")");
    }
  }
}

}  // namespace

Eigen::VectorXd trapezoidal_weights(const Eigen::VectorXd& points) {
  check_points(points);
  const Eigen::Index m = points.size();
  Eigen::VectorXd w(m);
  w(0) = (points(1) - points(0)) / 2.0;
  w(m - 1) = (points(m - 1) - points(m - 2)) / 2.0;
  for (Eigen::Index j = 1; j < m - 1; ++j) {
    w(j) = (points(j + 1) - points(j - 1)) / 2.0;
  }
  return w;
}

SamplingGrid::SamplingGrid(Eigen::VectorXd points, Eigen::VectorXd weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  check_points(points_);
  if (weights_.size() != points_.size()) {
    throw InvalidGridError("weight count does not match point count");
  }
  for (Eigen::Index j = 0; j < weights_.size(); ++j) {
    if (!std::isfinite(weights_(j)) || weights_(j) < 0.0) {
      throw InvalidGridError("quadrature weight " + std::to_string(j) +
                             " must be finite and nonnegative");
    }
  }
}

SamplingGrid SamplingGrid::trapezoidal(Eigen::VectorXd points) {
  Eigen::VectorXd w = trapezoidal_weights(points);
  return SamplingGrid(std::move(points), std::move(w));
}

SamplingGrid SamplingGrid::with_weights(Eigen::VectorXd points,
                                        Eigen::VectorXd weights) {
  return SamplingGrid(std::move(points), std::move(weights));
}

SamplingGrid SamplingGrid::uniform(double a, double b, Eigen::Index m) {
  if (!(a < b)) throw InvalidGridError("uniform grid needs a < b");
  return trapezoidal(Eigen::VectorXd::LinSpaced(m, a, b));
}

SamplingGrid SamplingGrid::unit(Eigen::Index m) {
  if (m < 2) throw InvalidGridError("grid needs at least 2 points");
  return SamplingGrid(
      Eigen::VectorXd::LinSpaced(m, 0.0, static_cast<double>(m - 1)),
      Eigen::VectorXd::Ones(m));
}

bool SamplingGrid::same_points(const SamplingGrid& other) const noexcept {
  return points_.size() == other.points_.size() && points_ == other.points_;
}

}  // namespace fdml
