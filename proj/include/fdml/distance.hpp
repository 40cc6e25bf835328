#pragma once

#include <Eigen/Core>

#include "fdml/basis.hpp"
#include "fdml/dataset.hpp"
#include "fdml/grid.hpp"

namespace fdml {

inline constexpr int kL1FineGridPoints = 512;

/// Squared L2 distance of two sampled curves under the grid's quadrature:
/// sum_j w_j (x_j - y_j)^2.
double l2_distance_sq(const SamplingGrid& grid, const Eigen::VectorXd& x,
                      const Eigen::VectorXd& y);

/// Squared L2 distance of two coefficient vectors under the basis Gram
/// metric: (cx - cy)^T G (cx - cy).
double l2_distance_sq(const BasisSystem& basis, const Eigen::VectorXd& cx,
                      const Eigen::VectorXd& cy);

double l2_distance(const SamplingGrid& grid, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y);
double l2_distance(const BasisSystem& basis, const Eigen::VectorXd& cx,
                   const Eigen::VectorXd& cy);

/// L1 distance sum_j w_j |x_j - y_j| on the grid.
double l1_distance(const SamplingGrid& grid, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y);

/// L1 distance for basis curves: both are sampled on an internal uniform
/// fine grid (no closed form exists in general) and the grid rule applied.
double l1_distance(const BasisSystem& basis, const Eigen::VectorXd& cx,
                   const Eigen::VectorXd& cy,
                   int fine_points = kL1FineGridPoints);

/// Curve-pair distances inside one dataset.
double l2_distance(const FunctionalDataset& ds, Eigen::Index i, Eigen::Index j);
double l1_distance(const FunctionalDataset& ds, Eigen::Index i, Eigen::Index j);

/// Cross-dataset variants; throw RepresentationMismatchError unless both
/// datasets share the same grid or basis.
double l2_distance(const FunctionalDataset& a, Eigen::Index i,
                   const FunctionalDataset& b, Eigen::Index j);
double l1_distance(const FunctionalDataset& a, Eigen::Index i,
                   const FunctionalDataset& b, Eigen::Index j);

enum class Metric { l2, l1 };

/// Dense symmetric matrix of pairwise distances (zero diagonal). Entries are
/// computed for the upper triangle and mirrored.
Eigen::MatrixXd pairwise_distances(const FunctionalDataset& ds, Metric metric);

}  // namespace fdml
