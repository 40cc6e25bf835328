#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fdml/basis.hpp"
#include "fdml/grid.hpp"

namespace fdml {

using Labels = std::vector<std::string>;

/// N curves sampled on a shared grid; row i holds x_i(t_1..t_M).
class DiscretizedDataset {
 public:
  DiscretizedDataset(SamplingGrid grid, Eigen::MatrixXd values,
                     std::optional<Labels> labels = std::nullopt);

  const SamplingGrid& grid() const noexcept { return grid_; }
  const Eigen::MatrixXd& values() const noexcept { return values_; }
  const std::optional<Labels>& labels() const noexcept { return labels_; }

  Eigen::Index n_curves() const noexcept { return values_.rows(); }
  Eigen::Index n_points() const noexcept { return values_.cols(); }

 private:
  SamplingGrid grid_;
  Eigen::MatrixXd values_;
  std::optional<Labels> labels_;
};

/// N curves as coefficient rows in a truncated basis: x_i = c_i^T phi.
class BasisDataset {
 public:
  BasisDataset(BasisSystem basis, Eigen::MatrixXd coefficients,
               std::optional<Labels> labels = std::nullopt);

  const BasisSystem& basis() const noexcept { return basis_; }
  const Eigen::MatrixXd& coefficients() const noexcept { return coefficients_; }
  const std::optional<Labels>& labels() const noexcept { return labels_; }

  Eigen::Index n_curves() const noexcept { return coefficients_.rows(); }
  Eigen::Index n_basis() const noexcept { return coefficients_.cols(); }

  /// Samples all curves on the given points (rows = curves).
  Eigen::MatrixXd sample(const Eigen::VectorXd& points) const;

 private:
  BasisSystem basis_;
  Eigen::MatrixXd coefficients_;
  std::optional<Labels> labels_;
};

/// Either representation; all downstream operations accept both.
using FunctionalDataset = std::variant<DiscretizedDataset, BasisDataset>;

Eigen::Index n_curves(const FunctionalDataset& ds);
const std::optional<Labels>& labels_of(const FunctionalDataset& ds);

/// True if both datasets use the same representation on the same grid/basis.
bool same_representation(const FunctionalDataset& a, const FunctionalDataset& b);

/// Drops the functional structure: sample values (or basis coefficients)
/// become plain feature vectors on a unit-weight index grid. This is the
/// input treatment of ordinary multivariate diffusion maps.
DiscretizedDataset multivariate_view(const FunctionalDataset& ds);

/// Parses labels as reals; throws ParseError on the first non-numeric label.
std::vector<double> numeric_labels(const Labels& labels);

}  // namespace fdml
