#include "fdml/dataset.hpp"

#include <charconv>
#include <cmath>
#include <utility>

#include "fdml/errors.hpp"

namespace fdml {

namespace {

void check_labels(const std::optional<Labels>& labels, Eigen::Index n) {
  if (labels && static_cast<Eigen::Index>(labels->size()) != n) {
    throw InvalidParameterError("label count does not match curve count");
  }
}

}  // namespace

DiscretizedDataset::DiscretizedDataset(SamplingGrid grid,
                                       Eigen::MatrixXd values,
                                       std::optional<Labels> labels)
    : grid_(std::move(grid)),
      values_(std::move(values)),
      labels_(std::move(labels)) {
  if (values_.cols() != grid_.size()) {
    throw InvalidGridError("value columns (" + std::to_string(values_.cols()) +
                           ") do not match grid size (" +
                           std::to_string(grid_.size()) + ")");
  }
  if (!values_.allFinite()) {
    throw InvalidParameterError("dataset contains non-finite values");
  }
  check_labels(labels_, values_.rows());
}

BasisDataset::BasisDataset(BasisSystem basis, Eigen::MatrixXd coefficients,
                           std::optional<Labels> labels)
    : basis_(std::move(basis)),
      coefficients_(std::move(coefficients)),
      labels_(std::move(labels)) {
  if (coefficients_.cols() != basis_.size()) {
    throw InvalidParameterError("coefficient columns do not match basis size");
  }
  if (!coefficients_.allFinite()) {
    throw InvalidParameterError("dataset contains non-finite coefficients");
  }
  check_labels(labels_, coefficients_.rows());
}

Eigen::MatrixXd BasisDataset::sample(const Eigen::VectorXd& points) const {
  return coefficients_ * basis_.evaluate_at(points).transpose();
}

Eigen::Index n_curves(const FunctionalDataset& ds) {
  return std::visit([](const auto& d) { return d.n_curves(); }, ds);
}

const std::optional<Labels>& labels_of(const FunctionalDataset& ds) {
  return std::visit(
      [](const auto& d) -> const std::optional<Labels>& { return d.labels(); },
      ds);
}

bool same_representation(const FunctionalDataset& a,
                         const FunctionalDataset& b) {
  if (const auto* da = std::get_if<DiscretizedDataset>(&a)) {
    const auto* db = std::get_if<DiscretizedDataset>(&b);
    return db != nullptr && da->grid().same_points(db->grid());
  }
  const auto& ba = std::get<BasisDataset>(a);
  const auto* bb = std::get_if<BasisDataset>(&b);
  return bb != nullptr && ba.basis().same_system(bb->basis());
}

DiscretizedDataset multivariate_view(const FunctionalDataset& ds) {
  if (const auto* d = std::get_if<DiscretizedDataset>(&ds)) {
    return DiscretizedDataset(SamplingGrid::unit(d->n_points()), d->values(),
                              d->labels());
  }
  const auto& b = std::get<BasisDataset>(ds);
  return DiscretizedDataset(SamplingGrid::unit(b.n_basis()), b.coefficients(),
                            b.labels());
}

std::vector<double> numeric_labels(const Labels& labels) {
  std::vector<double> out;
  out.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string& s = labels[i];
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() ||
        !std::isfinite(v)) {
      throw ParseError("label '" + s + "' at index " + std::to_string(i) +
                       " is not numeric");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace fdml
