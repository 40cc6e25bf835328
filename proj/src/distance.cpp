#include "fdml/distance.hpp"

#include <cmath>
#include <string>

#include "fdml/errors.hpp"

namespace fdml {

namespace {

void check_length(Eigen::Index expected, Eigen::Index got, const char* what) {
  if (expected != got) {
    throw RepresentationMismatchError(std::string(what) + ": expected length " +
                                      std::to_string(expected) + ", got " +
                                      std::to_string(got));
  }
}

}  // namespace

// Both squared-distance kernels accumulate term by term in index order. With
// unit weights (resp. an identity Gram) they produce bitwise identical sums,
// which keeps the functional and multivariate pipelines exactly comparable
// on coefficient data.
double l2_distance_sq(const SamplingGrid& grid, const Eigen::VectorXd& x,
                      const Eigen::VectorXd& y) {
  check_length(grid.size(), x.size(), "l2 first curve");
  check_length(grid.size(), y.size(), "l2 second curve");
  const Eigen::VectorXd& w = grid.weights();
  double acc = 0.0;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double d = x(k) - y(k);
    acc += w(k) * (d * d);
  }
  return acc;
}

double l2_distance_sq(const BasisSystem& basis, const Eigen::VectorXd& cx,
                      const Eigen::VectorXd& cy) {
  check_length(basis.size(), cx.size(), "l2 first coefficient vector");
  check_length(basis.size(), cy.size(), "l2 second coefficient vector");
  const Eigen::VectorXd diff = cx - cy;
  const Eigen::VectorXd gram_diff = basis.gram() * diff;
  double acc = 0.0;
  for (Eigen::Index k = 0; k < diff.size(); ++k) {
    acc += diff(k) * gram_diff(k);
  }
  return acc > 0.0 ? acc : 0.0;  // Gram PSD up to rounding
}

double l2_distance(const SamplingGrid& grid, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y) {
  return std::sqrt(l2_distance_sq(grid, x, y));
}

double l2_distance(const BasisSystem& basis, const Eigen::VectorXd& cx,
                   const Eigen::VectorXd& cy) {
  return std::sqrt(l2_distance_sq(basis, cx, cy));
}

double l1_distance(const SamplingGrid& grid, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y) {
  check_length(grid.size(), x.size(), "l1 first curve");
  check_length(grid.size(), y.size(), "l1 second curve");
  double acc = 0.0;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    acc += grid.weights()(k) * std::abs(x(k) - y(k));
  }
  return acc;
}

double l1_distance(const BasisSystem& basis, const Eigen::VectorXd& cx,
                   const Eigen::VectorXd& cy, int fine_points) {
  check_length(basis.size(), cx.size(), "l1 first coefficient vector");
  check_length(basis.size(), cy.size(), "l1 second coefficient vector");
  const Eigen::VectorXd ts = Eigen::VectorXd::LinSpaced(
      fine_points, basis.domain_lower(), basis.domain_upper());
  const Eigen::VectorXd w = trapezoidal_weights(ts);
  const Eigen::VectorXd diff = basis.evaluate_at(ts) * (cx - cy);
  return w.dot(diff.cwiseAbs());
}

double l2_distance(const FunctionalDataset& ds, Eigen::Index i,
                   Eigen::Index j) {
  return l2_distance(ds, i, ds, j);
}

double l1_distance(const FunctionalDataset& ds, Eigen::Index i,
                   Eigen::Index j) {
  return l1_distance(ds, i, ds, j);
}

double l2_distance(const FunctionalDataset& a, Eigen::Index i,
                   const FunctionalDataset& b, Eigen::Index j) {
  if (!same_representation(a, b)) {
    throw RepresentationMismatchError(
        "cannot compare curves across different grids or bases");
  }
  if (const auto* da = std::get_if<DiscretizedDataset>(&a)) {
    const auto& db = std::get<DiscretizedDataset>(b);
    return l2_distance(da->grid(), da->values().row(i).transpose(),
                       db.values().row(j).transpose());
  }
  const auto& ba = std::get<BasisDataset>(a);
  const auto& bb = std::get<BasisDataset>(b);
  return l2_distance(ba.basis(), ba.coefficients().row(i).transpose(),
                     bb.coefficients().row(j).transpose());
}

double l1_distance(const FunctionalDataset& a, Eigen::Index i,
                   const FunctionalDataset& b, Eigen::Index j) {
  if (!same_representation(a, b)) {
    throw RepresentationMismatchError(
        "cannot compare curves across different grids or bases");
  }
  if (const auto* da = std::get_if<DiscretizedDataset>(&a)) {
    const auto& db = std::get<DiscretizedDataset>(b);
    return l1_distance(da->grid(), da->values().row(i).transpose(),
                       db.values().row(j).transpose());
  }
  const auto& ba = std::get<BasisDataset>(a);
  const auto& bb = std::get<BasisDataset>(b);
  return l1_distance(ba.basis(), ba.coefficients().row(i).transpose(),
                     bb.coefficients().row(j).transpose());
}

Eigen::MatrixXd pairwise_distances(const FunctionalDataset& ds, Metric metric) {
  const Eigen::Index n = n_curves(ds);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);

  if (const auto* disc = std::get_if<DiscretizedDataset>(&ds)) {
    const auto& grid = disc->grid();
    const auto& values = disc->values();
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double dist =
            metric == Metric::l2
                ? l2_distance(grid, values.row(i).transpose(),
                              values.row(j).transpose())
                : l1_distance(grid, values.row(i).transpose(),
                              values.row(j).transpose());
        d(i, j) = dist;
        d(j, i) = dist;
      }
    }
    return d;
  }

  const auto& bd = std::get<BasisDataset>(ds);
  const auto& coeff = bd.coefficients();
  if (metric == Metric::l2) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double dist = l2_distance(bd.basis(), coeff.row(i).transpose(),
                                        coeff.row(j).transpose());
        d(i, j) = dist;
        d(j, i) = dist;
      }
    }
    return d;
  }

  // L1 on basis data: sample every curve on the fine grid once, then reuse.
  const Eigen::VectorXd ts = Eigen::VectorXd::LinSpaced(
      kL1FineGridPoints, bd.basis().domain_lower(), bd.basis().domain_upper());
  const Eigen::VectorXd w = trapezoidal_weights(ts);
  const Eigen::MatrixXd sampled = bd.sample(ts);  // n x fine
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double dist =
          w.dot((sampled.row(i) - sampled.row(j)).cwiseAbs().transpose());
      d(i, j) = dist;
      d(j, i) = dist;
    }
  }
  return d;
}

}  // namespace fdml
