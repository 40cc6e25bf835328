#include "fdml/kernel.hpp"

#include <cmath>

#include "fdml/distance.hpp"
#include "fdml/errors.hpp"

namespace fdml {

std::string to_string(KernelFamily family) {
  return family == KernelFamily::gaussian ? "gaussian" : "laplacian";
}

KernelFamily kernel_family_from_string(const std::string& s) {
  if (s == "gaussian") return KernelFamily::gaussian;
  if (s == "laplacian") return KernelFamily::laplacian;
  throw InvalidParameterError("unknown kernel family '" + s + "'");
}

void KernelSpec::validate() const {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw InvalidBandwidthError("kernel bandwidth must be positive, got " +
                                std::to_string(bandwidth));
  }
}

namespace {

double gaussian_of_sq(double dist_sq, double sigma) {
  return std::exp(-dist_sq / (2.0 * sigma * sigma));
}

// Note the sigma^2 (not sigma) in the exponent; the two families then share
// the same hyperparameter grid conventions.
double laplacian_of_l1(double dist, double sigma) {
  return std::exp(-dist / (sigma * sigma));
}

}  // namespace

double kernel_value(const KernelSpec& spec, const FunctionalDataset& ds,
                    Eigen::Index i, Eigen::Index j) {
  spec.validate();
  if (i == j) return 1.0;
  if (spec.family == KernelFamily::gaussian) {
    double dist_sq = 0.0;
    if (const auto* d = std::get_if<DiscretizedDataset>(&ds)) {
      dist_sq = l2_distance_sq(d->grid(), d->values().row(i).transpose(),
                               d->values().row(j).transpose());
    } else {
      const auto& b = std::get<BasisDataset>(ds);
      dist_sq = l2_distance_sq(b.basis(), b.coefficients().row(i).transpose(),
                               b.coefficients().row(j).transpose());
    }
    return gaussian_of_sq(dist_sq, spec.bandwidth);
  }
  return laplacian_of_l1(l1_distance(ds, i, j), spec.bandwidth);
}

KernelMatrix build_kernel_matrix(const KernelSpec& spec,
                                 const FunctionalDataset& ds) {
  spec.validate();
  const Eigen::Index n = n_curves(ds);
  if (n < 2) {
    throw InvalidParameterError("kernel matrix needs at least 2 curves");
  }

  Eigen::MatrixXd k(n, n);
  if (spec.family == KernelFamily::gaussian) {
    // Reuse the distance dispatch once per pair; diagonal pinned to 1.
    if (const auto* d = std::get_if<DiscretizedDataset>(&ds)) {
      for (Eigen::Index i = 0; i < n; ++i) {
        k(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
          const double dist_sq =
              l2_distance_sq(d->grid(), d->values().row(i).transpose(),
                             d->values().row(j).transpose());
          const double v = gaussian_of_sq(dist_sq, spec.bandwidth);
          k(i, j) = v;
          k(j, i) = v;
        }
      }
    } else {
      const auto& b = std::get<BasisDataset>(ds);
      for (Eigen::Index i = 0; i < n; ++i) {
        k(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
          const double dist_sq =
              l2_distance_sq(b.basis(), b.coefficients().row(i).transpose(),
                             b.coefficients().row(j).transpose());
          const double v = gaussian_of_sq(dist_sq, spec.bandwidth);
          k(i, j) = v;
          k(j, i) = v;
        }
      }
    }
  } else {
    const Eigen::MatrixXd dist = pairwise_distances(ds, Metric::l1);
    for (Eigen::Index i = 0; i < n; ++i) {
      k(i, i) = 1.0;
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double v = laplacian_of_l1(dist(i, j), spec.bandwidth);
        k(i, j) = v;
        k(j, i) = v;
      }
    }
  }
  return KernelMatrix{std::move(k), spec};
}

}  // namespace fdml
