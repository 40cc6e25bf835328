#pragma once

#include <Eigen/Core>
#include <string>

#include "fdml/dataset.hpp"

namespace fdml {

enum class KernelFamily { gaussian, laplacian };

std::string to_string(KernelFamily family);
KernelFamily kernel_family_from_string(const std::string& s);

/// Radial similarity kernel on functional data:
///   gaussian:  exp(-||x - y||_L2^2 / (2 sigma^2))
///   laplacian: exp(-||x - y||_L1 / sigma^2)
struct KernelSpec {
  KernelFamily family = KernelFamily::gaussian;
  double bandwidth = 1.0;  // sigma

  void validate() const;
};

/// Dense symmetric kernel matrix with unit diagonal and entries in (0, 1].
struct KernelMatrix {
  Eigen::MatrixXd entries;
  KernelSpec spec;

  Eigen::Index size() const noexcept { return entries.rows(); }
};

double kernel_value(const KernelSpec& spec, const FunctionalDataset& ds,
                    Eigen::Index i, Eigen::Index j);

/// Evaluates the kernel over all pairs. The upper triangle is computed and
/// mirrored, so the result is symmetric bit for bit.
KernelMatrix build_kernel_matrix(const KernelSpec& spec,
                                 const FunctionalDataset& ds);

}  // namespace fdml
