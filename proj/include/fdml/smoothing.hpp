#pragma once

#include "fdml/dataset.hpp"

namespace fdml {

/// Weighted least-squares projection of sampled curves onto a basis: per
/// curve, minimizes sum_j w_j (x(t_j) - c^T phi(t_j))^2 over coefficients c.
/// Requires K <= M and the basis domain to cover the grid span. Throws
/// SingularFitError when the design matrix is rank deficient.
BasisDataset smooth_to_basis(const DiscretizedDataset& raw,
                             const BasisSystem& basis);

}  // namespace fdml
