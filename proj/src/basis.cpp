#include "fdml/basis.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <utility>

#include "fdml/errors.hpp"
#include "fdml/grid.hpp"

namespace fdml {

BasisSystem BasisSystem::bspline(int order, int n_basis, double a, double b) {
  if (order < 1) throw InvalidParameterError("bspline order must be >= 1");
  if (n_basis < order) {
    throw InvalidParameterError("bspline needs n_basis >= order");
  }
  if (!(a < b)) throw InvalidParameterError("basis domain needs a < b");

  BasisSystem basis;
  basis.kind_ = BasisKind::bspline;
  basis.order_ = order;
  basis.n_basis_ = n_basis;
  basis.a_ = a;
  basis.b_ = b;

  // Clamped knot vector: each end repeated `order` times, interior knots
  // uniform. Total knots = n_basis + order.
  const int n_interior = n_basis - order;
  basis.knots_.reserve(static_cast<std::size_t>(n_basis + order));
  for (int i = 0; i < order; ++i) basis.knots_.push_back(a);
  for (int i = 1; i <= n_interior; ++i) {
    basis.knots_.push_back(a + (b - a) * i / (n_interior + 1));
  }
  for (int i = 0; i < order; ++i) basis.knots_.push_back(b);

  basis.compute_gram();
  return basis;
}

BasisSystem BasisSystem::fourier(int n_basis, double period, double a,
                                 double b) {
  if (n_basis < 1) throw InvalidParameterError("fourier needs n_basis >= 1");
  if (!(period > 0.0)) throw InvalidParameterError("fourier period must be > 0");
  if (!(a < b)) throw InvalidParameterError("basis domain needs a < b");

  BasisSystem basis;
  basis.kind_ = BasisKind::fourier;
  basis.n_basis_ = n_basis;
  basis.period_ = period;
  basis.a_ = a;
  basis.b_ = b;
  basis.compute_gram();
  return basis;
}

BasisSystem BasisSystem::closed_form(std::string name,
                                     std::vector<NamedFunction> functions,
                                     double a, double b,
                                     std::optional<Eigen::MatrixXd> exact_gram) {
  if (functions.empty()) {
    throw InvalidParameterError("closed_form basis needs at least one function");
  }
  if (!(a < b)) throw InvalidParameterError("basis domain needs a < b");

  BasisSystem basis;
  basis.kind_ = BasisKind::closed_form;
  basis.n_basis_ = static_cast<int>(functions.size());
  basis.a_ = a;
  basis.b_ = b;
  basis.name_ = std::move(name);
  for (auto& f : functions) {
    basis.function_names_.push_back(f.name);
    basis.functions_.push_back(std::move(f.fn));
  }
  if (exact_gram) {
    const auto& g = *exact_gram;
    if (g.rows() != basis.n_basis_ || g.cols() != basis.n_basis_) {
      throw InvalidParameterError("explicit Gram has wrong dimensions");
    }
    basis.gram_ = g;
    basis.has_exact_gram_ = true;
  }
  basis.compute_gram();
  return basis;
}

Eigen::VectorXd BasisSystem::evaluate(double t) const {
  switch (kind_) {
    case BasisKind::bspline:
      return evaluate_bspline(t);
    case BasisKind::fourier:
      return evaluate_fourier(t);
    case BasisKind::closed_form: {
      Eigen::VectorXd v(n_basis_);
      for (int k = 0; k < n_basis_; ++k) v(k) = functions_[k](t);
      return v;
    }
  }
  throw NumericFailureError("unreachable basis kind");
}

Eigen::MatrixXd BasisSystem::evaluate_at(const Eigen::VectorXd& ts) const {
  Eigen::MatrixXd design(ts.size(), n_basis_);
  for (Eigen::Index j = 0; j < ts.size(); ++j) {
    design.row(j) = evaluate(ts(j)).transpose();
  }
  return design;
}

Eigen::VectorXd BasisSystem::evaluate_bspline(double t) const {
  const int p = order_ - 1;  // polynomial degree
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_basis_);

  // Clamp to the closed domain; find the knot span [knots[mu], knots[mu+1]).
  t = std::clamp(t, a_, b_);
  int mu;
  if (t >= b_) {
    mu = n_basis_ - 1;  // right end belongs to the last span
  } else {
    mu = p;
    while (mu < n_basis_ - 1 && t >= knots_[static_cast<std::size_t>(mu + 1)]) {
      ++mu;
    }
  }

  // Triangular Cox-de Boor recurrence over the order_ nonzero functions
  // B_{mu-p}..B_{mu} (de Boor's stable formulation).
  std::vector<double> vals(static_cast<std::size_t>(order_), 0.0);
  std::vector<double> left(static_cast<std::size_t>(order_), 0.0);
  std::vector<double> right(static_cast<std::size_t>(order_), 0.0);
  vals[0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[static_cast<std::size_t>(j)] = t - knots_[static_cast<std::size_t>(mu + 1 - j)];
    right[static_cast<std::size_t>(j)] = knots_[static_cast<std::size_t>(mu + j)] - t;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double denom = right[static_cast<std::size_t>(r + 1)] +
                           left[static_cast<std::size_t>(j - r)];
      const double tmp = denom != 0.0 ? vals[static_cast<std::size_t>(r)] / denom : 0.0;
      vals[static_cast<std::size_t>(r)] =
          saved + right[static_cast<std::size_t>(r + 1)] * tmp;
      saved = left[static_cast<std::size_t>(j - r)] * tmp;
    }
    vals[static_cast<std::size_t>(j)] = saved;
  }

  for (int r = 0; r <= p; ++r) {
    const int idx = mu - p + r;
    if (idx >= 0 && idx < n_basis_) out(idx) = vals[static_cast<std::size_t>(r)];
  }
  return out;
}

Eigen::VectorXd BasisSystem::evaluate_fourier(double t) const {
  Eigen::VectorXd v(n_basis_);
  const double inv_sqrt_p = 1.0 / std::sqrt(period_);
  const double amp = std::sqrt(2.0 / period_);
  v(0) = inv_sqrt_p;
  int k = 1;
  int r = 1;
  while (k < n_basis_) {
    const double arg = 2.0 * M_PI * r * t / period_;
    v(k) = amp * std::sin(arg);
    ++k;
    if (k < n_basis_) {
      v(k) = amp * std::cos(arg);
      ++k;
    }
    ++r;
  }
  return v;
}

void BasisSystem::compute_gram() {
  if (gram_.size() == 0) {
    gram_ = gram_matrix(*this, kGramGridPoints);
  }
  // Validate: symmetric, eigenvalues bounded below by a small negative slack.
  const double asym = (gram_ - gram_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw NumericFailureError("Gram matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericFailureError("Gram eigendecomposition failed");
  }
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw NumericFailureError("Gram matrix is not positive semidefinite");
  }
}

bool BasisSystem::same_system(const BasisSystem& other) const noexcept {
  if (kind_ != other.kind_ || n_basis_ != other.n_basis_ || a_ != other.a_ ||
      b_ != other.b_) {
    return false;
  }
  switch (kind_) {
    case BasisKind::bspline:
      return order_ == other.order_;
    case BasisKind::fourier:
      return period_ == other.period_;
    case BasisKind::closed_form:
      return name_ == other.name_;
  }
  return false;
}

std::string BasisSystem::describe() const {
  switch (kind_) {
    case BasisKind::bspline:
      return "bspline(order=" + std::to_string(order_) +
             ", n=" + std::to_string(n_basis_) + ")";
    case BasisKind::fourier:
      return "fourier(n=" + std::to_string(n_basis_) + ")";
    case BasisKind::closed_form:
      return "closed_form(" + name_ + ", n=" + std::to_string(n_basis_) + ")";
  }
  return "basis";
}

Eigen::MatrixXd gram_matrix(const BasisSystem& basis, int fine_points) {
  if (basis.has_exact_gram()) {
    // An analytically supplied Gram takes precedence over quadrature.
    return basis.gram();
  }
  const Eigen::VectorXd ts = Eigen::VectorXd::LinSpaced(
      fine_points, basis.domain_lower(), basis.domain_upper());
  const Eigen::VectorXd w = trapezoidal_weights(ts);
  const Eigen::MatrixXd design = basis.evaluate_at(ts);
  if (!design.allFinite()) {
    throw NumericFailureError("basis evaluation produced non-finite values");
  }
  Eigen::MatrixXd g = design.transpose() * w.asDiagonal() * design;
  return ((g + g.transpose()) / 2.0).eval();
}

}  // namespace fdml
