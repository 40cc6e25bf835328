#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fdml {

enum class BasisKind { bspline, fourier, closed_form };

/// A closed-form basis function together with a printable name.
struct NamedFunction {
  std::string name;
  std::function<double(double)> fn;
};

/// Truncated function basis phi_1..phi_K on a closed interval [a, b],
/// together with its Gram matrix of pairwise L2 inner products.
///
/// Supported families:
///  - B-splines with uniform interior knots and fully clamped ends. `order`
///    follows the classical FDA convention order = degree + 1, so order 3
///    means piecewise quadratics.
///  - Fourier: 1/sqrt(P), then sqrt(2/P) sin(2 pi r t / P) / cos(...) pairs.
///    Orthonormal over any interval whose length equals the period.
///  - Closed-form: arbitrary named function handles.
///
/// The Gram matrix is approximated on an internal fine grid with the
/// composite trapezoid rule and symmetrized, unless an exact Gram is supplied
/// at construction (useful when orthonormality is known analytically).
class BasisSystem {
 public:
  static constexpr int kGramGridPoints = 4097;

  static BasisSystem bspline(int order, int n_basis, double a, double b);
  static BasisSystem fourier(int n_basis, double period, double a, double b);
  static BasisSystem closed_form(
      std::string name, std::vector<NamedFunction> functions, double a,
      double b, std::optional<Eigen::MatrixXd> exact_gram = std::nullopt);

  /// All K basis functions evaluated at one in-domain point.
  Eigen::VectorXd evaluate(double t) const;

  /// Design matrix: row j holds the K basis values at ts(j).
  Eigen::MatrixXd evaluate_at(const Eigen::VectorXd& ts) const;

  const Eigen::MatrixXd& gram() const noexcept { return gram_; }

  int size() const noexcept { return n_basis_; }
  BasisKind kind() const noexcept { return kind_; }
  double domain_lower() const noexcept { return a_; }
  double domain_upper() const noexcept { return b_; }
  int order() const noexcept { return order_; }
  double period() const noexcept { return period_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& function_names() const noexcept {
    return function_names_;
  }

  /// True when the Gram matrix was supplied analytically at construction.
  bool has_exact_gram() const noexcept { return has_exact_gram_; }

  /// Structural identity: same family, parameters, and domain.
  bool same_system(const BasisSystem& other) const noexcept;

  /// Human-readable one-line description ("bspline(order=3, n=9)").
  std::string describe() const;

 private:
  BasisSystem() = default;

  void compute_gram();
  Eigen::VectorXd evaluate_bspline(double t) const;
  Eigen::VectorXd evaluate_fourier(double t) const;

  BasisKind kind_ = BasisKind::closed_form;
  int n_basis_ = 0;
  double a_ = 0.0;
  double b_ = 1.0;
  int order_ = 0;                       // bspline only
  std::vector<double> knots_;           // bspline only
  double period_ = 0.0;                 // fourier only
  std::string name_;                    // closed_form only
  std::vector<std::string> function_names_;
  std::vector<std::function<double(double)>> functions_;
  Eigen::MatrixXd gram_;
  bool has_exact_gram_ = false;
};

/// Gram matrix of pairwise basis inner products, recomputed on a fine grid
/// with `fine_points` nodes (the constructor caches the default-resolution
/// version; this free function exists for resolution studies and tests).
Eigen::MatrixXd gram_matrix(const BasisSystem& basis,
                            int fine_points = BasisSystem::kGramGridPoints);

}  // namespace fdml
