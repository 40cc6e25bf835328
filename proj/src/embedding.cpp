#include "fdml/embedding.hpp"

#include <cmath>

namespace fdml {

bool fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  Eigen::Index arg = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > best) {
      best = mag;
      arg = i;
    }
  }
  if (v(arg) < 0.0) {
    v = -v;
    return true;
  }
  return false;
}

}  // namespace fdml
