#pragma once

#include <Eigen/Dense>

namespace apc {

/// Matrix exponential of a square matrix.
///
/// Exactly nilpotent inputs (A^2 == 0 or A^3 == 0 componentwise) take the
/// truncated-series path and are exact.  Otherwise scaling-and-squaring with
/// a Taylor core, relative accuracy around 1e-13 for moderate norms.
Eigen::MatrixXd expm(const Eigen::MatrixXd& A);

}  // namespace apc
