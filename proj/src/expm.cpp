#include "apc/expm.hpp"

#include <cmath>
#include <stdexcept>

namespace apc {

Eigen::MatrixXd expm(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols()) {
    throw std::invalid_argument("expm: matrix must be square");
  }
  const Eigen::Index n = A.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);

  const Eigen::MatrixXd A2 = A * A;
  if (A2.isZero(0.0)) {
    return I + A;
  }
  const Eigen::MatrixXd A3 = A2 * A;
  if (A3.isZero(0.0)) {
    return I + A + 0.5 * A2;
  }

  // Scale so the infinity norm is at most 1/2, run the Taylor series to
  // machine-level tail, then square back up.
  const double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scaled = norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  const Eigen::MatrixXd B = A / std::ldexp(1.0, squarings);

  Eigen::MatrixXd term = I;
  Eigen::MatrixXd sum = I;
  for (int k = 1; k <= 40; ++k) {
    term = (term * B) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18 * sum.cwiseAbs().maxCoeff()) {
      break;
    }
  }
  for (int k = 0; k < squarings; ++k) {
    sum = sum * sum;
  }
  return sum;
}

}  // namespace apc
