#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "apc/lie3.hpp"

namespace apc {

/// Adjoint representation data: M_i = ad_{E_i} as a 3x3 matrix acting on
/// coordinates, and the combination A(a,b,c) = a M1 + b M2 + c M3.
struct AdjointData {
  Eigen::Matrix3d m1 = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d m2 = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d m3 = Eigen::Matrix3d::Zero();

  Eigen::Matrix3d a_of(double a, double b, double c) const {
    return a * m1 + b * m2 + c * m3;
  }
};

/// ad matrices of the algebra: (M_i)_kj = C_ij^k.
AdjointData adjoint(const LieAlgebra3& L);

/// Group element in the adjoint picture.
struct GroupElement {
  Eigen::Matrix3d mat = Eigen::Matrix3d::Identity();
};

/// Numerical exponential of a 3x3 algebra element (exact on nilpotent
/// input, scaling-and-squaring otherwise).
GroupElement mat_exp(const Eigen::Matrix3d& A);

/// Closed-form exponential of A(a,b,c) for the canonical families,
/// dispatching on the analytic branch of the parameters.  Branch
/// discriminants are resolved at absolute tolerance 1e-12.  Throws
/// std::invalid_argument for unknown names or degenerate family parameters.
GroupElement closed_form_exp(const std::string& family,
                             const std::vector<double>& params, double a,
                             double b, double c);

}  // namespace apc
