#pragma once

#include <string>

#include <Eigen/Dense>

#include "apc/lie3.hpp"

namespace apc {

/// Connection coefficients nabla_{E_i} E_j = Gamma[i][j][k] E_k of the
/// left-invariant Levi-Civita connection.
struct ConnectionCoefficients {
  double gamma[3][3][3] = {};
};

/// Koszul formula specialised to left-invariant fields:
///   Gamma_ij^k = eps_k/2 ( g([Ei,Ej],Ek) + g([Ek,Ei],Ej) + g([Ek,Ej],Ei) ).
/// Throws std::invalid_argument when Jacobi fails.
ConnectionCoefficients levi_civita(const LieAlgebra3& L);

enum class EinsteinType {
  flat,
  einstein,
  eta_einstein,
  ric_proportional_eta_eta,
  generic,
};

std::string to_string(EinsteinType t);

/// Curvature of the left-invariant connection with the sign convention
///   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z,
///   Ric(Y,Z) = sum_i eps_i g(R(E_i,Y)Z, E_i),  scal = sum_j eps_j Ric_jj.
struct CurvatureData {
  /// R(E_i,E_j) E_k = riemann[i][j][k][l] E_l.
  double riemann[3][3][3][3] = {};
  Eigen::Matrix3d ricci = Eigen::Matrix3d::Zero();
  double scalar = 0.0;
  /// Least-squares fit Ric = fit_a g + fit_b eta (x) eta.
  double fit_a = 0.0;
  double fit_b = 0.0;
  double fit_residual = 0.0;
  EinsteinType einstein_type = EinsteinType::generic;
};

/// Curvature, Ricci, scalar and the Einstein-type fit from precomputed
/// connection coefficients.  Internal consistency (antisymmetry, first
/// Bianchi, Ricci symmetry) is asserted; violations throw std::logic_error.
CurvatureData curvature(const LieAlgebra3& L,
                        const ConnectionCoefficients& gamma);

}  // namespace apc
