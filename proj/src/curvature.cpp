#include "apc/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace apc {

namespace {

constexpr double kEps[3] = {1.0, -1.0, 1.0};

}  // namespace

ConnectionCoefficients levi_civita(const LieAlgebra3& L) {
  if (!check_jacobi(L)) {
    throw std::invalid_argument("levi_civita: Jacobi identity fails");
  }
  ConnectionCoefficients cc;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        // Diagonal metric turns g([Ea,Eb],Ec) into eps_c C_ab^c.
        const double v = kEps[k] * L.c(i, j, k) + kEps[j] * L.c(k, i, j) +
                         kEps[i] * L.c(k, j, i);
        cc.gamma[i][j][k] = 0.5 * kEps[k] * v;
      }
  return cc;
}

std::string to_string(EinsteinType t) {
  switch (t) {
    case EinsteinType::flat:
      return "flat";
    case EinsteinType::einstein:
      return "einstein";
    case EinsteinType::eta_einstein:
      return "eta_einstein";
    case EinsteinType::ric_proportional_eta_eta:
      return "ric_proportional_eta_eta";
    case EinsteinType::generic:
      return "generic";
  }
  return "generic";
}

CurvatureData curvature(const LieAlgebra3& L,
                        const ConnectionCoefficients& cc) {
  CurvatureData out;
  const auto& ga = cc.gamma;

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double v = 0.0;
          for (int m = 0; m < 3; ++m) {
            v += ga[j][k][m] * ga[i][m][l] - ga[i][k][m] * ga[j][m][l] -
                 L.c(i, j, m) * ga[m][k][l];
          }
          out.riemann[i][j][k][l] = v;
        }

  double rmax = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          rmax = std::max(rmax, std::abs(out.riemann[i][j][k][l]));
  const double thr = 1e-10 * std::max(1.0, rmax);

  // R(X,Y) = -R(Y,X) and the first Bianchi identity.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          if (std::abs(out.riemann[i][j][k][l] + out.riemann[j][i][k][l]) >
              thr) {
            throw std::logic_error("curvature: antisymmetry violated");
          }
          if (std::abs(out.riemann[i][j][k][l] + out.riemann[j][k][i][l] +
                       out.riemann[k][i][j][l]) > thr) {
            throw std::logic_error("curvature: first Bianchi identity violated");
          }
        }

  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      double v = 0.0;
      for (int i = 0; i < 3; ++i) v += out.riemann[i][j][k][i];
      out.ricci(j, k) = v;
    }
  if ((out.ricci - out.ricci.transpose()).cwiseAbs().maxCoeff() > thr) {
    throw std::logic_error("curvature: Ricci tensor is not symmetric");
  }

  out.scalar = 0.0;
  for (int j = 0; j < 3; ++j) out.scalar += kEps[j] * out.ricci(j, j);

  // Least-squares fit Ric = a g + b eta (x) eta; the two model tensors are
  // not orthogonal (<g,eta x eta>_F = 1), so solve the 2x2 normal equations.
  const Eigen::Matrix3d g = Eigen::Vector3d(1, -1, 1).asDiagonal();
  Eigen::Matrix3d ee = Eigen::Matrix3d::Zero();
  ee(2, 2) = 1.0;
  const double rg = (out.ricci.cwiseProduct(g)).sum();
  const double re = (out.ricci.cwiseProduct(ee)).sum();
  Eigen::Matrix2d gram;
  gram << 3.0, 1.0, 1.0, 1.0;
  const Eigen::Vector2d ab = gram.ldlt().solve(Eigen::Vector2d(rg, re));
  out.fit_a = ab(0);
  out.fit_b = ab(1);
  out.fit_residual =
      (out.ricci - ab(0) * g - ab(1) * ee).cwiseAbs().maxCoeff();

  const double cmax = std::max({L.c12.cwiseAbs().maxCoeff(),
                                L.c13.cwiseAbs().maxCoeff(),
                                L.c23.cwiseAbs().maxCoeff()});
  const double ric_scale = std::max(1.0, out.ricci.cwiseAbs().maxCoeff());
  const double fit_thr = 1e-9 * ric_scale;
  if (rmax <= 1e-9 * std::max(1.0, cmax * cmax)) {
    out.einstein_type = EinsteinType::flat;
  } else if (out.fit_residual > fit_thr) {
    out.einstein_type = EinsteinType::generic;
  } else if (std::abs(out.fit_b) <= fit_thr) {
    out.einstein_type = EinsteinType::einstein;
  } else if (std::abs(out.fit_a) <= fit_thr) {
    out.einstein_type = EinsteinType::ric_proportional_eta_eta;
  } else {
    out.einstein_type = EinsteinType::eta_einstein;
  }

  // Trace consistency of the fit when it is exact: scal = 3a + b.
  if (out.fit_residual <= fit_thr &&
      std::abs(out.scalar - (3.0 * out.fit_a + out.fit_b)) >
          1e-8 * std::max(1.0, std::abs(out.scalar))) {
    throw std::logic_error("curvature: scalar trace mismatch in the fit");
  }

  return out;
}

}  // namespace apc
