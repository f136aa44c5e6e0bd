#include "apc/matrix_groups.hpp"

#include <cmath>
#include <stdexcept>

#include "apc/expm.hpp"

namespace apc {

AdjointData adjoint(const LieAlgebra3& L) {
  AdjointData ad;
  // Column j of M_i is [E_i, E_j] in coordinates.
  ad.m1.col(1) = L.c12;
  ad.m1.col(2) = L.c13;
  ad.m2.col(0) = -L.c12;
  ad.m2.col(2) = L.c23;
  ad.m3.col(0) = -L.c13;
  ad.m3.col(1) = -L.c23;
  return ad;
}

GroupElement mat_exp(const Eigen::Matrix3d& A) {
  GroupElement g;
  g.mat = expm(A);
  return g;
}

namespace {

constexpr double kBranchTol = 1e-12;

Eigen::Matrix3d exp_g5(double alpha, double a, double b, double /*c*/) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(2, 0) = -b * alpha;
  m(2, 1) = a * alpha;
  return m;
}

Eigen::Matrix3d exp_g6(double alpha, double beta, double a, double b,
                       double c) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  if (std::abs(c) <= kBranchTol) {
    m(0, 2) = a * alpha + b * beta;
    m(1, 2) = b * alpha + a * beta;
    return m;
  }
  const double E = std::exp(-2.0 * c * alpha);
  if (std::abs(beta - alpha) <= kBranchTol) {
    m(0, 0) = 0.5 * (1.0 + E);
    m(0, 1) = 0.5 * (-1.0 + E);
    m(1, 0) = 0.5 * (-1.0 + E);
    m(1, 1) = 0.5 * (1.0 + E);
    if (std::abs(b + a) > kBranchTol) {
      const double t = (a + b) * (1.0 - E) / (2.0 * c);
      m(0, 2) = t;
      m(1, 2) = t;
    }
    return m;
  }
  if (std::abs(beta + alpha) <= kBranchTol) {
    m(0, 0) = 0.5 * (1.0 + E);
    m(0, 1) = 0.5 * (1.0 - E);
    m(1, 0) = 0.5 * (1.0 - E);
    m(1, 1) = 0.5 * (1.0 + E);
    if (std::abs(b - a) > kBranchTol) {
      m(0, 2) = (a - b) * (1.0 - E) / (2.0 * c);
      m(1, 2) = (a - b) * (-1.0 + E) / (2.0 * c);
    }
    return m;
  }
  const double ec = std::exp(-c * alpha);
  const double ch = std::cosh(c * beta);
  const double sh = std::sinh(c * beta);
  m(0, 0) = ec * ch;
  m(0, 1) = -ec * sh;
  m(1, 0) = -ec * sh;
  m(1, 1) = ec * ch;
  m(0, 2) = (a * (1.0 - ec * ch) + b * ec * sh) / c;
  m(1, 2) = (b * (1.0 - ec * ch) + a * ec * sh) / c;
  return m;
}

Eigen::Matrix3d exp_g10(double alpha, double a, double b, double c) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  if (std::abs(c) <= kBranchTol) {
    m(0, 2) = a * alpha;
    m(1, 2) = -b * alpha;
    return m;
  }
  const double em = std::exp(-c * alpha);
  const double ep = std::exp(c * alpha);
  m(0, 0) = em;
  m(1, 1) = ep;
  m(0, 2) = a * (1.0 - em) / c;
  m(1, 2) = b * (1.0 - ep) / c;
  return m;
}

Eigen::Matrix3d exp_g12(double alpha, double beta, double a, double b,
                        double c) {
  const double l2 = a * beta - b * alpha;
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  if (std::abs(l2) <= kBranchTol) {
    m(0, 0) = 1.0 - b * alpha;
    m(0, 1) = a * alpha;
    m(1, 0) = -b * beta;
    m(1, 1) = 1.0 + a * beta;
    m(2, 0) = c * beta;
    m(2, 1) = -c * alpha;
    return m;
  }
  const double ep = std::exp(l2);
  const double em = std::exp(-l2);
  m(0, 0) = (a * beta - b * alpha * ep) / l2;
  m(0, 1) = a * alpha * (ep - 1.0) / l2;
  m(1, 0) = b * beta * (1.0 - ep) / l2;
  m(1, 1) = (-b * alpha + a * beta * ep) / l2;
  m(2, 0) = c * beta * (1.0 - em) / l2;
  m(2, 1) = c * alpha * (em - 1.0) / l2;
  m(2, 2) = em;
  return m;
}

}  // namespace

GroupElement closed_form_exp(const std::string& family,
                             const std::vector<double>& params, double a,
                             double b, double c) {
  // Validates the family name and parameter shape.
  canonical_family(family, params);
  GroupElement g;
  if (family == "g5") {
    g.mat = exp_g5(params[0], a, b, c);
  } else if (family == "g6") {
    g.mat = exp_g6(params[0], params[1], a, b, c);
  } else if (family == "g10") {
    g.mat = exp_g10(params[0], a, b, c);
  } else {
    g.mat = exp_g12(params[0], params[1], a, b, c);
  }
  return g;
}

}  // namespace apc
