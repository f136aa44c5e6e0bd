#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "apc/matrix_groups.hpp"
#include "apc/report.hpp"

using apc::AdjointData;
using apc::LieAlgebra3;
using Eigen::Matrix3d;

namespace {

double rel_dev(const Matrix3d& a, const Matrix3d& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

}  // namespace

TEST_CASE("adjoint matrices represent the bracket") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    LieAlgebra3 L = apc::random_jacobi_algebra(seed);
    AdjointData ad = apc::adjoint(L);
    const Matrix3d m[3] = {ad.m1, ad.m2, ad.m3};

    // Columns are the brackets with the basis.
    const Eigen::Matrix3d id = Matrix3d::Identity();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK((m[i].col(j) - L.bracket(id.col(i), id.col(j))).norm() < 1e-14);

    // Homomorphism: [M_i, M_j] = sum_k C_ij^k M_k; this needs Jacobi.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Matrix3d lhs = m[i] * m[j] - m[j] * m[i];
        Matrix3d rhs = Matrix3d::Zero();
        for (int k = 0; k < 3; ++k) rhs += L.c(i, j, k) * m[k];
        CHECK((lhs - rhs).norm() < 1e-10);
      }
  }
}

TEST_CASE("algebra element of the contact family") {
  AdjointData ad = apc::adjoint(apc::canonical_family("g5", {1.5}));
  Matrix3d a = ad.a_of(0.7, -0.3, 0.4);
  Matrix3d expected = Matrix3d::Zero();
  expected(2, 0) = -(-0.3) * 1.5;  // -b alpha
  expected(2, 1) = 0.7 * 1.5;      // a alpha
  CHECK((a - expected).norm() < 1e-14);

  // Nilpotent of order two: the exponential is affine in the parameters.
  CHECK((a * a).norm() == 0.0);
  apc::GroupElement e = apc::closed_form_exp("g5", {1.5}, 0.7, -0.3, 0.4);
  CHECK((e.mat - (Matrix3d::Identity() + a)).norm() < 1e-14);
}

TEST_CASE("algebra element of the class-10 family") {
  AdjointData ad = apc::adjoint(apc::canonical_family("g10", {1.1}));
  Matrix3d a = ad.a_of(0.3, -0.6, 0.9);
  Matrix3d expected = Matrix3d::Zero();
  expected(0, 0) = -0.9 * 1.1;
  expected(1, 1) = 0.9 * 1.1;
  expected(0, 2) = 0.3 * 1.1;
  expected(1, 2) = 0.6 * 1.1;
  CHECK((a - expected).norm() < 1e-14);
}

TEST_CASE("numeric exponential oracles") {
  // Strictly triangular: series terminates exactly.
  Matrix3d nil = Matrix3d::Zero();
  nil(0, 1) = 3.0;
  nil(0, 2) = -1.0;
  nil(1, 2) = 2.0;
  Matrix3d nil_exp = Matrix3d::Identity() + nil + 0.5 * nil * nil;
  CHECK((apc::mat_exp(nil).mat - nil_exp).norm() == 0.0);

  // Rotation block.
  Matrix3d rot = Matrix3d::Zero();
  rot(0, 1) = -0.8;
  rot(1, 0) = 0.8;
  Matrix3d rot_exp = Matrix3d::Identity();
  rot_exp(0, 0) = rot_exp(1, 1) = std::cos(0.8);
  rot_exp(0, 1) = -std::sin(0.8);
  rot_exp(1, 0) = std::sin(0.8);
  CHECK((apc::mat_exp(rot).mat - rot_exp).norm() < 1e-13);

  // Group inverse.
  Matrix3d gen;
  gen << 0.4, -1.2, 0.3, 0.9, 0.1, -0.7, -0.2, 0.5, 0.6;
  CHECK((apc::mat_exp(gen).mat * apc::mat_exp(-gen).mat - Matrix3d::Identity())
            .norm() < 1e-12);
}

TEST_CASE("closed-form exponential agrees with the numeric one per branch") {
  struct Draw {
    const char* family;
    std::vector<double> params;
    double a, b, c;
  };
  const Draw draws[] = {
      {"g5", {1.2}, 0.7, -0.3, 0.5},
      {"g5", {1.2}, 2.0, 3.0, -1.0},
      {"g6", {1.0, 1.0}, 0.8, -0.8, 0.6},   // beta = alpha, b = -a
      {"g6", {1.0, 1.0}, 0.5, 0.7, -0.4},   // beta = alpha, general
      {"g6", {1.0, -1.0}, 0.9, 0.9, 0.3},   // beta = -alpha, b = a
      {"g6", {1.0, -1.0}, 0.4, -0.2, 0.8},  // beta = -alpha, general
      {"g6", {1.0, 0.4}, 0.6, -0.5, 0.7},   // beta != +-alpha
      {"g6", {0.9, 0.3}, 1.1, 0.2, 0.0},    // c = 0
      {"g10", {1.1}, 0.3, -0.6, 0.9},
      {"g10", {1.1}, 0.5, 0.4, 0.0},
      {"g12", {0.8, 1.1}, 1.0, 0.5, 0.7},   // a beta - b alpha != 0
      {"g12", {0.8, 1.1}, 1.6, 2.2, 0.5},   // a beta - b alpha = 0
  };
  for (const Draw& d : draws) {
    CAPTURE(d.family);
    CAPTURE(d.a);
    AdjointData ad = apc::adjoint(apc::canonical_family(d.family, d.params));
    Matrix3d num = apc::mat_exp(ad.a_of(d.a, d.b, d.c)).mat;
    Matrix3d cf = apc::closed_form_exp(d.family, d.params, d.a, d.b, d.c).mat;
    CHECK(rel_dev(cf, num) < 1e-11);
  }
}

TEST_CASE("closed form is stable across branch boundaries") {
  // Inside the branch snap window the equal-parameter formula applies.
  Matrix3d near = apc::closed_form_exp("g6", {1.0, 1.0 + 5e-13}, 0.4, 0.6, 0.9).mat;
  Matrix3d at = apc::closed_form_exp("g6", {1.0, 1.0}, 0.4, 0.6, 0.9).mat;
  CHECK((near - at).norm() < 1e-9);

  // Just outside the window the generic formula takes over continuously.
  AdjointData ad = apc::adjoint(apc::canonical_family("g6", {1.0, 1.0 + 1e-8}));
  Matrix3d outside = apc::closed_form_exp("g6", {1.0, 1.0 + 1e-8}, 0.4, 0.6, 0.9).mat;
  CHECK(rel_dev(outside, apc::mat_exp(ad.a_of(0.4, 0.6, 0.9)).mat) < 1e-7);
  CHECK((outside - at).norm() < 1e-6);
}

TEST_CASE("closed-form exponential validates its inputs") {
  CHECK_THROWS_AS(apc::closed_form_exp("g5", {0.0}, 1, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(apc::closed_form_exp("g9", {1.0}, 1, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(apc::closed_form_exp("g6", {1.0}, 1, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(apc::closed_form_exp("g12", {1.0, 0.0}, 1, 1, 1),
                  std::invalid_argument);
}
