#include "apc/lie3.hpp"

#include <cmath>
#include <stdexcept>

#include "apc/classify.hpp"

namespace apc {

namespace {

const Eigen::Matrix3d& phi3() {
  static const Eigen::Matrix3d m = [] {
    Eigen::Matrix3d p = Eigen::Matrix3d::Zero();
    p(1, 0) = 1.0;
    p(0, 1) = 1.0;
    return p;
  }();
  return m;
}

inline double metric(const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  return u(0) * v(0) - u(1) * v(1) + u(2) * v(2);
}

inline double cmax_of(const LieAlgebra3& L) {
  return std::max({L.c12.cwiseAbs().maxCoeff(), L.c13.cwiseAbs().maxCoeff(),
                   L.c23.cwiseAbs().maxCoeff()});
}

}  // namespace

Eigen::Vector3d LieAlgebra3::bracket(const Eigen::Vector3d& x,
                                     const Eigen::Vector3d& y) const {
  return (x(0) * y(1) - x(1) * y(0)) * c12 +
         (x(0) * y(2) - x(2) * y(0)) * c13 +
         (x(1) * y(2) - x(2) * y(1)) * c23;
}

double LieAlgebra3::c(int i, int j, int k) const {
  if (i == j) return 0.0;
  if (i > j) return -c(j, i, k);
  if (i == 0 && j == 1) return c12(k);
  if (i == 0 && j == 2) return c13(k);
  return c23(k);
}

bool check_jacobi(const LieAlgebra3& L, double tol) {
  const Eigen::Vector3d e1(1, 0, 0), e2(0, 1, 0), e3(0, 0, 1);
  const Eigen::Vector3d j = L.bracket(L.bracket(e1, e2), e3) +
                            L.bracket(L.bracket(e2, e3), e1) +
                            L.bracket(L.bracket(e3, e1), e2);
  const double c = cmax_of(L);
  return j.cwiseAbs().maxCoeff() <= tol * std::max(1.0, c * c);
}

TensorF structure_tensor_koszul(const LieAlgebra3& L) {
  const Space s = make_space(1);
  TensorF F = zero_tensor(s);
  Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
  const Eigen::Matrix3d& ph = phi3();
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector3d ei = id.col(i);
    for (int j = 0; j < 3; ++j) {
      const Eigen::Vector3d ej = id.col(j);
      const Eigen::Vector3d pej = ph * ej;
      for (int k = 0; k < 3; ++k) {
        const Eigen::Vector3d ek = id.col(k);
        const Eigen::Vector3d pek = ph * ek;
        const double v =
            metric(L.bracket(ei, pej) - ph * L.bracket(ei, ej), ek) +
            metric(L.bracket(ek, pej) + L.bracket(pek, ej), ei) +
            metric(L.bracket(pek, ei) - ph * L.bracket(ek, ei), ej);
        F.comps(i, j, k) = 0.5 * v;
      }
    }
  }
  return F;
}

TensorF structure_tensor_closed(const LieAlgebra3& L) {
  const Space s = make_space(1);
  TensorF F = zero_tensor(s);
  const double f113 = 0.5 * (L.c12(2) + L.c13(1) - L.c23(0));
  const double f223 = 0.5 * (L.c13(1) - L.c12(2) - L.c23(0));
  F.comps(0, 0, 2) = f113;
  F.comps(0, 2, 0) = -f113;
  F.comps(1, 1, 2) = f223;
  F.comps(1, 2, 1) = -f223;
  F.comps(0, 1, 2) = -L.c13(0);
  F.comps(0, 2, 1) = L.c13(0);
  F.comps(1, 0, 2) = L.c23(1);
  F.comps(1, 2, 0) = -L.c23(1);
  F.comps(2, 2, 0) = L.c23(2);
  F.comps(2, 0, 2) = -L.c23(2);
  F.comps(2, 2, 1) = L.c13(2);
  F.comps(2, 1, 2) = -L.c13(2);
  return F;
}

TensorF structure_tensor(const LieAlgebra3& L) {
  if (!check_jacobi(L)) {
    throw std::invalid_argument("structure_tensor: Jacobi identity fails");
  }
  TensorF a = structure_tensor_koszul(L);
  TensorF b = structure_tensor_closed(L);
  const double dev = (a.comps - b.comps).max_abs();
  if (dev > 1e-10 * std::max(1.0, a.comps.max_abs())) {
    throw std::logic_error("structure_tensor: component routes disagree");
  }
  return a;
}

FamilyMatch theorem41_family(const LieAlgebra3& L, double tol) {
  if (!check_jacobi(L)) {
    throw std::invalid_argument("theorem41_family: Jacobi identity fails");
  }
  const double c = cmax_of(L);
  const double thr = tol * std::max(1.0, c);
  const double thr2 = tol * std::max(1.0, c * c);
  auto zero = [&](double v) { return std::abs(v) <= thr; };
  auto zero2 = [&](double v) { return std::abs(v) <= thr2; };

  const double c121 = L.c12(0), c122 = L.c12(1), c123 = L.c12(2);
  const double c131 = L.c13(0), c132 = L.c13(1), c133 = L.c13(2);
  const double c231 = L.c23(0), c232 = L.c23(1), c233 = L.c23(2);

  const bool g5 = zero(c131) && zero(c133) && zero(c232) && zero(c233) &&
                  zero(c231 - c132) && !zero(c123) && zero2(c121 * c132) &&
                  zero2(c122 * c132);
  const bool g6 = zero(c123) && zero(c133) && zero(c233) &&
                  zero(c231 - c132) && zero(c232 - c131) && !zero(c131) &&
                  zero2(c122 * c132 - c131 * c121) &&
                  zero2(c121 * c132 - c131 * c122);
  const bool g10 = zero(c123) && zero(c133) && zero(c233) &&
                   zero(c232 + c131) && (!zero(c132 - c231) || !zero(c131)) &&
                   zero2(c121 * c131 + c122 * c231) &&
                   zero2(c121 * c132 - c122 * c131);
  const bool g12 = zero(c123) && zero(c131) && zero(c232) &&
                   zero(c231 - c132) && (!zero(c133) || !zero(c233)) &&
                   zero2((c121 - c233) * c132) && zero2((c122 + c133) * c132) &&
                   zero2((c121 - c233) * c133 + (c122 + c133) * c233);

  const int hits = int(g5) + int(g6) + int(g10) + int(g12);
  if (hits > 1) {
    throw std::logic_error("theorem41_family: patterns are not exclusive here");
  }
  FamilyMatch m;
  if (g5) {
    m.g_class = 5;
    m.detail = "matched the class-5 pattern";
  } else if (g6) {
    m.g_class = 6;
    m.detail = "matched the class-6 pattern";
  } else if (g10) {
    m.g_class = 10;
    m.detail = "matched the class-10 pattern";
  } else if (g12) {
    m.g_class = 12;
    m.detail = "matched the class-12 pattern";
  } else {
    m.detail = "no single-class pattern matched";
  }
  return m;
}

LieAlgebra3 canonical_family(const std::string& name,
                             const std::vector<double>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) {
      throw std::invalid_argument("canonical_family: " + name + " takes " +
                                  std::to_string(k) + " parameter(s)");
    }
    for (double p : params) {
      if (p == 0.0) {
        throw std::invalid_argument(
            "canonical_family: parameters must be nonzero");
      }
    }
  };
  LieAlgebra3 L;
  if (name == "g5") {
    need(1);
    L.c12 = Eigen::Vector3d(0, 0, params[0]);
  } else if (name == "g6") {
    need(2);
    L.c13 = Eigen::Vector3d(params[0], params[1], 0);
    L.c23 = Eigen::Vector3d(params[1], params[0], 0);
  } else if (name == "g10") {
    need(1);
    L.c13 = Eigen::Vector3d(params[0], 0, 0);
    L.c23 = Eigen::Vector3d(0, -params[0], 0);
  } else if (name == "g12") {
    need(2);
    L.c12 = Eigen::Vector3d(params[0], params[1], 0);
    L.c13 = Eigen::Vector3d(0, 0, -params[1]);
    L.c23 = Eigen::Vector3d(0, 0, params[0]);
  } else {
    throw std::invalid_argument("canonical_family: unknown family " + name);
  }
  return L;
}

bool nijenhuis_normality(const LieAlgebra3& L, double tol) {
  if (!check_jacobi(L)) {
    throw std::invalid_argument("nijenhuis_normality: Jacobi identity fails");
  }
  const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
  const Eigen::Matrix3d& ph = phi3();
  auto phi2 = [](const Eigen::Vector3d& v) {
    return Eigen::Vector3d(v(0), v(1), 0.0);
  };
  double m = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Eigen::Vector3d x = id.col(i), y = id.col(j);
      const Eigen::Vector3d n = phi2(L.bracket(x, y)) +
                                L.bracket(ph * x, ph * y) -
                                ph * L.bracket(ph * x, y) -
                                ph * L.bracket(x, ph * y);
      const double deta = -0.5 * L.bracket(x, y)(2);
      Eigen::Vector3d res = n;
      res(2) -= 2.0 * deta;
      m = std::max(m, res.cwiseAbs().maxCoeff());
    }
  }
  const double c = cmax_of(L);
  const bool direct = m <= tol * std::max(1.0, c * c);
  const bool via_tensor = is_normal(structure_tensor(L), tol);
  if (direct != via_tensor) {
    throw std::logic_error(
        "nijenhuis_normality: disagreement with the structure-tensor route");
  }
  return direct;
}

}  // namespace apc
