#include "apc/space.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "apc/expm.hpp"

namespace apc {

Space::Space(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("Space: n must be at least 1");
  }
}

double Space::eps(int i) const {
  return (i >= n_ && i < 2 * n_) ? -1.0 : 1.0;
}

int Space::phi(int i) const {
  if (i < n_) return i + n_;
  if (i < 2 * n_) return i - n_;
  return -1;
}

int Space::h(int i) const { return i < 2 * n_ ? i : -1; }

Eigen::MatrixXd Space::phi_matrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim(), dim());
  for (int i = 0; i < 2 * n_; ++i) {
    m(phi(i), i) = 1.0;
  }
  return m;
}

Eigen::MatrixXd Space::metric_matrix() const {
  Eigen::VectorXd d(dim());
  for (int i = 0; i < dim(); ++i) d(i) = eps(i);
  return d.asDiagonal();
}

double Space::g_phi(int i, int j) const {
  const int pj = phi(j);
  return (pj >= 0 && pj == i) ? eps(i) : 0.0;
}

double Space::g_phiphi(int i, int j) const {
  const int pi = phi(i);
  return (pi >= 0 && pi == phi(j)) ? eps(pi) : 0.0;
}

Space make_space(int n) { return Space(n); }

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Tensor3& Tensor3::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

TensorF zero_tensor(const Space& s) { return TensorF{s, Tensor3(s.dim())}; }

namespace {

// Component lookup treating index -1 (a slot annihilated by phi) as zero.
inline double at(const Tensor3& t, int i, int j, int k) {
  return (i >= 0 && j >= 0 && k >= 0) ? t(i, j, k) : 0.0;
}

// The substitution side of the phi-compatibility relation:
//   (S T)(x,y,z) = T(x, phi y, phi z) - eta(y) T(x, z, xi) + eta(z) T(x, y, xi).
// S is an involution on tensors antisymmetric in the last two slots.
Tensor3 phi_substitution(const Space& s, const Tensor3& t) {
  const int d = s.dim();
  const int xi = s.xi();
  Tensor3 r(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int pj = s.phi(j);
      for (int k = 0; k < d; ++k) {
        const int pk = s.phi(k);
        double v = at(t, i, pj, pk);
        if (j == xi) v -= t(i, k, xi);
        if (k == xi) v += t(i, j, xi);
        r(i, j, k) = v;
      }
    }
  }
  return r;
}

Tensor3 antisymmetrize_last_two(const Tensor3& t) {
  const int d = t.dim();
  Tensor3 r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        r(i, j, k) = 0.5 * (t(i, j, k) - t(i, k, j));
  return r;
}

}  // namespace

bool is_in_F_space(const TensorF& F, double tol) {
  const Space& s = F.space;
  const Tensor3& t = F.comps;
  const int d = s.dim();
  const double thr = tol * std::max(1.0, t.max_abs());

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (std::abs(t(i, j, k) + t(i, k, j)) > thr) return false;

  const Tensor3 sub = phi_substitution(s, t);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (std::abs(sub(i, j, k) - t(i, j, k)) > thr) return false;
  return true;
}

TensorF project_to_F_space(const TensorF& T) {
  const Space& s = T.space;
  Tensor3 a = antisymmetrize_last_two(T.comps);
  Tensor3 sub = phi_substitution(s, a);
  a += sub;
  a *= 0.5;
  return TensorF{s, a};
}

double inner_product(const TensorF& F1, const TensorF& F2) {
  if (!(F1.space == F2.space)) {
    throw std::invalid_argument("inner_product: spaces differ");
  }
  const Space& s = F1.space;
  const int d = s.dim();
  double acc = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        acc += s.eps(i) * s.eps(j) * s.eps(k) * F1.comps(i, j, k) *
               F2.comps(i, j, k);
  return acc;
}

Tensor3 cyclic_sum(const Tensor3& t) {
  const int d = t.dim();
  Tensor3 r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        r(i, j, k) = t(i, j, k) + t(j, k, i) + t(k, i, j);
  return r;
}

ParaunitaryElement paraunitary_from_generators(const Eigen::MatrixXd& P,
                                               const Eigen::MatrixXd& Q) {
  const Eigen::Index n = P.rows();
  if (P.cols() != n || Q.rows() != n || Q.cols() != n) {
    throw std::invalid_argument(
        "paraunitary_from_generators: P and Q must be square of equal size");
  }
  if ((P + P.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument(
        "paraunitary_from_generators: P must be skew-symmetric");
  }
  if ((Q - Q.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument(
        "paraunitary_from_generators: Q must be symmetric");
  }

  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  X.topLeftCorner(n, n) = P;
  X.topRightCorner(n, n) = Q;
  X.bottomLeftCorner(n, n) = Q;
  X.bottomRightCorner(n, n) = P;

  ParaunitaryElement e;
  e.n = static_cast<int>(n);
  e.mat = Eigen::MatrixXd::Identity(2 * n + 1, 2 * n + 1);
  e.mat.topLeftCorner(2 * n, 2 * n) = expm(X);
  return e;
}

ParaunitaryElement random_paraunitary(int n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_paraunitary: n must be at least 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (j > i) {
        const double p = dist(rng);
        P(i, j) = p;
        P(j, i) = -p;
      }
      const double q = dist(rng);
      Q(i, j) = q;
      Q(j, i) = q;
    }
  }
  return paraunitary_from_generators(P, Q);
}

TensorF group_action(const ParaunitaryElement& a, const TensorF& F) {
  const Space& s = F.space;
  const int d = s.dim();
  if (a.mat.rows() != d || a.mat.cols() != d) {
    throw std::invalid_argument("group_action: element and tensor dimensions differ");
  }
  // Inverse via the metric adjoint: a^-1 = G a^T G.
  const Eigen::MatrixXd G = s.metric_matrix();
  const Eigen::MatrixXd inv = G * a.mat.transpose() * G;

  // Pull back one slot at a time.
  Tensor3 t1(d), t2(d), t3(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double acc = 0.0;
        for (int p = 0; p < d; ++p) acc += inv(p, i) * F.comps(p, j, k);
        t1(i, j, k) = acc;
      }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double acc = 0.0;
        for (int q = 0; q < d; ++q) acc += inv(q, j) * t1(i, q, k);
        t2(i, j, k) = acc;
      }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double acc = 0.0;
        for (int r = 0; r < d; ++r) acc += inv(r, k) * t2(i, j, r);
        t3(i, j, k) = acc;
      }
  return TensorF{s, t3};
}

TensorF random_f_member(const Space& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  TensorF raw{s, Tensor3(s.dim())};
  for (double& v : raw.comps.data()) v = dist(rng);
  return project_to_F_space(raw);
}

}  // namespace apc
