#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace apc {

/// Coordinate model of an almost paracontact metric structure on R^(2n+1).
///
/// Basis ordering: u_1..u_n, v_1..v_n, xi.  The structure tensors are fixed:
///   phi(u_a) = v_a, phi(v_a) = u_a, phi(xi) = 0,
///   eta = dual of xi, g = diag(+1 x n, -1 x n, +1).
/// Everything is derived from n, so the class is a value type.
class Space {
public:
  Space() : Space(1) {}
  explicit Space(int n);

  int n() const { return n_; }
  int dim() const { return 2 * n_ + 1; }
  /// Index of the Reeb direction xi (last basis slot).
  int xi() const { return 2 * n_; }

  /// Metric sign of basis vector i: +1 for u-block and xi, -1 for v-block.
  double eps(int i) const;
  /// Index of phi(e_i); -1 encodes phi(xi) = 0.
  int phi(int i) const;
  /// Index of phi^2(e_i) = e_i for horizontal i; -1 encodes phi^2(xi) = 0.
  int h(int i) const;
  /// eta(e_i): 1.0 on xi, 0.0 otherwise.
  double eta(int i) const { return i == xi() ? 1.0 : 0.0; }

  /// Dense (dim x dim) matrix of phi in the fixed basis.
  Eigen::MatrixXd phi_matrix() const;
  /// Dense (dim x dim) matrix of g in the fixed basis.
  Eigen::MatrixXd metric_matrix() const;

  /// g(e_i, phi e_j): nonzero only when phi e_j = e_i.
  double g_phi(int i, int j) const;
  /// g(phi e_i, phi e_j): nonzero only for equal horizontal partners.
  double g_phiphi(int i, int j) const;

  friend bool operator==(const Space& a, const Space& b) { return a.n_ == b.n_; }

private:
  int n_;
};

/// Factory with validation: n >= 1 required.
Space make_space(int n);

/// Dense order-3 tensor of fixed dimension, row-major components.
class Tensor3 {
public:
  Tensor3() = default;
  explicit Tensor3(int dim)
      : dim_(dim), a_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {}

  int dim() const { return dim_; }

  double& operator()(int i, int j, int k) {
    return a_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }
  double operator()(int i, int j, int k) const {
    return a_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  double max_abs() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(double s);

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(double s, Tensor3 a) { return a *= s; }

private:
  int dim_ = 0;
  std::vector<double> a_;
};

/// Covariant order-3 tensor attached to its space.
struct TensorF {
  Space space;
  Tensor3 comps;
};

/// Zero tensor on the given space.
TensorF zero_tensor(const Space& s);

/// Whether F satisfies the two defining identities of the structure space:
/// antisymmetry in the last two slots and the phi-compatibility relation
///   F(x, phi y, phi z) = F(x, y, z) + eta(y) F(x, z, xi) - eta(z) F(x, y, xi),
/// each to within tol * max(1, max|F|).
bool is_in_F_space(const TensorF& F, double tol = 1e-9);

/// Orthogonal projection of an arbitrary order-3 tensor onto the structure
/// space: antisymmetrise the last two slots, then average with the
/// phi-compatibility substitution.  Idempotent; fixes members.
TensorF project_to_F_space(const TensorF& T);

/// Signed full-range component pairing sum(eps_i eps_j eps_k F1_ijk F2_ijk).
/// Indefinite in general.  Throws std::invalid_argument on space mismatch.
double inner_product(const TensorF& F1, const TensorF& F2);

/// Cyclic sum over the three slots: (SF)(x,y,z) = F(x,y,z)+F(y,z,x)+F(z,x,y).
Tensor3 cyclic_sum(const Tensor3& t);

/// Structure-group element: block exp([[P,Q],[Q,P]]) on the horizontal part
/// extended by 1 on xi.  Commutes with phi, fixes xi, preserves g.
struct ParaunitaryElement {
  int n = 0;
  Eigen::MatrixXd mat;  // dim x dim
};

/// Exponential of the Lie-algebra element with P skew-symmetric and Q
/// symmetric (both n x n).  Throws std::invalid_argument on shape/symmetry
/// violations beyond 1e-12.
ParaunitaryElement paraunitary_from_generators(const Eigen::MatrixXd& P,
                                               const Eigen::MatrixXd& Q);

/// Seeded random structure-group element; deterministic in (n, seed).
ParaunitaryElement random_paraunitary(int n, std::uint64_t seed);

/// Pullback action (aF)(x,y,z) = F(a^-1 x, a^-1 y, a^-1 z).  The inverse is
/// the metric adjoint G a^T G.  Preserves membership and the pairing.
TensorF group_action(const ParaunitaryElement& a, const TensorF& F);

/// Seeded random member of the structure space with components of order one;
/// deterministic in (space, seed).
TensorF random_f_member(const Space& s, std::uint64_t seed);

}  // namespace apc
