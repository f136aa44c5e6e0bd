#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "apc/space.hpp"

namespace apc {

/// Three-dimensional real Lie algebra presented by structure constants in
/// the fixed basis E1, E2, E3 = xi:
///   [E1,E2] = c12, [E1,E3] = c13, [E2,E3] = c23 (components in that basis).
struct LieAlgebra3 {
  Eigen::Vector3d c12 = Eigen::Vector3d::Zero();
  Eigen::Vector3d c13 = Eigen::Vector3d::Zero();
  Eigen::Vector3d c23 = Eigen::Vector3d::Zero();

  /// Bracket of the coordinate vectors x, y.
  Eigen::Vector3d bracket(const Eigen::Vector3d& x,
                          const Eigen::Vector3d& y) const;
  /// Structure constant C_ij^k with 0-based basis indices.
  double c(int i, int j, int k) const;
};

/// Componentwise Jacobi identity within tol (absolute, constants of order
/// one; scaled by max|C|^2 when larger).
bool check_jacobi(const LieAlgebra3& L, double tol = 1e-12);

/// The structure tensor F(x,y,z) = g((nabla_x phi) y, z) of the
/// left-invariant structure, from the Koszul formula.  Cross-checked against
/// the closed-form component table; throws std::logic_error on disagreement
/// and std::invalid_argument when Jacobi fails.
TensorF structure_tensor(const LieAlgebra3& L);

/// The two routes separately (no Jacobi gate, no agreement check).
TensorF structure_tensor_koszul(const LieAlgebra3& L);
TensorF structure_tensor_closed(const LieAlgebra3& L);

/// Outcome of matching the structure constants against the four basic-class
/// pattern families available in dimension three.
struct FamilyMatch {
  /// 5, 6, 10 or 12 when exactly one pattern matches.
  std::optional<int> g_class;
  std::string detail;
};

/// Decide which single basic class the left-invariant structure falls in by
/// the structure-constant patterns; the patterns are mutually exclusive.
FamilyMatch theorem41_family(const LieAlgebra3& L, double tol = 1e-12);

/// Canonical one- and two-parameter representatives:
///   g5(alpha):        [E1,E2] = alpha E3                       (alpha != 0)
///   g6(alpha,beta):   [E1,E3] = alpha E1 + beta E2,
///                     [E2,E3] = beta E1 + alpha E2             (both != 0)
///   g10(alpha):       [E1,E3] = alpha E1, [E2,E3] = -alpha E2  (alpha != 0)
///   g12(alpha,beta):  [E1,E2] = alpha E1 + beta E2,
///                     [E1,E3] = -beta E3, [E2,E3] = alpha E3   (both != 0)
/// Throws std::invalid_argument for unknown names, wrong parameter counts,
/// or degenerate parameters.
LieAlgebra3 canonical_family(const std::string& name,
                             const std::vector<double>& params);

/// Normality through the Nijenhuis tensor of phi: true iff
/// N(x,y) - 2 d eta(x,y) xi vanishes.  Cross-checked against the structure
/// tensor predicate; throws std::logic_error on disagreement.
bool nijenhuis_normality(const LieAlgebra3& L, double tol = 1e-9);

}  // namespace apc
