#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "apc/space.hpp"

namespace apc {

/// The three Lee covectors of a structure tensor, indexed by basis slot.
/// theta and theta_star trace over the horizontal block only; omega is the
/// double-xi slice.
struct LeeForms {
  Eigen::VectorXd theta;
  Eigen::VectorXd theta_star;
  Eigen::VectorXd omega;
};

/// Lee forms of F:
///   theta(z)      = sum_i eps_i F(e_i, e_i, z)         (i horizontal)
///   theta_star(z) = sum_i eps_i F(e_i, phi e_i, z)     (i horizontal)
///   omega(z)      = F(xi, xi, z).
LeeForms lee_forms(const TensorF& F);

/// Coarse projections W1..W4 (returned in slots 0..3).  For members of the
/// structure space they sum back to F.
std::array<TensorF, 4> project_w(const TensorF& F);

/// Result of the full twelve-class decomposition.
struct ProjectionSet {
  std::array<TensorF, 4> w_parts;
  std::array<TensorF, 12> g_parts;
  LeeForms lee;
  /// max |component| of each fine part, slot i-1 for class i.
  std::array<double, 12> magnitude{};
  /// Sorted class indices with magnitude above tol * scale.
  std::vector<int> label;
  double tol_used = 0.0;
  /// max |component| of the input tensor.
  double scale = 0.0;
};

/// Complete decomposition of a member of the structure space into the twelve
/// basic classes.  Throws std::invalid_argument when F fails membership at
/// the given tolerance.
ProjectionSet project_all(const TensorF& F, double tol = 1e-9);

/// Whether F satisfies the defining identity of basic class i (1..12)
/// directly, at tol relative to max|F|.  The zero tensor satisfies every
/// class.  Throws std::invalid_argument for i outside 1..12 or non-members.
bool check_characteristic(const TensorF& F, int i, double tol = 1e-9);

/// Dimension of the full structure space over R at the given n (rank of the
/// projection from raw order-3 tensors).  Supported for n <= 4.
int f_space_dimension(int n);

/// Dimension of basic class i (1..12) at the given n, computed by ranking
/// the class projection on a computed basis of the structure space.
/// Supported for n <= 4.
int subspace_dimension(int n, int i);

/// All twelve class dimensions at once (cached; cheaper than twelve calls).
std::array<int, 12> subspace_dimensions(int n);

/// Seeded random member of basic class i (class projection of a random
/// member of the structure space); deterministic in (space, i, seed).
TensorF random_class_member(const Space& s, int i, std::uint64_t seed);

}  // namespace apc
