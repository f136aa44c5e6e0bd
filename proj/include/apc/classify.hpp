#pragma once

#include <map>
#include <string>

#include <Eigen/Dense>

#include "apc/decomposition.hpp"
#include "apc/space.hpp"

namespace apc {

/// Differential-geometric objects attached to a structure tensor, evaluated
/// through the tensor itself on the fixed basis.
struct GeometricReport {
  /// (nabla_x eta)(y) = -F(x, phi y, xi).
  Eigen::MatrixXd nabla_eta;
  /// d eta(x,y) = (1/2)(-F(x, phi y, xi) + F(y, phi x, xi)); antisymmetric.
  Eigen::MatrixXd d_eta;
  /// (L_xi g)(x,y) = -F(x, phi y, xi) - F(y, phi x, xi); symmetric.
  Eigen::MatrixXd lie_xi_g;
  /// d Phi = cyclic sum of F over its three slots; totally antisymmetric.
  Tensor3 d_phi;
  /// Predicate outcomes; filled by geometric_report only.
  std::map<std::string, bool> flags;
};

/// Forms only; flags left empty.
GeometricReport derived_forms(const TensorF& F);

/// Outcome of one predicate computed along both supported routes.
struct PredicateRoutes {
  /// Direct tensor identity route.
  bool identity = false;
  /// Route through the class label of the decomposition.
  bool class_label = false;
};

PredicateRoutes normal_routes(const TensorF& F, double tol = 1e-9);
PredicateRoutes paracontact_routes(const TensorF& F, double tol = 1e-9);
PredicateRoutes para_sasakian_routes(const TensorF& F, double tol = 1e-9);
PredicateRoutes k_paracontact_routes(const TensorF& F, double tol = 1e-9);
PredicateRoutes quasi_para_sasakian_routes(const TensorF& F, double tol = 1e-9);
PredicateRoutes xi_killing_routes(const TensorF& F, double tol = 1e-9);

/// Each predicate evaluates both routes and returns the shared verdict.
/// Throws std::logic_error when the routes disagree.
bool is_normal(const TensorF& F, double tol = 1e-9);
bool is_paracontact(const TensorF& F, double tol = 1e-9);
bool is_para_sasakian(const TensorF& F, double tol = 1e-9);
bool is_k_paracontact(const TensorF& F, double tol = 1e-9);
bool is_quasi_para_sasakian(const TensorF& F, double tol = 1e-9);
bool is_xi_killing(const TensorF& F, double tol = 1e-9);

/// Pure class-5 tensor normalised so that theta(xi) = 2n: the contact case
/// of the trace class.  Equivalent to is_para_sasakian.
bool is_g5bar(const TensorF& F, double tol = 1e-9);

/// Forms plus all predicate flags keyed "normal", "paracontact",
/// "para_sasakian", "k_paracontact", "quasi_para_sasakian", "xi_killing",
/// "g5bar".
GeometricReport geometric_report(const TensorF& F, double tol = 1e-9);

}  // namespace apc
