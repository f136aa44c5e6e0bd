#include "apc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apc {

namespace {

inline double at(const Tensor3& t, int i, int j, int k) {
  return (i >= 0 && j >= 0 && k >= 0) ? t(i, j, k) : 0.0;
}

// Shared scale for identity-route thresholds.
inline double threshold(const TensorF& F, double tol) {
  return tol * std::max(1.0, F.comps.max_abs());
}

// max |F(x,y,phi z) + F(phi x,y,z) + eta(z) F(x,phi y,xi)| over the basis.
double normality_residual(const TensorF& F) {
  const Space& s = F.space;
  const Tensor3& t = F.comps;
  const int d = s.dim();
  const int xi = s.xi();
  double m = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const double v = at(t, i, j, s.phi(k)) + at(t, s.phi(i), j, k) +
                         s.eta(k) * at(t, i, s.phi(j), xi);
        m = std::max(m, std::abs(v));
      }
  return m;
}

// max |d eta - Phi| over the basis, Phi(x,y) = g(phi x, y).
double contact_residual(const TensorF& F) {
  const Space& s = F.space;
  const Tensor3& t = F.comps;
  const int d = s.dim();
  const int xi = s.xi();
  double m = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double de =
          0.5 * (-at(t, i, s.phi(j), xi) + at(t, j, s.phi(i), xi));
      const double phi_ij = s.g_phi(j, i);  // g(phi e_i, e_j) = g(e_j, phi e_i)
      m = std::max(m, std::abs(de - phi_ij));
    }
  return m;
}

double killing_residual(const TensorF& F) {
  const Space& s = F.space;
  const Tensor3& t = F.comps;
  const int d = s.dim();
  const int xi = s.xi();
  double m = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double v = -at(t, i, s.phi(j), xi) - at(t, j, s.phi(i), xi);
      m = std::max(m, std::abs(v));
    }
  return m;
}

bool label_subset(const std::vector<int>& label, std::initializer_list<int> allowed) {
  return std::all_of(label.begin(), label.end(), [&](int c) {
    return std::find(allowed.begin(), allowed.end(), c) != allowed.end();
  });
}

bool label_contains(const std::vector<int>& label, int c) {
  return std::find(label.begin(), label.end(), c) != label.end();
}

// theta(xi) = 2n within tolerance, scaled by the larger of the two sides.
bool contact_trace(const TensorF& F, const ProjectionSet& ps, double tol) {
  const double target = 2.0 * F.space.n();
  const double tfx = ps.lee.theta(F.space.xi());
  return std::abs(tfx - target) <=
         tol * std::max({1.0, std::abs(tfx), target});
}

}  // namespace

GeometricReport derived_forms(const TensorF& F) {
  const Space& s = F.space;
  const Tensor3& t = F.comps;
  const int d = s.dim();
  const int xi = s.xi();
  GeometricReport r;
  r.nabla_eta = Eigen::MatrixXd::Zero(d, d);
  r.d_eta = Eigen::MatrixXd::Zero(d, d);
  r.lie_xi_g = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double a = -at(t, i, s.phi(j), xi);
      const double b = -at(t, j, s.phi(i), xi);
      r.nabla_eta(i, j) = a;
      r.d_eta(i, j) = 0.5 * (a - b);
      r.lie_xi_g(i, j) = a + b;
    }
  }
  r.d_phi = cyclic_sum(t);
  return r;
}

PredicateRoutes normal_routes(const TensorF& F, double tol) {
  PredicateRoutes r;
  r.identity = normality_residual(F) <= threshold(F, tol);
  ProjectionSet ps = project_all(F, tol);
  r.class_label = label_subset(ps.label, {1, 2, 5, 6, 7, 8});
  return r;
}

PredicateRoutes paracontact_routes(const TensorF& F, double tol) {
  PredicateRoutes r;
  const double thr = threshold(F, tol);
  r.identity =
      contact_residual(F) <= tol * std::max(1.0, F.comps.max_abs()) &&
      cyclic_sum(F.comps).max_abs() <= thr;
  ProjectionSet ps = project_all(F, tol);
  r.class_label = label_subset(ps.label, {4, 5, 10}) &&
                  label_contains(ps.label, 5) && contact_trace(F, ps, tol);
  return r;
}

PredicateRoutes para_sasakian_routes(const TensorF& F, double tol) {
  PredicateRoutes r;
  PredicateRoutes n = normal_routes(F, tol);
  PredicateRoutes p = paracontact_routes(F, tol);
  r.identity = n.identity && p.identity;
  ProjectionSet ps = project_all(F, tol);
  r.class_label = ps.label == std::vector<int>{5} && contact_trace(F, ps, tol);
  return r;
}

PredicateRoutes k_paracontact_routes(const TensorF& F, double tol) {
  PredicateRoutes r;
  PredicateRoutes p = paracontact_routes(F, tol);
  PredicateRoutes k = xi_killing_routes(F, tol);
  r.identity = p.identity && k.identity;
  ProjectionSet ps = project_all(F, tol);
  r.class_label = label_subset(ps.label, {4, 5}) &&
                  label_contains(ps.label, 5) && contact_trace(F, ps, tol);
  return r;
}

PredicateRoutes quasi_para_sasakian_routes(const TensorF& F, double tol) {
  PredicateRoutes r;
  r.identity = normality_residual(F) <= threshold(F, tol) &&
               cyclic_sum(F.comps).max_abs() <= threshold(F, tol);
  ProjectionSet ps = project_all(F, tol);
  r.class_label = label_subset(ps.label, {5, 8});
  return r;
}

PredicateRoutes xi_killing_routes(const TensorF& F, double tol) {
  PredicateRoutes r;
  r.identity = killing_residual(F) <= threshold(F, tol);
  ProjectionSet ps = project_all(F, tol);
  r.class_label = label_subset(ps.label, {1, 2, 3, 4, 5, 8, 9, 11});
  return r;
}

namespace {

bool settle(const char* name, const PredicateRoutes& r) {
  if (r.identity != r.class_label) {
    throw std::logic_error(std::string(name) +
                           ": identity and class routes disagree");
  }
  return r.identity;
}

}  // namespace

bool is_normal(const TensorF& F, double tol) {
  return settle("is_normal", normal_routes(F, tol));
}

bool is_paracontact(const TensorF& F, double tol) {
  return settle("is_paracontact", paracontact_routes(F, tol));
}

bool is_para_sasakian(const TensorF& F, double tol) {
  return settle("is_para_sasakian", para_sasakian_routes(F, tol));
}

bool is_k_paracontact(const TensorF& F, double tol) {
  return settle("is_k_paracontact", k_paracontact_routes(F, tol));
}

bool is_quasi_para_sasakian(const TensorF& F, double tol) {
  return settle("is_quasi_para_sasakian", quasi_para_sasakian_routes(F, tol));
}

bool is_xi_killing(const TensorF& F, double tol) {
  return settle("is_xi_killing", xi_killing_routes(F, tol));
}

bool is_g5bar(const TensorF& F, double tol) {
  ProjectionSet ps = project_all(F, tol);
  return ps.label == std::vector<int>{5} && contact_trace(F, ps, tol);
}

GeometricReport geometric_report(const TensorF& F, double tol) {
  GeometricReport r = derived_forms(F);
  r.flags["normal"] = is_normal(F, tol);
  r.flags["paracontact"] = is_paracontact(F, tol);
  r.flags["para_sasakian"] = is_para_sasakian(F, tol);
  r.flags["k_paracontact"] = is_k_paracontact(F, tol);
  r.flags["quasi_para_sasakian"] = is_quasi_para_sasakian(F, tol);
  r.flags["xi_killing"] = is_xi_killing(F, tol);
  r.flags["g5bar"] = is_g5bar(F, tol);
  return r;
}

}  // namespace apc
