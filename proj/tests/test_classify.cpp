#include <doctest.h>

#include <cmath>
#include <vector>

#include "apc/classify.hpp"
#include "apc/decomposition.hpp"

using apc::Space;
using apc::Tensor3;
using apc::TensorF;

namespace {

// The contact representative: pure class 5 with theta(xi) = 2n exactly.
TensorF gbar5(const Space& s) {
  const int d = s.dim();
  TensorF F{s, Tensor3(d)};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        F.comps(i, j, k) =
            s.eta(j) * s.g_phiphi(i, k) - s.eta(k) * s.g_phiphi(i, j);
  return F;
}

TensorF scaled(TensorF F, double c) {
  F.comps *= c;
  return F;
}

TensorF plus(const TensorF& a, const TensorF& b) {
  TensorF r = a;
  r.comps += b.comps;
  return r;
}

}  // namespace

TEST_CASE("derived one-forms follow from the structure tensor") {
  for (int n : {1, 2}) {
    Space s = apc::make_space(n);
    TensorF F = apc::random_f_member(s, 55);
    apc::GeometricReport r = apc::derived_forms(F);
    const int d = s.dim();
    const int xi = s.xi();

    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const int pj = s.phi(j), pi = s.phi(i);
        const double fij = pj >= 0 ? F.comps(i, pj, xi) : 0.0;
        const double fji = pi >= 0 ? F.comps(j, pi, xi) : 0.0;
        CHECK(r.nabla_eta(i, j) == doctest::Approx(-fij).epsilon(1e-14));
        CHECK(r.d_eta(i, j) ==
              doctest::Approx(0.5 * (-fij + fji)).epsilon(1e-14));
        CHECK(r.lie_xi_g(i, j) == doctest::Approx(-fij - fji).epsilon(1e-14));
      }
    }
    CHECK((r.d_phi - apc::cyclic_sum(F.comps)).max_abs() == 0.0);

    // d eta is antisymmetric, the xi Lie derivative symmetric, and they
    // resolve nabla eta: nabla = d eta + Lie/2.
    CHECK((r.d_eta + r.d_eta.transpose()).norm() < 1e-14);
    CHECK((r.lie_xi_g - r.lie_xi_g.transpose()).norm() < 1e-14);
    CHECK((r.nabla_eta - (r.d_eta + 0.5 * r.lie_xi_g)).norm() < 1e-13);
  }
}

TEST_CASE("contact representative meets every predicate") {
  for (int n : {1, 2, 3}) {
    Space s = apc::make_space(n);
    TensorF F = gbar5(s);

    apc::ProjectionSet ps = apc::project_all(F);
    CHECK(ps.label == std::vector<int>{5});
    CHECK(ps.lee.theta(s.xi()) == doctest::Approx(2.0 * n));

    CHECK(apc::is_normal(F));
    CHECK(apc::is_paracontact(F));
    CHECK(apc::is_para_sasakian(F));
    CHECK(apc::is_k_paracontact(F));
    CHECK(apc::is_quasi_para_sasakian(F));
    CHECK(apc::is_xi_killing(F));
    CHECK(apc::is_g5bar(F));

    // d eta equals the fundamental form on the nose.
    apc::GeometricReport r = apc::derived_forms(F);
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < s.dim(); ++j)
        CHECK(r.d_eta(i, j) == doctest::Approx(s.g_phi(j, i)).epsilon(1e-14));
  }
}

TEST_CASE("trace scaling separates the contact subclass") {
  Space s = apc::make_space(2);
  TensorF half = scaled(gbar5(s), 0.5);  // theta(xi) = n, not 2n

  CHECK(apc::is_normal(half));
  CHECK(apc::is_quasi_para_sasakian(half));
  CHECK(apc::is_xi_killing(half));
  CHECK_FALSE(apc::is_paracontact(half));
  CHECK_FALSE(apc::is_para_sasakian(half));
  CHECK_FALSE(apc::is_k_paracontact(half));
  CHECK_FALSE(apc::is_g5bar(half));

  // The label is scale-invariant; the contact trace is not.
  TensorF tiny = scaled(gbar5(s), 1e-8);
  CHECK(apc::project_all(tiny).label == std::vector<int>{5});
  CHECK_FALSE(apc::is_g5bar(tiny));
}

TEST_CASE("zero tensor predicates") {
  TensorF z = apc::zero_tensor(apc::make_space(2));
  CHECK(apc::is_normal(z));
  CHECK(apc::is_quasi_para_sasakian(z));
  CHECK(apc::is_xi_killing(z));
  CHECK_FALSE(apc::is_paracontact(z));
  CHECK_FALSE(apc::is_para_sasakian(z));
  CHECK_FALSE(apc::is_k_paracontact(z));
  CHECK_FALSE(apc::is_g5bar(z));
  CHECK(apc::project_all(z).label.empty());
}

TEST_CASE("normality holds exactly on its six classes") {
  for (int n : {1, 2, 3}) {
    Space s = apc::make_space(n);
    auto dims = apc::subspace_dimensions(n);
    for (int c = 1; c <= 12; ++c) {
      if (dims[c - 1] == 0) continue;
      TensorF m = apc::random_class_member(s, c, 61);
      const bool expected = (c == 1 || c == 2 || c == 5 || c == 6 || c == 7 || c == 8);
      CAPTURE(n);
      CAPTURE(c);
      // Both routes are consulted internally; a mismatch would throw.
      CHECK(apc::is_normal(m) == expected);
    }
  }
}

TEST_CASE("xi is Killing exactly on its eight classes") {
  for (int n : {1, 2, 3}) {
    Space s = apc::make_space(n);
    auto dims = apc::subspace_dimensions(n);
    for (int c = 1; c <= 12; ++c) {
      if (dims[c - 1] == 0) continue;
      TensorF m = apc::random_class_member(s, c, 62);
      const bool expected = (c <= 5 || c == 8 || c == 9 || c == 11);
      CAPTURE(n);
      CAPTURE(c);
      CHECK(apc::is_xi_killing(m) == expected);
    }
  }
}

TEST_CASE("compound predicates on crafted mixtures") {
  Space s = apc::make_space(2);
  TensorF contact = gbar5(s);
  TensorF m4 = apc::random_class_member(s, 4, 77);
  TensorF m6 = apc::random_class_member(s, 6, 78);
  TensorF m8 = apc::random_class_member(s, 8, 79);
  TensorF m10 = apc::random_class_member(s, 10, 80);
  REQUIRE(m4.comps.max_abs() > 1e-6);
  REQUIRE(m10.comps.max_abs() > 1e-6);

  // Classes 4 and 10 carry no trace, so the contact trace survives mixing.
  TensorF pc = plus(contact, plus(m4, m10));
  CHECK(apc::is_paracontact(pc));
  CHECK_FALSE(apc::is_para_sasakian(pc));
  CHECK_FALSE(apc::is_k_paracontact(pc));  // class 10 breaks the Killing part
  CHECK_FALSE(apc::is_normal(pc));

  TensorF kc = plus(contact, m4);
  CHECK(apc::is_k_paracontact(kc));
  CHECK(apc::is_paracontact(kc));
  CHECK(apc::is_xi_killing(kc));
  CHECK_FALSE(apc::is_para_sasakian(kc));  // class 4 breaks normality

  TensorF qs = plus(scaled(contact, 0.3), m8);
  CHECK(apc::is_quasi_para_sasakian(qs));
  CHECK(apc::is_normal(qs));
  CHECK_FALSE(apc::is_paracontact(qs));

  // Class 6 breaks the closed fundamental form and the Killing condition.
  TensorF nm = plus(contact, m6);
  CHECK(apc::is_normal(nm));
  CHECK_FALSE(apc::is_quasi_para_sasakian(nm));
  CHECK_FALSE(apc::is_xi_killing(nm));
  CHECK_FALSE(apc::is_paracontact(nm));
}

TEST_CASE("geometric report carries all predicate flags") {
  Space s = apc::make_space(1);
  apc::GeometricReport r = apc::geometric_report(gbar5(s), 1e-9);
  for (const char* key :
       {"normal", "paracontact", "para_sasakian", "k_paracontact",
        "quasi_para_sasakian", "xi_killing", "g5bar"}) {
    REQUIRE(r.flags.count(key) == 1);
    CHECK(r.flags.at(key));
  }
  apc::GeometricReport z =
      apc::geometric_report(apc::zero_tensor(s), 1e-9);
  CHECK(z.flags.at("normal"));
  CHECK_FALSE(z.flags.at("paracontact"));
}
