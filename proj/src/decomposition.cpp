#include "apc/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace apc {

namespace {

// Component lookup treating index -1 (a slot annihilated by phi) as zero.
inline double at(const Tensor3& t, int i, int j, int k) {
  return (i >= 0 && j >= 0 && k >= 0) ? t(i, j, k) : 0.0;
}

// Covector value through phi: th(phi e_k).
inline double through_phi(const Space& s, const Eigen::VectorXd& th, int k) {
  const int pk = s.phi(k);
  return pk >= 0 ? th(pk) : 0.0;
}

// Covector value through phi^2: th(phi^2 e_k).
inline double through_h(const Space& s, const Eigen::VectorXd& th, int k) {
  return s.h(k) >= 0 ? th(k) : 0.0;
}

// The metric bracket shared by the class-1 identity and projection:
//   g(x,phi y) th(phi z) - g(x,phi z) th(phi y)
//   - g(phi x,phi y) th(phi^2 z) + g(phi x,phi z) th(phi^2 y).
Tensor3 class1_bracket(const Space& s, const Eigen::VectorXd& th) {
  const int d = s.dim();
  Tensor3 r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        r(i, j, k) = s.g_phi(i, j) * through_phi(s, th, k) -
                     s.g_phi(i, k) * through_phi(s, th, j) -
                     s.g_phiphi(i, j) * through_h(s, th, k) +
                     s.g_phiphi(i, k) * through_h(s, th, j);
  return r;
}

// Trace-block tensor of class 5: eta(y) g(phi x,phi z) - eta(z) g(phi x,phi y).
Tensor3 class5_shape(const Space& s) {
  const int d = s.dim();
  Tensor3 r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        r(i, j, k) =
            s.eta(j) * s.g_phiphi(i, k) - s.eta(k) * s.g_phiphi(i, j);
  return r;
}

// Trace-block tensor of class 6: eta(y) g(x,phi z) - eta(z) g(x,phi y).
Tensor3 class6_shape(const Space& s) {
  const int d = s.dim();
  Tensor3 r(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        r(i, j, k) = s.eta(j) * s.g_phi(i, k) - s.eta(k) * s.g_phi(i, j);
  return r;
}

struct FineParts {
  std::array<Tensor3, 12> g;
};

// All twelve fine projections of a member of the structure space.
FineParts fine_parts(const Space& s, const Tensor3& F, const LeeForms& lee) {
  const int d = s.dim();
  const int n = s.n();
  const int xi = s.xi();

  // Half-sums splitting the horizontal block by phi-parity.
  Tensor3 p12(d), q12(d);
  for (int i = 0; i < d; ++i) {
    const int hi = s.h(i), pi = s.phi(i);
    for (int j = 0; j < d; ++j) {
      const int hj = s.h(j);
      for (int k = 0; k < d; ++k) {
        const int hk = s.h(k), pk = s.phi(k);
        const double a = at(F, hi, hj, hk);
        const double b = at(F, pi, hj, pk);
        p12(i, j, k) = 0.5 * (a - b);
        q12(i, j, k) = 0.5 * (a + b);
      }
    }
  }

  FineParts out;
  for (auto& t : out.g) t = Tensor3(d);

  // Classes 1 and 2 split the phi-odd horizontal block by its theta trace.
  if (n >= 2) {
    LeeForms lee12 = lee_forms(TensorF{s, p12});
    const double c1 = 1.0 / (2.0 * (n - 1));
    Tensor3 br = class1_bracket(s, lee12.theta);
    br *= c1;
    out.g[0] = br;
    out.g[1] = p12 - br;
  } else {
    out.g[0] = Tensor3(d);
    out.g[1] = p12;
  }

  // Classes 3 and 4 split the phi-even horizontal block by the cyclic sum.
  Tensor3 f3(d);
  for (int i = 0; i < d; ++i) {
    const int hi = s.h(i), pi = s.phi(i);
    for (int j = 0; j < d; ++j) {
      const int hj = s.h(j), pj = s.phi(j);
      for (int k = 0; k < d; ++k) {
        const int hk = s.h(k), pk = s.phi(k);
        f3(i, j, k) = (at(F, hi, hj, hk) + at(F, pi, hj, pk) +
                       at(F, hj, hk, hi) + at(F, pj, hk, pi) +
                       at(F, hk, hi, hj) + at(F, pk, hi, pj)) /
                      6.0;
      }
    }
  }
  out.g[2] = f3;
  out.g[3] = q12 - f3;

  // Trace parts of the xi-wedge block.
  const double tfx = lee.theta(xi);
  const double tsx = lee.theta_star(xi);
  Tensor3 s5 = class5_shape(s);
  Tensor3 s6 = class6_shape(s);
  Tensor3 f5 = s5;
  f5 *= tfx / (2.0 * n);
  Tensor3 f6 = s6;
  f6 *= -tsx / (2.0 * n);
  out.g[4] = f5;
  out.g[5] = f6;

  // Remaining xi-wedge parts from the symmetry type of B(x,y) = F(x,y,xi).
  Tensor3 f7(d), f8(d), f9(d), f10(d);
  auto bh = [&](int i, int k) { return at(F, s.h(i), s.h(k), xi); };
  auto bp = [&](int i, int k) { return at(F, s.phi(i), s.phi(k), xi); };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const double ej = s.eta(j), ek = s.eta(k);
        if (ej == 0.0 && ek == 0.0) continue;
        f7(i, j, k) =
            -0.25 * ej * (bh(i, k) - bp(i, k) - bh(k, i) + bp(k, i)) +
            0.25 * ek * (bh(i, j) - bp(i, j) - bh(j, i) + bp(j, i)) +
            tsx / (2.0 * n) * (ej * s.g_phi(i, k) - ek * s.g_phi(i, j));
        f8(i, j, k) =
            -0.25 * ej * (bh(i, k) - bp(i, k) + bh(k, i) - bp(k, i)) +
            0.25 * ek * (bh(i, j) - bp(i, j) + bh(j, i) - bp(j, i)) -
            tfx / (2.0 * n) * (ej * s.g_phiphi(i, k) - ek * s.g_phiphi(i, j));
        f9(i, j, k) =
            -0.25 * ej * (bh(i, k) + bp(i, k) - bh(k, i) - bp(k, i)) +
            0.25 * ek * (bh(i, j) + bp(i, j) - bh(j, i) - bp(j, i));
        f10(i, j, k) =
            -0.25 * ej * (bh(i, k) + bp(i, k) + bh(k, i) + bp(k, i)) +
            0.25 * ek * (bh(i, j) + bp(i, j) + bh(j, i) + bp(j, i));
      }
    }
  }
  out.g[6] = f7;
  out.g[7] = f8;
  out.g[8] = f9;
  out.g[9] = f10;

  // Pure xi-slot parts.
  Tensor3 f11(d), f12(d);
  for (int j = 0; j < d; ++j) {
    const int hj = s.h(j);
    for (int k = 0; k < d; ++k) {
      const int hk = s.h(k);
      f11(xi, j, k) = at(F, xi, hj, hk);
      f12(xi, j, k) = s.eta(j) * at(F, xi, xi, hk) - s.eta(k) * at(F, xi, xi, hj);
    }
  }
  out.g[10] = f11;
  out.g[11] = f12;

  return out;
}

}  // namespace

LeeForms lee_forms(const TensorF& F) {
  const Space& s = F.space;
  const int d = s.dim();
  const int xi = s.xi();
  LeeForms lf;
  lf.theta = Eigen::VectorXd::Zero(d);
  lf.theta_star = Eigen::VectorXd::Zero(d);
  lf.omega = Eigen::VectorXd::Zero(d);
  for (int k = 0; k < d; ++k) {
    double th = 0.0, ts = 0.0;
    for (int i = 0; i < 2 * s.n(); ++i) {
      th += s.eps(i) * F.comps(i, i, k);
      ts += s.eps(i) * F.comps(i, s.phi(i), k);
    }
    lf.theta(k) = th;
    lf.theta_star(k) = ts;
    lf.omega(k) = F.comps(xi, xi, k);
  }
  return lf;
}

std::array<TensorF, 4> project_w(const TensorF& F) {
  const Space& s = F.space;
  const Tensor3& t = F.comps;
  const int d = s.dim();
  const int xi = s.xi();
  std::array<TensorF, 4> w{zero_tensor(s), zero_tensor(s), zero_tensor(s),
                           zero_tensor(s)};
  for (int i = 0; i < d; ++i) {
    const int hi = s.h(i);
    for (int j = 0; j < d; ++j) {
      const int hj = s.h(j), pj = s.phi(j);
      for (int k = 0; k < d; ++k) {
        const int hk = s.h(k), pk = s.phi(k);
        w[0].comps(i, j, k) = at(t, hi, hj, hk);
        w[1].comps(i, j, k) = -s.eta(j) * at(t, hi, hk, xi) +
                              s.eta(k) * at(t, hi, hj, xi);
        w[2].comps(i, j, k) = s.eta(i) * at(t, xi, pj, pk);
        w[3].comps(i, j, k) =
            s.eta(i) * (s.eta(j) * t(xi, xi, k) - s.eta(k) * t(xi, xi, j));
      }
    }
  }
  return w;
}

ProjectionSet project_all(const TensorF& F, double tol) {
  if (!is_in_F_space(F, tol)) {
    throw std::invalid_argument(
        "project_all: tensor is not in the structure space at this tolerance");
  }
  const Space& s = F.space;
  ProjectionSet out;
  out.w_parts = project_w(F);
  out.lee = lee_forms(F);
  FineParts fp = fine_parts(s, F.comps, out.lee);
  for (int i = 0; i < 12; ++i) {
    out.g_parts[i] = TensorF{s, std::move(fp.g[i])};
    out.magnitude[i] = out.g_parts[i].comps.max_abs();
  }
  out.scale = F.comps.max_abs();
  out.tol_used = tol;
  for (int i = 0; i < 12; ++i) {
    if (out.magnitude[i] > tol * out.scale) out.label.push_back(i + 1);
  }
  return out;
}

bool check_characteristic(const TensorF& F, int i, double tol) {
  if (i < 1 || i > 12) {
    throw std::invalid_argument("check_characteristic: class index out of range");
  }
  if (!is_in_F_space(F, tol)) {
    throw std::invalid_argument(
        "check_characteristic: tensor is not in the structure space");
  }
  const Space& s = F.space;
  const Tensor3& t = F.comps;
  const int d = s.dim();
  const int n = s.n();
  const int xi = s.xi();
  const double scale = t.max_abs();
  if (scale == 0.0) return true;
  const double thr = tol * scale;
  const LeeForms lee = lee_forms(F);

  auto max_residual = [&](auto&& model) {
    double m = 0.0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          m = std::max(m, std::abs(t(a, b, c) - model(a, b, c)));
    return m;
  };

  switch (i) {
    case 1: {
      if (n == 1) return false;  // class 1 is trivial in dimension 3
      Tensor3 br = class1_bracket(s, lee.theta);
      br *= 1.0 / (2.0 * (n - 1));
      return max_residual([&](int a, int b, int c) { return br(a, b, c); }) <=
             thr;
    }
    case 2: {
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c)
            if (std::abs(at(t, s.phi(a), s.phi(b), c) + t(a, b, c)) > thr)
              return false;
      return lee.theta.cwiseAbs().maxCoeff() <= thr;
    }
    case 3: {
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          if (std::abs(t(xi, b, c)) > thr) return false;
      for (int a = 0; a < d; ++a)
        for (int c = 0; c < d; ++c)
          if (std::abs(t(a, xi, c)) > thr) return false;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c)
            if (std::abs(t(a, b, c) + t(b, a, c)) > thr) return false;
      return true;
    }
    case 4: {
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c)
            if (std::abs(at(t, s.phi(a), s.phi(b), c) - t(a, b, c)) > thr)
              return false;
      return cyclic_sum(t).max_abs() <= thr;
    }
    case 5: {
      Tensor3 m = class5_shape(s);
      m *= lee.theta(xi) / (2.0 * n);
      return max_residual([&](int a, int b, int c) { return m(a, b, c); }) <=
             thr;
    }
    case 6: {
      Tensor3 m = class6_shape(s);
      m *= -lee.theta_star(xi) / (2.0 * n);
      return max_residual([&](int a, int b, int c) { return m(a, b, c); }) <=
             thr;
    }
    case 7:
    case 8:
    case 9:
    case 10: {
      // Equality with the xi-wedge coarse projection.
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int c = 0; c < d; ++c) {
            const double model = -s.eta(b) * at(t, s.h(a), s.h(c), xi) +
                                 s.eta(c) * at(t, s.h(a), s.h(b), xi);
            if (std::abs(t(a, b, c) - model) > thr) return false;
          }
      // Symmetry type of B(x,y) = F(x,y,xi) in x,y and under phi x phi.
      const double sym = (i == 7 || i == 9) ? 1.0 : -1.0;
      const double phs = (i == 7 || i == 8) ? 1.0 : -1.0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          if (std::abs(t(a, b, xi) + sym * t(b, a, xi)) > thr) return false;
          if (std::abs(t(a, b, xi) + phs * at(t, s.phi(a), s.phi(b), xi)) > thr)
            return false;
        }
      if (i == 7 && std::abs(lee.theta_star(xi)) > thr) return false;
      if (i == 8 && std::abs(lee.theta(xi)) > thr) return false;
      return true;
    }
    case 11:
      return max_residual([&](int a, int b, int c) {
               return s.eta(a) * at(t, xi, s.phi(b), s.phi(c));
             }) <= thr;
    case 12:
      return max_residual([&](int a, int b, int c) {
               return s.eta(a) *
                      (s.eta(b) * t(xi, xi, c) - s.eta(c) * t(xi, xi, b));
             }) <= thr;
    default:
      return false;
  }
}

namespace {

struct DimTable {
  int total = 0;
  std::array<int, 12> cls{};
};

const DimTable& dim_table(int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("subspace_dimension: supported for 1 <= n <= 4");
  }
  static std::map<int, DimTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const Space s = make_space(n);
  const int d = s.dim();
  const int N = d * d * d;

  // Span of the projection applied to all elementary tensors.
  Eigen::MatrixXd M(N, N);
  for (int c = 0; c < N; ++c) {
    TensorF e = zero_tensor(s);
    e.comps.data()[c] = 1.0;
    TensorF p = project_to_F_space(e);
    for (int r = 0; r < N; ++r) M(r, c) = p.comps.data()[r];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
  qr.setThreshold(1e-9);
  const int rank = static_cast<int>(qr.rank());
  Eigen::MatrixXd basis =
      qr.householderQ() * Eigen::MatrixXd::Identity(N, rank);

  DimTable table;
  table.total = rank;
  for (int cls = 1; cls <= 12; ++cls) {
    Eigen::MatrixXd img(N, rank);
    for (int c = 0; c < rank; ++c) {
      TensorF b = zero_tensor(s);
      for (int r = 0; r < N; ++r) b.comps.data()[r] = basis(r, c);
      LeeForms lee = lee_forms(b);
      FineParts fp = fine_parts(s, b.comps, lee);
      for (int r = 0; r < N; ++r) img(r, c) = fp.g[cls - 1].data()[r];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(img);
    int cnt = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k) {
      if (svd.singularValues()(k) > 1e-7) ++cnt;
    }
    table.cls[cls - 1] = cnt;
  }
  return cache.emplace(n, table).first->second;
}

}  // namespace

int f_space_dimension(int n) { return dim_table(n).total; }

int subspace_dimension(int n, int i) {
  if (i < 1 || i > 12) {
    throw std::invalid_argument("subspace_dimension: class index out of range");
  }
  return dim_table(n).cls[i - 1];
}

std::array<int, 12> subspace_dimensions(int n) { return dim_table(n).cls; }

TensorF random_class_member(const Space& s, int i, std::uint64_t seed) {
  if (i < 1 || i > 12) {
    throw std::invalid_argument("random_class_member: class index out of range");
  }
  TensorF f = random_f_member(s, seed);
  LeeForms lee = lee_forms(f);
  FineParts fp = fine_parts(s, f.comps, lee);
  return TensorF{s, std::move(fp.g[i - 1])};
}

}  // namespace apc
