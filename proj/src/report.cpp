#include "apc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace apc {

namespace {

using njson = nlohmann::ordered_json;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Double rounded to 12 significant digits, for stable numeric output.
double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

njson vector_json(const Eigen::VectorXd& v) {
  njson a = njson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(round12(v(i)));
  return a;
}

njson matrix_json(const Eigen::Matrix3d& m) {
  njson rows = njson::array();
  for (int i = 0; i < 3; ++i) {
    njson row = njson::array();
    for (int j = 0; j < 3; ++j) row.push_back(round12(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const Eigen::Matrix3d& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << "[";
    for (int j = 0; j < 3; ++j) {
      os << fmt12(m(i, j));
      if (j < 2) os << ", ";
    }
    os << "]";
    if (i < 2) os << ", ";
  }
  os << "]";
  return os.str();
}

std::string vector_text(const Eigen::VectorXd& v) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    os << fmt12(v(i));
    if (i + 1 < v.size()) os << ", ";
  }
  os << "]";
  return os.str();
}

double json_number(const njson& j, const std::string& what) {
  if (!j.is_number()) {
    throw std::invalid_argument("parse_input: " + what + " must be a number");
  }
  return j.get<double>();
}

Eigen::Vector3d json_vec3(const njson& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument("parse_input: " + what +
                                " must be an array of 3 numbers");
  }
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) v(i) = json_number(j[i], what);
  return v;
}

bool contact_trace_holds(const TensorF& F, const ProjectionSet& ps,
                         double tol) {
  const double target = 2.0 * F.space.n();
  const double tfx = ps.lee.theta(F.space.xi());
  return std::abs(tfx - target) <= tol * std::max({1.0, std::abs(tfx), target});
}

}  // namespace

InputDocument parse_input_text(const std::string& text) {
  njson j;
  try {
    j = njson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("parse_input: invalid JSON: ") +
                                e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("parse_input: top level must be an object");
  }
  if (!j.contains("version") || !j["version"].is_number_integer() ||
      j["version"].get<int>() != 1) {
    throw std::invalid_argument("parse_input: version must be the integer 1");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("parse_input: kind must be a string");
  }

  InputDocument doc;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "lie3") {
    doc.kind = InputDocument::Kind::lie3;
  } else if (kind == "tensor") {
    doc.kind = InputDocument::Kind::tensor;
  } else {
    throw std::invalid_argument("parse_input: kind must be lie3 or tensor");
  }

  if (j.contains("tol")) {
    doc.tol = json_number(j["tol"], "tol");
    if (!(doc.tol > 0.0) || doc.tol > 0.1) {
      throw std::invalid_argument("parse_input: tol must be in (0, 0.1]");
    }
  }

  if (doc.kind == InputDocument::Kind::lie3) {
    doc.n = 1;
    if (j.contains("n")) {
      if (!j["n"].is_number_integer() || j["n"].get<int>() != 1) {
        throw std::invalid_argument("parse_input: lie3 documents require n = 1");
      }
    }
    if (!j.contains("structure_constants") ||
        !j["structure_constants"].is_object()) {
      throw std::invalid_argument(
          "parse_input: lie3 documents require a structure_constants object");
    }
    const njson& sc = j["structure_constants"];
    for (const char* key : {"c12", "c13", "c23"}) {
      if (!sc.contains(key)) {
        throw std::invalid_argument(
            std::string("parse_input: structure_constants missing ") + key);
      }
    }
    doc.algebra.c12 = json_vec3(sc["c12"], "c12");
    doc.algebra.c13 = json_vec3(sc["c13"], "c13");
    doc.algebra.c23 = json_vec3(sc["c23"], "c23");
    return doc;
  }

  if (!j.contains("n") || !j["n"].is_number_integer() ||
      j["n"].get<int>() < 1) {
    throw std::invalid_argument(
        "parse_input: tensor documents require an integer n >= 1");
  }
  doc.n = j["n"].get<int>();
  if (!j.contains("components") || !j["components"].is_array()) {
    throw std::invalid_argument(
        "parse_input: tensor documents require a components array");
  }
  const int dim = 2 * doc.n + 1;
  std::vector<bool> seen(static_cast<std::size_t>(dim) * dim * dim, false);
  for (const njson& entry : j["components"]) {
    if (!entry.is_array() || entry.size() != 4) {
      throw std::invalid_argument(
          "parse_input: each component must be [i, j, k, value]");
    }
    int idx[3];
    for (int t = 0; t < 3; ++t) {
      if (!entry[t].is_number_integer()) {
        throw std::invalid_argument(
            "parse_input: component indices must be integers");
      }
      idx[t] = entry[t].get<int>();
      if (idx[t] < 1 || idx[t] > dim) {
        throw std::invalid_argument(
            "parse_input: component index out of range 1.." +
            std::to_string(dim));
      }
    }
    const double value = json_number(entry[3], "component value");
    const std::size_t flat =
        (static_cast<std::size_t>(idx[0] - 1) * dim + (idx[1] - 1)) * dim +
        (idx[2] - 1);
    if (seen[flat]) {
      throw std::invalid_argument("parse_input: duplicate component (" +
                                  std::to_string(idx[0]) + "," +
                                  std::to_string(idx[1]) + "," +
                                  std::to_string(idx[2]) + ")");
    }
    seen[flat] = true;
    doc.components.emplace_back(idx[0], idx[1], idx[2], value);
  }
  return doc;
}

InputDocument parse_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("parse_input: cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input_text(ss.str());
}

TensorF document_tensor(const InputDocument& doc) {
  if (doc.kind == InputDocument::Kind::lie3) {
    return structure_tensor(doc.algebra);
  }
  const Space s = make_space(doc.n);
  TensorF F = zero_tensor(s);
  for (const auto& [i, j, k, v] : doc.components) {
    F.comps(i - 1, j - 1, k - 1) = v;
  }
  return F;
}

ClassificationReport run_classify(const InputDocument& doc) {
  ClassificationReport rep;
  rep.doc = doc;
  rep.tensor = document_tensor(doc);
  rep.projections = project_all(rep.tensor, doc.tol);
  rep.flags = geometric_report(rep.tensor, doc.tol).flags;

  const bool contact = contact_trace_holds(rep.tensor, rep.projections, doc.tol);
  std::ostringstream label;
  if (rep.projections.label.empty()) {
    label << "G0";
  } else {
    bool first = true;
    for (int c : rep.projections.label) {
      if (!first) label << " + ";
      first = false;
      if (c == 5 && contact) {
        label << "G5bar";
      } else {
        label << "G" << c;
      }
    }
  }
  rep.class_label = label.str();

  const int xi = rep.tensor.space.xi();
  const double two_n = 2.0 * rep.tensor.space.n();
  if (rep.projections.label == std::vector<int>{5}) {
    rep.alpha = rep.projections.lee.theta(xi) / two_n;
  }
  if (rep.projections.label == std::vector<int>{6}) {
    rep.alpha_star = rep.projections.lee.theta_star(xi) / two_n;
  }

  if (doc.kind == InputDocument::Kind::lie3) {
    rep.family = theorem41_family(doc.algebra);
    // Asserts agreement between the bracket route and the tensor route.
    nijenhuis_normality(doc.algebra, doc.tol);
  }
  return rep;
}

namespace {

njson classification_json(const ClassificationReport& rep) {
  const int xi = rep.tensor.space.xi();
  njson c;
  c["label"] = rep.class_label;
  c["classes"] = rep.projections.label;
  njson mags;
  for (int i = 0; i < 12; ++i) {
    mags["G" + std::to_string(i + 1)] = round12(rep.projections.magnitude[i]);
  }
  c["magnitudes"] = mags;
  c["scale"] = round12(rep.projections.scale);
  c["tol"] = rep.projections.tol_used;
  njson lee;
  lee["theta"] = vector_json(rep.projections.lee.theta);
  lee["theta_star"] = vector_json(rep.projections.lee.theta_star);
  lee["omega"] = vector_json(rep.projections.lee.omega);
  lee["theta_xi"] = round12(rep.projections.lee.theta(xi));
  lee["theta_star_xi"] = round12(rep.projections.lee.theta_star(xi));
  c["lee"] = lee;
  njson flags;
  for (const auto& [k, v] : rep.flags) flags[k] = v;
  c["flags"] = flags;
  if (rep.alpha) c["alpha"] = round12(*rep.alpha);
  if (rep.alpha_star) c["alpha_star"] = round12(*rep.alpha_star);
  return c;
}

njson tensor_json(const ClassificationReport& rep) {
  njson t;
  t["version"] = 1;
  t["kind"] = "tensor";
  t["n"] = rep.tensor.space.n();
  t["tol"] = rep.doc.tol;
  njson comps = njson::array();
  const int d = rep.tensor.space.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const double v = rep.tensor.comps(i, j, k);
        if (v != 0.0) {
          comps.push_back(njson::array({i + 1, j + 1, k + 1, v}));
        }
      }
  t["components"] = comps;
  return t;
}

njson family_match_json(const FamilyMatch& m) {
  njson f;
  if (m.g_class) {
    f["pattern_class"] = *m.g_class;
  } else {
    f["pattern_class"] = nullptr;
  }
  f["detail"] = m.detail;
  return f;
}

njson report_json(const ClassificationReport& rep) {
  njson j;
  j["version"] = 1;
  j["kind"] =
      rep.doc.kind == InputDocument::Kind::lie3 ? "lie3" : "tensor";
  j["n"] = rep.tensor.space.n();
  j["tol"] = rep.doc.tol;
  if (rep.doc.kind == InputDocument::Kind::lie3) {
    njson sc;
    sc["c12"] = vector_json(rep.doc.algebra.c12);
    sc["c13"] = vector_json(rep.doc.algebra.c13);
    sc["c23"] = vector_json(rep.doc.algebra.c23);
    j["structure_constants"] = sc;
  }
  j["classification"] = classification_json(rep);
  j["tensor"] = tensor_json(rep);
  if (rep.family) j["family"] = family_match_json(*rep.family);
  return j;
}

std::string classification_text(const ClassificationReport& rep) {
  const int xi = rep.tensor.space.xi();
  std::ostringstream os;
  os << "label: " << rep.class_label << "\n";
  os << "magnitudes:";
  for (int i = 0; i < 12; ++i) {
    os << " G" << (i + 1) << "=" << fmt12(rep.projections.magnitude[i]);
  }
  os << "\n";
  os << "scale: " << fmt12(rep.projections.scale) << "\n";
  os << "theta: " << vector_text(rep.projections.lee.theta) << "\n";
  os << "theta_star: " << vector_text(rep.projections.lee.theta_star) << "\n";
  os << "omega: " << vector_text(rep.projections.lee.omega) << "\n";
  os << "theta(xi): " << fmt12(rep.projections.lee.theta(xi)) << "\n";
  os << "theta_star(xi): " << fmt12(rep.projections.lee.theta_star(xi))
     << "\n";
  os << "flags:";
  for (const auto& [k, v] : rep.flags) {
    os << " " << k << "=" << (v ? "true" : "false");
  }
  os << "\n";
  if (rep.alpha) os << "alpha: " << fmt12(*rep.alpha) << "\n";
  if (rep.alpha_star) os << "alpha_star: " << fmt12(*rep.alpha_star) << "\n";
  if (rep.family) {
    os << "family: ";
    if (rep.family->g_class) {
      os << "G" << *rep.family->g_class << " (" << rep.family->detail << ")";
    } else {
      os << rep.family->detail;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string render_classification_json(const ClassificationReport& rep) {
  return classification_json(rep).dump(2);
}

std::string render_report(const ClassificationReport& rep,
                          const std::string& format) {
  if (format == "json") {
    return report_json(rep).dump(2) + "\n";
  }
  if (format != "text") {
    throw std::invalid_argument("render_report: format must be text or json");
  }
  std::ostringstream os;
  os << "kind: "
     << (rep.doc.kind == InputDocument::Kind::lie3 ? "lie3" : "tensor")
     << "\n";
  os << "n: " << rep.tensor.space.n() << "\n";
  os << "tol: " << fmt12(rep.doc.tol) << "\n";
  os << classification_text(rep);
  return os.str();
}

std::string run_dims(int n, const std::string& format) {
  const std::array<int, 12> dims = subspace_dimensions(n);
  const int total = f_space_dimension(n);
  if (format == "json") {
    njson j;
    j["n"] = n;
    njson d;
    for (int i = 0; i < 12; ++i) d["G" + std::to_string(i + 1)] = dims[i];
    j["dims"] = d;
    j["total"] = total;
    return j.dump(2) + "\n";
  }
  if (format != "text") {
    throw std::invalid_argument("run_dims: format must be text or json");
  }
  std::ostringstream os;
  os << "n: " << n << " (space dimension " << (2 * n + 1) << ")\n";
  int sum = 0;
  for (int i = 0; i < 12; ++i) {
    os << "G" << (i + 1) << ": " << dims[i] << "\n";
    sum += dims[i];
  }
  os << "sum: " << sum << "\n";
  os << "total: " << total << "\n";
  return os.str();
}

FamilyReport run_family(const std::string& name,
                        const std::vector<double>& params, bool with_curvature,
                        const std::optional<std::array<double, 3>>& expmap) {
  FamilyReport rep;
  rep.name = name;
  rep.params = params;
  const LieAlgebra3 L = canonical_family(name, params);
  InputDocument doc;
  doc.kind = InputDocument::Kind::lie3;
  doc.algebra = L;
  rep.classification = run_classify(doc);
  if (with_curvature) {
    rep.curv = curvature(L, levi_civita(L));
  }
  if (expmap) {
    FamilyReport::Expmap em;
    em.a = (*expmap)[0];
    em.b = (*expmap)[1];
    em.c = (*expmap)[2];
    em.closed = closed_form_exp(name, params, em.a, em.b, em.c).mat;
    em.numeric = mat_exp(adjoint(L).a_of(em.a, em.b, em.c)).mat;
    em.max_deviation = (em.closed - em.numeric).cwiseAbs().maxCoeff();
    rep.expmap = em;
  }
  return rep;
}

std::string render_family(const FamilyReport& rep, const std::string& format) {
  if (format == "json") {
    njson j;
    j["family"] = rep.name;
    njson p = njson::array();
    for (double v : rep.params) p.push_back(v);
    j["params"] = p;
    j["classification"] = classification_json(rep.classification);
    if (rep.classification.family) {
      j["pattern"] = family_match_json(*rep.classification.family);
    }
    if (rep.curv) {
      njson c;
      c["ricci"] = matrix_json(rep.curv->ricci);
      c["scalar"] = round12(rep.curv->scalar);
      c["einstein_type"] = to_string(rep.curv->einstein_type);
      njson fit;
      fit["a"] = round12(rep.curv->fit_a);
      fit["b"] = round12(rep.curv->fit_b);
      fit["residual"] = round12(rep.curv->fit_residual);
      c["fit"] = fit;
      j["curvature"] = c;
    }
    if (rep.expmap) {
      njson e;
      e["a"] = rep.expmap->a;
      e["b"] = rep.expmap->b;
      e["c"] = rep.expmap->c;
      e["closed_form"] = matrix_json(rep.expmap->closed);
      e["numeric"] = matrix_json(rep.expmap->numeric);
      e["max_deviation"] = round12(rep.expmap->max_deviation);
      j["expmap"] = e;
    }
    return j.dump(2) + "\n";
  }
  if (format != "text") {
    throw std::invalid_argument("render_family: format must be text or json");
  }
  std::ostringstream os;
  os << "family: " << rep.name << "\nparams: [";
  for (std::size_t i = 0; i < rep.params.size(); ++i) {
    os << fmt12(rep.params[i]);
    if (i + 1 < rep.params.size()) os << ", ";
  }
  os << "]\n";
  os << classification_text(rep.classification);
  if (rep.curv) {
    os << "ricci: " << matrix_text(rep.curv->ricci) << "\n";
    os << "scalar: " << fmt12(rep.curv->scalar) << "\n";
    os << "einstein_type: " << to_string(rep.curv->einstein_type) << "\n";
    os << "fit: a=" << fmt12(rep.curv->fit_a) << " b=" << fmt12(rep.curv->fit_b)
       << " residual=" << fmt12(rep.curv->fit_residual) << "\n";
  }
  if (rep.expmap) {
    os << "expmap at (a,b,c)=(" << fmt12(rep.expmap->a) << ", "
       << fmt12(rep.expmap->b) << ", " << fmt12(rep.expmap->c) << ")\n";
    os << "closed_form: " << matrix_text(rep.expmap->closed) << "\n";
    os << "numeric: " << matrix_text(rep.expmap->numeric) << "\n";
    os << "max_deviation: " << fmt12(rep.expmap->max_deviation) << "\n";
  }
  return os.str();
}

LieAlgebra3 random_jacobi_algebra(std::uint64_t seed) {
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(seed + attempt * 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::Vector3d u, v;
    for (int i = 0; i < 3; ++i) u(i) = dist(rng);
    for (int i = 0; i < 3; ++i) v(i) = dist(rng);
    // Solve the Jacobi identity for the third bracket vector w:
    //   [(u2 + v3) I - u e2^T - v e3^T] w = v1 u - u1 v   (1-based labels).
    Eigen::Matrix3d M = (u(1) + v(2)) * Eigen::Matrix3d::Identity();
    M.col(1) -= u;
    M.col(2) -= v;
    const Eigen::Vector3d rhs = v(0) * u - u(0) * v;
    Eigen::FullPivLU<Eigen::Matrix3d> lu(M);
    if (!lu.isInvertible()) continue;
    LieAlgebra3 L;
    L.c12 = u;
    L.c13 = v;
    L.c23 = lu.solve(rhs);
    if (L.c23.cwiseAbs().maxCoeff() > 25.0) continue;  // keep scales tame
    if (check_jacobi(L)) return L;
  }
  throw std::logic_error("random_jacobi_algebra: no solvable draw found");
}

TensorF random_mixed_member(const Space& s, const std::vector<int>& classes,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  std::bernoulli_distribution flip(0.5);
  TensorF acc = zero_tensor(s);
  std::uint64_t sub = seed;
  for (int c : classes) {
    sub = sub * 6364136223846793005ULL + 1442695040888963407ULL;
    TensorF part = random_class_member(s, c, sub);
    const double m = part.comps.max_abs();
    if (m < 1e-12) {
      throw std::invalid_argument(
          "random_mixed_member: class " + std::to_string(c) +
          " has no members at this n");
    }
    double w = weight(rng) / m;
    if (flip(rng)) w = -w;
    part.comps *= w;
    acc.comps += part.comps;
  }
  return acc;
}

namespace {

struct ExpDraw {
  std::string family;
  std::vector<double> params;
  double a = 0, b = 0, c = 0;
};

double draw_nz(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> mag(lo, hi);
  std::bernoulli_distribution flip(0.5);
  const double v = mag(rng);
  return flip(rng) ? v : -v;
}

double draw_any(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  return d(rng);
}

// Seeded coefficient draw inside one of the eleven analytic branches.
ExpDraw exp_branch_draw(int branch, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ExpDraw d;
  switch (branch) {
    case 0: {  // g5, single branch
      d.family = "g5";
      d.params = {draw_nz(rng, 0.2, 1.5)};
      d.a = draw_any(rng);
      d.b = draw_any(rng);
      d.c = draw_any(rng);
      break;
    }
    case 1:    // g6, c != 0, beta = alpha, b = -a
    case 2: {  // g6, c != 0, beta = alpha, b != -a
      d.family = "g6";
      const double alpha = draw_nz(rng, 0.2, 1.5);
      d.params = {alpha, alpha};
      d.c = draw_nz(rng, 0.1, 1.5);
      d.a = draw_any(rng);
      if (branch == 1) {
        d.b = -d.a;
      } else {
        do {
          d.b = draw_any(rng);
        } while (std::abs(d.a + d.b) < 0.1);
      }
      break;
    }
    case 3:    // g6, c != 0, beta = -alpha, b = a
    case 4: {  // g6, c != 0, beta = -alpha, b != a
      d.family = "g6";
      const double alpha = draw_nz(rng, 0.2, 1.5);
      d.params = {alpha, -alpha};
      d.c = draw_nz(rng, 0.1, 1.5);
      d.a = draw_any(rng);
      if (branch == 3) {
        d.b = d.a;
      } else {
        do {
          d.b = draw_any(rng);
        } while (std::abs(d.a - d.b) < 0.1);
      }
      break;
    }
    case 5: {  // g6, c != 0, beta != +-alpha
      d.family = "g6";
      const double alpha = draw_nz(rng, 0.2, 1.5);
      double beta;
      do {
        beta = draw_nz(rng, 0.2, 1.5);
      } while (std::abs(beta - alpha) < 0.1 || std::abs(beta + alpha) < 0.1);
      d.params = {alpha, beta};
      d.c = draw_nz(rng, 0.1, 1.5);
      d.a = draw_any(rng);
      d.b = draw_any(rng);
      break;
    }
    case 6: {  // g6, c = 0
      d.family = "g6";
      d.params = {draw_nz(rng, 0.2, 1.5), draw_nz(rng, 0.2, 1.5)};
      d.a = draw_any(rng);
      d.b = draw_any(rng);
      d.c = 0.0;
      break;
    }
    case 7: {  // g10, c != 0
      d.family = "g10";
      d.params = {draw_nz(rng, 0.2, 1.5)};
      d.a = draw_any(rng);
      d.b = draw_any(rng);
      d.c = draw_nz(rng, 0.1, 1.5);
      break;
    }
    case 8: {  // g10, c = 0
      d.family = "g10";
      d.params = {draw_nz(rng, 0.2, 1.5)};
      d.a = draw_any(rng);
      d.b = draw_any(rng);
      d.c = 0.0;
      break;
    }
    case 9: {  // g12, a beta - b alpha != 0
      d.family = "g12";
      const double alpha = draw_nz(rng, 0.2, 1.5);
      const double beta = draw_nz(rng, 0.2, 1.5);
      d.params = {alpha, beta};
      d.c = draw_any(rng);
      do {
        d.a = draw_any(rng);
        d.b = draw_any(rng);
      } while (std::abs(d.a * beta - d.b * alpha) < 0.1);
      break;
    }
    case 10: {  // g12, a beta - b alpha = 0
      d.family = "g12";
      if (seed % 2 == 0) {
        const double alpha = draw_nz(rng, 0.2, 1.5);
        d.params = {alpha, alpha};
        d.a = draw_any(rng);
        d.b = d.a;
      } else {
        const double alpha = draw_nz(rng, 0.2, 1.5);
        const double beta = draw_nz(rng, 0.2, 1.5);
        d.params = {alpha, beta};
        d.b = draw_any(rng);
        d.a = d.b * alpha / beta;
      }
      d.c = draw_any(rng);
      break;
    }
    default:
      throw std::invalid_argument("exp_branch_draw: branch out of range");
  }
  return d;
}

double frob(const TensorF& F) {
  double s = 0.0;
  for (double v : F.comps.data()) s += v * v;
  return std::sqrt(s);
}

}  // namespace

int run_property_suite(std::uint64_t seed, int iters, std::ostream& out) {
  if (iters < 1) {
    throw std::invalid_argument("run_property_suite: iters must be positive");
  }
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, double worst) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name << " (worst deviation "
        << fmt12(worst) << ")\n";
    if (!ok) ++failures;
  };

  // Projection completeness, idempotence, orthogonality.
  {
    double worst = 0.0;
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
      const Space s = make_space(n);
      for (int t = 0; t < iters; ++t) {
        const std::uint64_t sub = seed + 1000003ULL * n + t;
        TensorF F = random_f_member(s, sub);
        ProjectionSet ps = project_all(F);
        const double scale = std::max(1.0, ps.scale);
        TensorF sum = zero_tensor(s);
        for (const auto& p : ps.g_parts) sum.comps += p.comps;
        worst = std::max(worst, (sum.comps - F.comps).max_abs() / scale);
        for (int i = 0; i < 12; ++i) {
          if (ps.magnitude[i] < 1e-12) continue;
          ProjectionSet again = project_all(ps.g_parts[i]);
          worst = std::max(
              worst,
              (again.g_parts[i].comps - ps.g_parts[i].comps).max_abs() / scale);
          for (int k = 0; k < 12; ++k) {
            if (k != i) worst = std::max(worst, again.magnitude[k] / scale);
          }
        }
        for (int i = 0; i < 12; ++i) {
          for (int k = i + 1; k < 12; ++k) {
            const double ip = inner_product(ps.g_parts[i], ps.g_parts[k]);
            const double den =
                std::max(1.0, frob(ps.g_parts[i]) * frob(ps.g_parts[k]));
            worst = std::max(worst, std::abs(ip) / den);
          }
        }
      }
    }
    ok = worst <= 1e-9;
    report("projections: completeness, idempotence, orthogonality", ok, worst);
  }

  // Equivariance of the decomposition under the structure group.
  {
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const Space s = make_space(n);
      for (int t = 0; t < iters; ++t) {
        const std::uint64_t sub = seed + 2000003ULL * n + t;
        TensorF F = random_f_member(s, sub);
        ParaunitaryElement r = random_paraunitary(n, sub ^ 0xabcdefULL);
        ProjectionSet before = project_all(F);
        ProjectionSet after = project_all(group_action(r, F));
        for (int i = 0; i < 12; ++i) {
          TensorF moved = group_action(r, before.g_parts[i]);
          worst = std::max(
              worst, (moved.comps - after.g_parts[i].comps).max_abs() /
                         std::max(1.0, before.scale));
        }
      }
    }
    report("projections: equivariance under the structure group", worst <= 1e-9,
           worst);
  }

  // Predicate route agreement on random mixtures.
  {
    bool ok = true;
    int checked = 0;
    std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
    for (int n = 1; n <= 3; ++n) {
      const Space s = make_space(n);
      std::vector<int> avail;
      for (int c = 1; c <= 12; ++c) {
        if (subspace_dimension(n, c) > 0) avail.push_back(c);
      }
      for (int t = 0; t < iters; ++t) {
        std::vector<int> classes;
        std::sample(avail.begin(), avail.end(), std::back_inserter(classes),
                    1 + static_cast<int>(rng() % 3), rng);
        TensorF F =
            random_mixed_member(s, classes, seed + 3000017ULL * n + t);
        try {
          is_normal(F);
          is_paracontact(F);
          is_para_sasakian(F);
          is_k_paracontact(F);
          is_quasi_para_sasakian(F);
          is_xi_killing(F);
          ++checked;
        } catch (const std::logic_error&) {
          ok = false;
        }
      }
    }
    report("predicates: identity and class routes agree (" +
               std::to_string(checked) + " tensors)",
           ok, ok ? 0.0 : 1.0);
  }

  // Structure tensor routes and normality routes on random algebras.
  {
    bool ok = true;
    double worst = 0.0;
    for (int t = 0; t < iters; ++t) {
      try {
        const LieAlgebra3 L = random_jacobi_algebra(seed + 7000003ULL + t);
        TensorF a = structure_tensor_koszul(L);
        TensorF b = structure_tensor_closed(L);
        worst = std::max(worst, (a.comps - b.comps).max_abs());
        structure_tensor(L);
        nijenhuis_normality(L);
      } catch (const std::logic_error&) {
        ok = false;
      }
    }
    report("lie3: component routes and normality routes agree", ok && worst <= 1e-10,
           worst);
  }

  // Closed-form exponentials against the numerical exponential.
  {
    double worst = 0.0;
    for (int branch = 0; branch < 11; ++branch) {
      for (int t = 0; t < iters; ++t) {
        const ExpDraw d = exp_branch_draw(branch, seed + 11000027ULL * branch + t);
        const LieAlgebra3 L = canonical_family(d.family, d.params);
        const Eigen::Matrix3d A = adjoint(L).a_of(d.a, d.b, d.c);
        const Eigen::Matrix3d closed =
            closed_form_exp(d.family, d.params, d.a, d.b, d.c).mat;
        const Eigen::Matrix3d numeric = mat_exp(A).mat;
        worst = std::max(worst, (closed - numeric).cwiseAbs().maxCoeff());
      }
    }
    report("matrix groups: closed-form exponentials match the numerical route",
           worst <= 1e-9, worst);
  }

  return failures;
}

}  // namespace apc
