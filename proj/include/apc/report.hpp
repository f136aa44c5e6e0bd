#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "apc/classify.hpp"
#include "apc/curvature.hpp"
#include "apc/decomposition.hpp"
#include "apc/lie3.hpp"
#include "apc/matrix_groups.hpp"
#include "apc/space.hpp"

namespace apc {

/// Parsed classification request (schema version 1).
struct InputDocument {
  enum class Kind { lie3, tensor };
  int version = 1;
  Kind kind = Kind::tensor;
  int n = 1;
  /// Structure constants; lie3 kind only.
  LieAlgebra3 algebra;
  /// Sparse 1-based components (i, j, k, value); tensor kind only.
  std::vector<std::tuple<int, int, int, double>> components;
  double tol = 1e-9;
};

/// Parse a JSON document from a file.  Throws std::invalid_argument with a
/// descriptive message on any schema or syntax violation.
InputDocument parse_input(const std::string& path);

/// Parse a JSON document from a string (same validation).
InputDocument parse_input_text(const std::string& text);

/// Assemble the dense tensor described by the document.  For the lie3 kind
/// this is the structure tensor of the algebra.
TensorF document_tensor(const InputDocument& doc);

/// Everything the classify command reports.
struct ClassificationReport {
  InputDocument doc;
  TensorF tensor;
  ProjectionSet projections;
  /// "G0" for the zero tensor, else "+"-joined class tokens; the token G5
  /// becomes G5bar when the pure trace class is contact-normalised.
  std::string class_label;
  std::map<std::string, bool> flags;
  /// theta(xi) / 2n when the label is exactly {5}.
  std::optional<double> alpha;
  /// theta_star(xi) / 2n when the label is exactly {6}.
  std::optional<double> alpha_star;
  /// Pattern match; lie3 kind only.
  std::optional<FamilyMatch> family;
};

ClassificationReport run_classify(const InputDocument& doc);

/// Render the full report; format is "text" or "json".
std::string render_report(const ClassificationReport& rep,
                          const std::string& format);

/// Render only the classification block (stable across input kinds that
/// produce the same tensor; used by the round-trip guarantee).
std::string render_classification_json(const ClassificationReport& rep);

/// Class dimension table for 1 <= n <= 4.
std::string run_dims(int n, const std::string& format);

/// Combined canonical-family report: classification of the structure
/// tensor, pattern match, optionally curvature and the exponential-map
/// comparison at coefficients (a,b,c).
struct FamilyReport {
  std::string name;
  std::vector<double> params;
  ClassificationReport classification;
  std::optional<CurvatureData> curv;
  struct Expmap {
    double a = 0, b = 0, c = 0;
    Eigen::Matrix3d closed = Eigen::Matrix3d::Identity();
    Eigen::Matrix3d numeric = Eigen::Matrix3d::Identity();
    double max_deviation = 0;
  };
  std::optional<Expmap> expmap;
};

FamilyReport run_family(const std::string& name,
                        const std::vector<double>& params, bool with_curvature,
                        const std::optional<std::array<double, 3>>& expmap);

std::string render_family(const FamilyReport& rep, const std::string& format);

/// Seeded random Lie algebra satisfying the Jacobi identity (two random
/// bracket vectors, third solved for); deterministic in seed.
LieAlgebra3 random_jacobi_algebra(std::uint64_t seed);

/// Seeded random sum of normalised class members with weights bounded away
/// from zero; classes must have positive dimension at this n.
TensorF random_mixed_member(const Space& s, const std::vector<int>& classes,
                            std::uint64_t seed);

/// Compact seeded re-run of the main invariants (projections, group action,
/// predicate route agreement, structure-tensor routes, exponentials).
/// Prints one status line per block to `out`; returns the number of
/// failures.
int run_property_suite(std::uint64_t seed, int iters, std::ostream& out);

}  // namespace apc
