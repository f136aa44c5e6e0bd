#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apc/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Classifier for almost paracontact metric structures"};
  app.require_subcommand(1);

  std::string input_path;
  std::string classify_format = "text";
  double tol_override = 0.0;
  CLI::App* classify =
      app.add_subcommand("classify", "Classify a JSON structure document");
  classify->add_option("--input", input_path, "Path to the JSON document")
      ->required();
  CLI::Option* tol_opt = classify->add_option(
      "--tol", tol_override, "Override the document tolerance, in (0, 0.1]");
  classify->add_option("--format", classify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int dims_n = 1;
  std::string dims_format = "text";
  CLI::App* dims =
      app.add_subcommand("dims", "Basic class dimension table for one n");
  dims->add_option("--n", dims_n, "Half of the horizontal dimension (1..4)")
      ->required();
  dims->add_option("--format", dims_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string family_name;
  std::vector<double> family_params;
  bool with_curvature = false;
  std::vector<double> expmap_coeffs;
  std::string family_format = "text";
  CLI::App* family =
      app.add_subcommand("family", "Report on a canonical Lie algebra family");
  family->add_option("name", family_name, "g5, g6, g10, or g12")->required();
  family->add_option("--params", family_params, "Family parameters")
      ->required()
      ->delimiter(',');
  family->add_flag("--curvature", with_curvature,
                   "Include connection and curvature data");
  family
      ->add_option("--expmap", expmap_coeffs,
                   "Coefficients a,b,c for the exponential-map comparison")
      ->delimiter(',');
  family->add_option("--format", family_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::uint64_t seed = 20260819ULL;
  int iters = 5;
  CLI::App* selftest =
      app.add_subcommand("selftest", "Seeded re-run of the core invariants");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--iters", iters, "Draws per block")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (classify->parsed()) {
      apc::InputDocument doc = apc::parse_input(input_path);
      if (tol_opt->count() > 0) {
        if (!(tol_override > 0.0) || tol_override > 0.1) {
          throw std::invalid_argument("--tol must be in (0, 0.1]");
        }
        doc.tol = tol_override;
      }
      std::cout << apc::render_report(apc::run_classify(doc), classify_format);
      return 0;
    }
    if (dims->parsed()) {
      std::cout << apc::run_dims(dims_n, dims_format);
      return 0;
    }
    if (family->parsed()) {
      std::optional<std::array<double, 3>> expmap;
      if (!expmap_coeffs.empty()) {
        if (expmap_coeffs.size() != 3) {
          throw std::invalid_argument("--expmap needs exactly three values a,b,c");
        }
        expmap = {expmap_coeffs[0], expmap_coeffs[1], expmap_coeffs[2]};
      }
      apc::FamilyReport rep =
          apc::run_family(family_name, family_params, with_curvature, expmap);
      std::cout << apc::render_family(rep, family_format);
      return 0;
    }
    if (selftest->parsed()) {
      const int failures = apc::run_property_suite(seed, iters, std::cout);
      if (failures > 0) {
        std::cerr << failures << " property block(s) failed\n";
        return 2;
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
