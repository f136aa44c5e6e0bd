#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apc/report.hpp"

using apc::InputDocument;

namespace {

InputDocument parse(const std::string& text) {
  return apc::parse_input_text(text);
}

const char* kMixed = R"({
  "version": 1,
  "kind": "tensor",
  "n": 1,
  "components": [
    [1, 1, 3, 1.0], [1, 3, 1, -1.0], [2, 2, 3, -1.0], [2, 3, 2, 1.0],
    [1, 2, 3, 0.7], [1, 3, 2, -0.7], [2, 1, 3, -0.7], [2, 3, 1, 0.7]
  ]
})";

}  // namespace

TEST_CASE("input validation rejects malformed documents") {
  CHECK_THROWS_AS(parse("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse("[]"), std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"version": 2, "kind": "tensor", "n": 1, "components": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"kind": "tensor", "n": 1, "components": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"version": 1, "kind": "nope"})"), std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"version": 1, "kind": 3})"), std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"version": 1})"), std::invalid_argument);

  // Tolerance must sit in (0, 0.1].
  CHECK_THROWS_AS(
      parse(R"({"version":1,"kind":"tensor","n":1,"tol":0,"components":[]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse(R"({"version":1,"kind":"tensor","n":1,"tol":0.2,"components":[]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse(R"({"version":1,"kind":"tensor","n":1,"tol":"x","components":[]})"),
      std::invalid_argument);

  // lie3 documents describe a three-dimensional structure only.
  CHECK_THROWS_AS(
      parse(R"({"version":1,"kind":"lie3","n":2,
                "structure_constants":{"c12":[0,0,1],"c13":[0,0,0],"c23":[0,0,0]}})"),
      std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"version":1,"kind":"lie3"})"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse(R"({"version":1,"kind":"lie3",
                "structure_constants":{"c12":[0,0],"c13":[0,0,0],"c23":[0,0,0]}})"),
      std::invalid_argument);

  // Tensor documents: n and well-formed 1-based components.
  CHECK_THROWS_AS(parse(R"({"version":1,"kind":"tensor","components":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"version":1,"kind":"tensor","n":0,"components":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse(R"({"version":1,"kind":"tensor","n":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse(R"({"version":1,"kind":"tensor","n":1,"components":[[1,2,3]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse(R"({"version":1,"kind":"tensor","n":1,"components":[[0,1,1,1.0]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse(R"({"version":1,"kind":"tensor","n":1,"components":[[1,1,4,1.0]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      parse(
          R"({"version":1,"kind":"tensor","n":1,"components":[[1,1,3,1.0],[1,1,3,2.0]]})"),
      std::invalid_argument);

  CHECK_THROWS_AS(apc::parse_input("/nonexistent/input.json"),
                  std::invalid_argument);
}

TEST_CASE("parsing a lie3 document") {
  InputDocument doc = apc::parse_input(std::string(TEST_DATA_DIR) + "/g5_2.json");
  CHECK(doc.kind == InputDocument::Kind::lie3);
  CHECK(doc.n == 1);
  CHECK(doc.tol == 1e-9);
  CHECK(doc.algebra.c12 == Eigen::Vector3d(0, 0, 2));
  CHECK(doc.algebra.c13.norm() == 0.0);

  // The document tensor is the structure tensor of the algebra.
  apc::TensorF t = apc::document_tensor(doc);
  apc::TensorF ref = apc::structure_tensor(doc.algebra);
  CHECK((t.comps - ref.comps).max_abs() == 0.0);
}

TEST_CASE("classification of the contact algebra document") {
  InputDocument doc = apc::parse_input(std::string(TEST_DATA_DIR) + "/g5_2.json");
  apc::ClassificationReport rep = apc::run_classify(doc);
  CHECK(rep.class_label == "G5bar");
  REQUIRE(rep.alpha.has_value());
  CHECK(*rep.alpha == doctest::Approx(1.0));
  CHECK_FALSE(rep.alpha_star.has_value());
  CHECK(rep.flags.at("para_sasakian"));
  CHECK(rep.flags.at("k_paracontact"));
  CHECK(rep.flags.at("normal"));
  REQUIRE(rep.family.has_value());
  CHECK(rep.family->g_class == 5);

  // Both renderings mention the label; the text form prints the flags.
  std::string text = apc::render_report(rep, "text");
  CHECK(text.find("G5bar") != std::string::npos);
  CHECK(text.find("para_sasakian") != std::string::npos);
  std::string json = apc::render_report(rep, "json");
  CHECK(nlohmann::json::parse(json).at("classification").at("label") == "G5bar");
  CHECK_THROWS_AS(apc::render_report(rep, "yaml"), std::invalid_argument);
}

TEST_CASE("classification of a sparse tensor document") {
  apc::ClassificationReport rep = apc::run_classify(parse(kMixed));
  CHECK(rep.class_label == "G5bar + G6");
  CHECK_FALSE(rep.alpha.has_value());
  CHECK(rep.flags.at("normal"));
  CHECK_FALSE(rep.flags.at("paracontact"));
  CHECK_FALSE(rep.family.has_value());
  CHECK(rep.projections.lee.theta(2) == doctest::Approx(2.0));
  CHECK(rep.projections.lee.theta_star(2) == doctest::Approx(1.4));
}

TEST_CASE("json report round-trips through its tensor block") {
  InputDocument doc = apc::parse_input(std::string(TEST_DATA_DIR) + "/g5_2.json");
  apc::ClassificationReport rep = apc::run_classify(doc);
  std::string rendered = apc::render_report(rep, "json");

  // The embedded tensor block is itself a valid input document.
  nlohmann::json full = nlohmann::json::parse(rendered);
  InputDocument doc2 = apc::parse_input_text(full.at("tensor").dump());
  CHECK(doc2.kind == InputDocument::Kind::tensor);
  apc::ClassificationReport rep2 = apc::run_classify(doc2);

  // Same tensor, byte-identical classification block.
  CHECK(apc::render_classification_json(rep2) ==
        apc::render_classification_json(rep));

  // Rendering is deterministic.
  CHECK(apc::render_report(rep, "json") == rendered);
  CHECK(apc::render_report(rep, "text") == apc::render_report(rep, "text"));
}

TEST_CASE("dimension table rendering") {
  std::string text = apc::run_dims(1, "text");
  CHECK(text.find("G5: 1") != std::string::npos);
  CHECK(text.find("G10: 2") != std::string::npos);
  CHECK(text.find("6") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(apc::run_dims(2, "json"));
  CHECK(j.at("n") == 2);
  CHECK(j.at("dims").size() == 12);
  int sum = 0;
  for (const auto& v : j.at("dims").items()) sum += v.value().get<int>();
  CHECK(sum == j.at("total").get<int>());
  CHECK(sum == 30);
  CHECK(j.at("dims").at("G10") == 6);

  CHECK_THROWS_AS(apc::run_dims(5, "text"), std::invalid_argument);
  CHECK_THROWS_AS(apc::run_dims(1, "yaml"), std::invalid_argument);
}

TEST_CASE("family report combines classification, curvature and exponential") {
  apc::FamilyReport rep =
      apc::run_family("g5", {2.0}, true, std::array<double, 3>{1.0, 1.0, 1.0});
  CHECK(rep.classification.class_label == "G5bar");
  REQUIRE(rep.curv.has_value());
  CHECK(rep.curv->einstein_type == apc::EinsteinType::eta_einstein);
  CHECK(rep.curv->scalar == doctest::Approx(2.0));
  REQUIRE(rep.expmap.has_value());
  CHECK(rep.expmap->max_deviation < 1e-12);
  CHECK(rep.expmap->closed(2, 0) == doctest::Approx(-2.0));
  CHECK(rep.expmap->closed(2, 1) == doctest::Approx(2.0));

  std::string text = apc::render_family(rep, "text");
  CHECK(text.find("eta_einstein") != std::string::npos);
  nlohmann::json j = nlohmann::json::parse(apc::render_family(rep, "json"));
  CHECK(j.at("family") == "g5");
  CHECK(j.at("curvature").at("einstein_type") == "eta_einstein");
  CHECK_THROWS_AS(apc::render_family(rep, "yaml"), std::invalid_argument);

  // Optional blocks stay off when not requested.
  apc::FamilyReport bare = apc::run_family("g10", {1.3}, false, std::nullopt);
  CHECK_FALSE(bare.curv.has_value());
  CHECK_FALSE(bare.expmap.has_value());
  CHECK_THROWS_AS(apc::run_family("g13", {1.0}, false, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("random algebra and mixed-member generators") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    apc::LieAlgebra3 L = apc::random_jacobi_algebra(seed);
    CHECK(apc::check_jacobi(L, 1e-10));
  }
  apc::LieAlgebra3 a = apc::random_jacobi_algebra(7);
  apc::LieAlgebra3 b = apc::random_jacobi_algebra(7);
  CHECK((a.c12 - b.c12).norm() == 0.0);
  CHECK((a.c23 - b.c23).norm() == 0.0);

  apc::Space s = apc::make_space(1);
  apc::TensorF m = apc::random_mixed_member(s, {5, 10}, 11);
  CHECK(apc::is_in_F_space(m, 1e-10));
  CHECK(apc::project_all(m).label == std::vector<int>{5, 10});
  apc::TensorF m2 = apc::random_mixed_member(s, {5, 10}, 11);
  CHECK((m.comps - m2.comps).max_abs() == 0.0);

  // Classes that are empty at this n are rejected.
  CHECK_THROWS_AS(apc::random_mixed_member(s, {1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(apc::random_mixed_member(s, {13}, 3), std::invalid_argument);
}

TEST_CASE("property suite passes and reports five blocks") {
  std::ostringstream oss;
  int failures = apc::run_property_suite(20260819, 2, oss);
  CHECK(failures == 0);
  const std::string out = oss.str();
  CHECK(out.find("[FAIL]") == std::string::npos);
  std::size_t count = 0;
  for (std::size_t pos = out.find("[PASS]"); pos != std::string::npos;
       pos = out.find("[PASS]", pos + 1))
    ++count;
  CHECK(count == 5);
}
