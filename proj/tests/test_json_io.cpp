#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using Catch::Approx;
using hobo::Assignment;
using hobo::HoboTensor;
using hobo::Polynomial;
using nlohmann::json;

TEST_CASE("polynomial json round trip") {
  const Polynomial p = Polynomial::from_terms(
      4, {{{0}, -1.5}, {{1, 3}, 2.0}, {{0, 1, 2}, 0.25}}, 3.0);
  const json j = hobo::polynomial_to_json(p);
  SECTION("schema shape") {
    REQUIRE(j.at("num_vars") == 4);
    REQUIRE(j.at("offset") == 3.0);
    REQUIRE(j.at("terms").size() == 3);
    REQUIRE(j.at("terms").at(0).contains("vars"));
    REQUIRE(j.at("terms").at(0).contains("coef"));
  }
  SECTION("round trip is exact") {
    REQUIRE(hobo::polynomial_from_json(j) == p);
  }
  SECTION("missing offset defaults to zero") {
    json stripped = j;
    stripped.erase("offset");
    REQUIRE(hobo::polynomial_from_json(stripped).offset() == 0.0);
  }
  SECTION("imported terms are canonicalized") {
    const json raw = {{"num_vars", 2},
                      {"terms", {{{"vars", {1, 0}}, {"coef", 2.0}},
                                 {{"vars", {0, 1}}, {"coef", 3.0}}}}};
    const Polynomial q = hobo::polynomial_from_json(raw);
    REQUIRE(q.terms().size() == 1);
    REQUIRE(q.terms()[0].coef == 5.0);
  }
  SECTION("malformed documents throw") {
    REQUIRE_THROWS(hobo::polynomial_from_json(json{{"offset", 1.0}}));
    REQUIRE_THROWS(hobo::polynomial_from_json(
        json{{"num_vars", 2}, {"terms", {{{"coef", 1.0}}}}}));
  }
}

TEST_CASE("tensor json round trip") {
  const HoboTensor t = hobo::build_hobo_tensor(testsup::cubic3());
  const json j = hobo::tensor_to_json(t);
  REQUIRE(j.at("n") == 3);
  REQUIRE(j.at("order") == 3);
  REQUIRE(j.at("entries").size() == 27);
  REQUIRE(hobo::tensor_from_json(j) == t);
  SECTION("entry count must match the shape") {
    json bad = j;
    bad["entries"].push_back(0.0);
    REQUIRE_THROWS_AS(hobo::tensor_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("factor json round trip") {
  const hobo::SvdFactors f =
      hobo::factorize(hobo::build_hobo_tensor(testsup::cubic3()));
  const json j = hobo::factors_to_json(f);
  SECTION("schema shape") {
    REQUIRE(j.at("sigma").size() == 3);
    REQUIRE(j.at("u").size() == 3);      // rows x rank
    REQUIRE(j.at("u").at(0).size() == 3);
    REQUIRE(j.at("v").size() == 9);      // cols x rank
    REQUIRE(j.at("v").at(0).size() == 3);
    REQUIRE(j.at("source_shape") == json({3, 3, 3}));
  }
  SECTION("round trip preserves everything") {
    const hobo::SvdFactors g = hobo::factors_from_json(j);
    REQUIRE(g.rows == f.rows);
    REQUIRE(g.cols == f.cols);
    REQUIRE(g.singular_values == f.singular_values);
    REQUIRE(g.left_vectors == f.left_vectors);
    REQUIRE(g.right_vectors == f.right_vectors);
    REQUIRE(g.source_shape == f.source_shape);
  }
  SECTION("round-tripped factors still evaluate costs") {
    const hobo::SvdFactors g = hobo::factors_from_json(j);
    REQUIRE(hobo::compressed_cost(g, Assignment::from_string("101")) ==
            Approx(-14.0).margin(1e-8));
  }
  SECTION("inconsistent widths throw") {
    json bad = j;
    bad["sigma"].erase(2);
    REQUIRE_THROWS_AS(hobo::factors_from_json(bad), std::invalid_argument);
  }
  SECTION("ragged rows throw") {
    json bad = j;
    bad["u"].at(1).erase(2);
    REQUIRE_THROWS_AS(hobo::factors_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("anneal result json carries the full outcome") {
  hobo::AnnealConfig cfg;
  cfg.sweeps = 200;
  cfg.restarts = 3;
  cfg.seed = 11;
  const hobo::AnnealResult r = hobo::anneal(testsup::cubic3(), cfg);
  const json j = hobo::anneal_result_to_json(r);
  REQUIRE(j.at("assignment") == json({1, 0, 1}));
  REQUIRE(j.at("cost") == -14.0);
  REQUIRE(j.at("restart_costs").size() == 3);
  REQUIRE(j.at("seed") == 11);
}

TEST_CASE("load_polynomial sniffs the format") {
  SECTION("plain text") {
    const std::string path =
        testsup::write_temp("json_io_plain.hobo", testsup::cubic3_text());
    REQUIRE(hobo::load_polynomial(path) == testsup::cubic3());
  }
  SECTION("json, including leading whitespace") {
    const std::string body =
        "\n  " + hobo::polynomial_to_json(testsup::cubic3()).dump();
    const std::string path = testsup::write_temp("json_io_doc.json", body);
    REQUIRE(hobo::load_polynomial(path) == testsup::cubic3());
  }
  SECTION("missing file raises an io error") {
    REQUIRE_THROWS_AS(hobo::load_polynomial("/nonexistent/file.hobo"),
                      hobo::IoError);
  }
}

TEST_CASE("file helpers round trip bytes") {
  const std::string path =
      testsup::write_temp("json_io_bytes.txt", "");
  hobo::write_file(path, "line1\nline2\n");
  REQUIRE(hobo::read_file(path) == "line1\nline2\n");
  REQUIRE_THROWS_AS(hobo::write_file("/nonexistent/dir/out.txt", "x"),
                    hobo::IoError);
}
