#include <string>

#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using testsup::run_command;
using testsup::write_temp;

namespace {

const std::string kCli = HOBO_CLI_PATH;

std::string cubic_path() {
  static const std::string path =
      write_temp("cli_cubic3.hobo", testsup::cubic3_text());
  return path;
}

}  // namespace

TEST_CASE("eval prints exact costs") {
  const auto r =
      run_command(kCli + " eval " + cubic_path() + " --assign 101 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "-14\n");
  REQUIRE(run_command(kCli + " eval " + cubic_path() +
                      " --assign 000 2>/dev/null")
              .output == "0\n");
  REQUIRE(run_command(kCli + " eval " + cubic_path() +
                      " --assign 111 2>/dev/null")
              .output == "1\n");
}

TEST_CASE("eval accepts json input files") {
  const std::string path = write_temp(
      "cli_poly.json", hobo::polynomial_to_json(testsup::cubic3()).dump());
  const auto r =
      run_command(kCli + " eval " + path + " --assign 101 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "-14\n");
}

TEST_CASE("brute reports the minimum and its assignment") {
  const auto r = run_command(kCli + " brute " + cubic_path() + " 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "min -14 at 101\n");
}

TEST_CASE("solve reaches the optimum and is deterministic") {
  const std::string cmd =
      kCli + " solve " + cubic_path() + " --seed 42 --restarts 8 2>/dev/null";
  const auto first = run_command(cmd);
  REQUIRE(first.exit_code == 0);
  REQUIRE(first.output == "cost -14\nassignment 101\n");
  SECTION("byte-identical across repeated runs") {
    REQUIRE(run_command(cmd).output == first.output);
  }
  SECTION("byte-identical across thread counts") {
    for (int threads : {2, 4}) {
      const auto r = run_command(kCli + " solve " + cubic_path() +
                                 " --seed 42 --restarts 8 --threads " +
                                 std::to_string(threads) + " 2>/dev/null");
      REQUIRE(r.output == first.output);
    }
  }
  SECTION("json output carries the result schema") {
    const auto r = run_command(kCli + " solve " + cubic_path() +
                               " --seed 42 --restarts 8 --json 2>/dev/null");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.at("cost") == -14.0);
    REQUIRE(j.at("assignment") == nlohmann::json({1, 0, 1}));
    REQUIRE(j.at("restart_costs").size() == 8);
    REQUIRE(j.at("seed") == 42);
  }
}

TEST_CASE("solve reports the offset for constant instances") {
  const std::string path = write_temp("cli_const.hobo", "vars 2\n5\n");
  const auto r = run_command(kCli + " solve " + path + " 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.rfind("cost 5\n", 0) == 0);
}

TEST_CASE("build-tensor writes the dense json form") {
  const auto r =
      run_command(kCli + " build-tensor " + cubic_path() + " 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const hobo::HoboTensor t =
      hobo::tensor_from_json(nlohmann::json::parse(r.output));
  REQUIRE(t == hobo::build_hobo_tensor(testsup::cubic3()));
  SECTION("an explicit wider order embeds the same polynomial") {
    const auto r4 = run_command(kCli + " build-tensor " + cubic_path() +
                                " --order 4 2>/dev/null");
    REQUIRE(r4.exit_code == 0);
    const hobo::HoboTensor t4 =
        hobo::tensor_from_json(nlohmann::json::parse(r4.output));
    REQUIRE(t4.order() == 4);
    REQUIRE(hobo::tensor_to_polynomial(t4) == testsup::cubic3());
  }
}

TEST_CASE("compress emits factors and an error report") {
  const auto r = run_command(kCli + " compress " + cubic_path() +
                             " --rank 3 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  const hobo::SvdFactors f =
      hobo::factors_from_json(nlohmann::json::parse(r.output));
  REQUIRE(f.rank() == 3);
  REQUIRE(hobo::compressed_cost(
              f, hobo::Assignment::from_string("101")) ==
          Catch::Approx(-14.0).margin(1e-8));
  SECTION("the report goes to stderr") {
    const auto merged = run_command(kCli + " compress " + cubic_path() +
                                    " --rank 1 2>&1 >/dev/null");
    REQUIRE(merged.output.find("frobenius error") != std::string::npos);
    REQUIRE(merged.output.find("dense 27") != std::string::npos);
  }
}

TEST_CASE("gen is deterministic and honors its flags") {
  const std::string cmd =
      kCli + " gen --n 12 --degree 4 --terms 50 --seed 1 2>/dev/null";
  const auto a = run_command(cmd);
  const auto b = run_command(cmd);
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.output == b.output);
  const hobo::Polynomial p = hobo::parse_text(a.output);
  REQUIRE(p.num_vars() == 12);
  REQUIRE(p.terms().size() == 50);
  REQUIRE(p.degree() <= 4);
  SECTION("integer mode emits integer coefficients") {
    const auto r = run_command(
        kCli + " gen --n 6 --degree 3 --terms 10 --seed 2 --int 2>/dev/null");
    const hobo::Polynomial q = hobo::parse_text(r.output);
    for (const hobo::Term& t : q.terms()) {
      REQUIRE(t.coef == static_cast<double>(static_cast<long long>(t.coef)));
    }
  }
}

TEST_CASE("graph writes a dot view of the tensor network") {
  const auto r = run_command(kCli + " graph " + cubic_path() + " 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.rfind("graph tensor_network {", 0) == 0);
  REQUIRE(r.output.find("T [shape=box, label=\"T (order 3)\"]") !=
          std::string::npos);
  for (const char* node : {"x0 [", "x1 [", "x2 ["}) {
    REQUIRE(r.output.find(node) != std::string::npos);
  }
  REQUIRE(r.output.find("T -- x0") != std::string::npos);
  REQUIRE(r.output.find("T -- x1") != std::string::npos);
  REQUIRE(r.output.find("T -- x2") != std::string::npos);
  SECTION("quadratic instances get two arms") {
    const std::string path =
        write_temp("cli_quad.hobo", "vars 2\n1 x0 x1\n-1 x0\n");
    const auto q = run_command(kCli + " graph " + path + " 2>/dev/null");
    REQUIRE(q.output.find("order 2") != std::string::npos);
    REQUIRE(q.output.find("arm 2") != std::string::npos);
    REQUIRE(q.output.find("arm 3") == std::string::npos);
  }
}

TEST_CASE("cli reports usage errors with exit code 2") {
  REQUIRE(run_command(kCli + " eval /nonexistent --assign 1 2>/dev/null")
              .exit_code == 2);
  REQUIRE(run_command(kCli + " eval " + cubic_path() +
                      " --assign 10 2>/dev/null")
              .exit_code == 2);
  REQUIRE(run_command(kCli + " eval " + cubic_path() +
                      " --assign 1x1 2>/dev/null")
              .exit_code == 2);
  REQUIRE(run_command(kCli + " build-tensor " + cubic_path() +
                      " --order 2 2>/dev/null")
              .exit_code == 2);
  REQUIRE(run_command(kCli + " solve " + cubic_path() +
                      " --sweeps 0 2>/dev/null")
              .exit_code == 2);
  REQUIRE(run_command(kCli + " compress " + cubic_path() +
                      " --rank 9 2>/dev/null")
              .exit_code == 2);
  REQUIRE(run_command(kCli + " nosuchcommand 2>/dev/null").exit_code == 2);
  REQUIRE(run_command(kCli + " 2>/dev/null").exit_code == 2);
  const std::string bad = write_temp("cli_bad.hobo", "vars 2\n3 x9\n");
  REQUIRE(run_command(kCli + " brute " + bad + " 2>/dev/null").exit_code == 2);
}

TEST_CASE("help is available and exits cleanly") {
  const auto r = run_command(kCli + " --help 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("solve") != std::string::npos);
  const auto sub = run_command(kCli + " solve --help 2>/dev/null");
  REQUIRE(sub.exit_code == 0);
  REQUIRE(sub.output.find("--sweeps") != std::string::npos);
}
