/// @file hobo_cli.cpp
/// @brief Command-line front end: solve, eval, build-tensor, compress,
/// brute, gen, and graph over polynomial files (.hobo text or JSON).
///
/// Exit codes: 0 success, 2 usage/input error, 1 internal error.
/// Results go to stdout, diagnostics to stderr.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hobo/hobo.hpp"

namespace {

using hobo::detail::format_double;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

/// Writes `text` to `path`, or to stdout when `path` is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    hobo::write_file(path, text);
  }
}

struct SolveOptions {
  std::string file;
  int sweeps = 1000;
  int restarts = 1;
  std::optional<double> t0;
  double t_end = 1e-3;
  std::uint64_t seed = 0;
  int threads = 1;
  bool json = false;
};

void run_solve(const SolveOptions& opt) {
  const hobo::Polynomial p = hobo::load_polynomial(opt.file);
  hobo::AnnealConfig cfg;
  cfg.sweeps = opt.sweeps;
  cfg.restarts = opt.restarts;
  cfg.t_initial = opt.t0;
  cfg.t_final = opt.t_end;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  const hobo::AnnealResult result = hobo::anneal(p, cfg);
  if (opt.json) {
    std::cout << hobo::anneal_result_to_json(result).dump(2) << "\n";
  } else {
    std::cout << "cost " << format_double(result.best_cost) << "\n"
              << "assignment " << result.best_assignment.to_string() << "\n";
  }
}

void run_eval(const std::string& file, const std::string& assign) {
  const hobo::Polynomial p = hobo::load_polynomial(file);
  const hobo::Assignment x = hobo::Assignment::from_string(assign);
  if (static_cast<int>(x.size()) != p.num_vars()) {
    throw std::invalid_argument("assignment has " + std::to_string(x.size()) +
                                " bits but the polynomial has " +
                                std::to_string(p.num_vars()) + " variables");
  }
  std::cout << format_double(hobo::evaluate(p, x)) << "\n";
}

void run_build_tensor(const std::string& file, int order,
                      const std::string& out) {
  const hobo::Polynomial p = hobo::load_polynomial(file);
  const hobo::HoboTensor t = hobo::build_hobo_tensor(p, order);
  emit(out, hobo::tensor_to_json(t).dump(2) + "\n");
}

void run_compress(const std::string& file, int rank, const std::string& out) {
  const hobo::Polynomial p = hobo::load_polynomial(file);
  const hobo::HoboTensor t = hobo::build_hobo_tensor(p);
  const hobo::CompressionReport report = hobo::compression_report(t, rank);
  const hobo::SvdFactors truncated =
      hobo::truncate(hobo::factorize(t), rank);
  emit(out, hobo::factors_to_json(truncated).dump(2) + "\n");
  std::cerr << "stored values: dense " << report.stored_values_dense
            << ", factored " << report.stored_values_factored << "\n"
            << "frobenius error " << format_double(report.frobenius_error)
            << " (relative " << format_double(report.relative_error) << ")\n";
}

void run_brute(const std::string& file) {
  const hobo::Polynomial p = hobo::load_polynomial(file);
  const hobo::BruteForceResult r = hobo::brute_force_min(p);
  std::cout << "min " << format_double(r.cost) << " at "
            << r.assignment.to_string() << "\n";
}

struct GenOptions {
  int n = 0;
  int degree = 2;
  int terms = 0;
  double coef_min = -10.0;
  double coef_max = 10.0;
  std::uint64_t seed = 0;
  bool integer_coefs = false;
  std::string out;
};

void run_gen(const GenOptions& opt) {
  const hobo::Polynomial p =
      hobo::random_instance(opt.n, opt.degree, opt.terms, opt.coef_min,
                            opt.coef_max, opt.seed, opt.integer_coefs);
  emit(opt.out, hobo::to_text(p));
}

/// Renders the tensor-network view: one box node for the coefficient
/// tensor, one node per variable, one edge per tensor arm. Arm m attaches
/// to variable x_{(m-1) mod n} so every arm has a partner even when the
/// order exceeds the variable count.
std::string render_graph(int n, int order) {
  std::ostringstream os;
  os << "graph tensor_network {\n";
  os << "  T [shape=box, label=\"T (order " << order << ")\"];\n";
  for (int i = 0; i < n; ++i) {
    os << "  x" << i << " [shape=circle, label=\"x" << i << "\"];\n";
  }
  if (n > 0) {
    for (int m = 0; m < order; ++m) {
      os << "  T -- x" << (m % n) << " [label=\"arm " << (m + 1) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

void run_graph(const std::string& file, const std::string& out) {
  const hobo::Polynomial p = hobo::load_polynomial(file);
  const int order = std::max(p.degree(), 1);
  emit(out, render_graph(p.num_vars(), order));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hobo - higher-order binary optimization toolkit"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  CLI::App* solve = app.add_subcommand(
      "solve", "Minimize a polynomial with simulated annealing");
  solve->add_option("file", solve_opt.file, "input polynomial (.hobo or JSON)")
      ->required();
  solve->add_option("--sweeps", solve_opt.sweeps, "temperature steps per restart");
  solve->add_option("--restarts", solve_opt.restarts, "independent restarts");
  solve->add_option("--t0", solve_opt.t0,
                    "initial temperature (default: derived from coefficients)");
  solve->add_option("--t-end", solve_opt.t_end, "final temperature");
  solve->add_option("--seed", solve_opt.seed, "RNG seed");
  solve->add_option("--threads", solve_opt.threads,
                    "worker threads for restarts, 0 = all cores (never "
                    "changes the result)");
  solve->add_flag("--json", solve_opt.json, "emit the result as JSON");

  std::string eval_file;
  std::string eval_assign;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate the cost of one assignment");
  eval->add_option("file", eval_file, "input polynomial (.hobo or JSON)")
      ->required();
  eval->add_option("--assign", eval_assign,
                   "bitstring, character i is the value of x_i")
      ->required();

  std::string bt_file;
  std::string bt_out;
  int bt_order = hobo::kAutoOrder;
  CLI::App* build_tensor = app.add_subcommand(
      "build-tensor", "Build the dense coefficient tensor and write it as JSON");
  build_tensor->add_option("file", bt_file, "input polynomial (.hobo or JSON)")
      ->required();
  build_tensor->add_option("--order", bt_order,
                           "tensor order (default: the polynomial degree)");
  build_tensor->add_option("--out", bt_out, "output path (default: stdout)");

  std::string cp_file;
  std::string cp_out;
  int cp_rank = 0;
  CLI::App* compress = app.add_subcommand(
      "compress", "Factor the coefficient tensor and keep the top singular values");
  compress->add_option("file", cp_file, "input polynomial (.hobo or JSON)")
      ->required();
  compress->add_option("--rank", cp_rank, "number of singular values to keep")
      ->required();
  compress->add_option("--out", cp_out, "output path (default: stdout)");

  std::string brute_file;
  CLI::App* brute = app.add_subcommand(
      "brute", "Exhaustively find the exact minimum (n <= 24)");
  brute->add_option("file", brute_file, "input polynomial (.hobo or JSON)")
      ->required();

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_opt.n, "number of variables")->required();
  gen->add_option("--degree", gen_opt.degree, "maximum monomial degree");
  gen->add_option("--terms", gen_opt.terms, "number of monomials")->required();
  gen->add_option("--coef-min", gen_opt.coef_min, "coefficient lower bound");
  gen->add_option("--coef-max", gen_opt.coef_max, "coefficient upper bound");
  gen->add_option("--seed", gen_opt.seed, "RNG seed");
  gen->add_flag("--int", gen_opt.integer_coefs, "draw integer coefficients");
  gen->add_option("--out", gen_opt.out, "output path (default: stdout)");

  std::string graph_file;
  std::string graph_out;
  CLI::App* graph = app.add_subcommand(
      "graph", "Write the tensor-network view of an instance as DOT");
  graph->add_option("file", graph_file, "input polynomial (.hobo or JSON)")
      ->required();
  graph->add_option("--out", graph_out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(solve)) {
      run_solve(solve_opt);
    } else if (app.got_subcommand(eval)) {
      run_eval(eval_file, eval_assign);
    } else if (app.got_subcommand(build_tensor)) {
      run_build_tensor(bt_file, bt_order, bt_out);
    } else if (app.got_subcommand(compress)) {
      run_compress(cp_file, cp_rank, cp_out);
    } else if (app.got_subcommand(brute)) {
      run_brute(brute_file);
    } else if (app.got_subcommand(gen)) {
      run_gen(gen_opt);
    } else if (app.got_subcommand(graph)) {
      run_graph(graph_file, graph_out);
    }
    return kExitOk;
  } catch (const hobo::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hobo::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
