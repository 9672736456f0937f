// Minimal usage tour: build a cubic instance in code, check the exact
// minimum with the exhaustive oracle, then reproduce it with annealing.

#include <iostream>
#include <vector>

#include "hobo/hobo.hpp"

int main() {
  // -10*x0 + 7*x1 + x0*x1 - 4*x0*x2 + 8*x1*x2 - x0*x1*x2
  std::vector<hobo::Term> terms = {
      {{0}, -10.0}, {{1}, 7.0},    {{0, 1}, 1.0},
      {{0, 2}, -4.0}, {{1, 2}, 8.0}, {{0, 1, 2}, -1.0},
  };
  const hobo::Polynomial p = hobo::Polynomial::from_terms(3, terms, 0.0);

  const hobo::BruteForceResult exact = hobo::brute_force_min(p);
  std::cout << "exact minimum " << exact.cost << " at "
            << exact.assignment.to_string() << "\n";

  hobo::AnnealConfig cfg;
  cfg.sweeps = 500;
  cfg.restarts = 4;
  cfg.seed = 7;
  const hobo::AnnealResult annealed = hobo::anneal(p, cfg);
  std::cout << "annealed minimum " << annealed.best_cost << " at "
            << annealed.best_assignment.to_string() << "\n";

  return exact.cost == annealed.best_cost ? 0 : 1;
}
