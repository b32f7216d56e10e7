#pragma once

#include <random>

#include "tgb/cnf.hpp"

namespace tgb::testing {

// Deterministic small 3-CNF sampler for the reduction round-trips.
inline CnfFormula random_formula(std::uint64_t seed, int max_variables = 3,
                                 int max_clauses = 3) {
  std::mt19937_64 rng(seed);
  CnfFormula phi;
  phi.variable_count =
      std::uniform_int_distribution<int>(1, max_variables)(rng);
  const int clauses = std::uniform_int_distribution<int>(1, max_clauses)(rng);
  for (int c = 0; c < clauses; ++c) {
    const int width = std::uniform_int_distribution<int>(
        1, std::min(3, phi.variable_count))(rng);
    std::vector<int> vars(static_cast<std::size_t>(phi.variable_count));
    for (int i = 0; i < phi.variable_count; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<Literal> clause;
    for (int i = 0; i < width; ++i) {
      clause.push_back({vars[static_cast<std::size_t>(i)],
                        std::uniform_int_distribution<int>(0, 1)(rng) == 1});
    }
    phi.clauses.push_back(std::move(clause));
  }
  return phi;
}

}  // namespace tgb::testing
