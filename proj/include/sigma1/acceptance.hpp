/**
 * @file acceptance.hpp
 * @brief End-to-end verification battery over the standard parameter grid
 *        (q, d) in {(2,1), (3,1), (4,1), (2,2), (3,2)}, e = 1.
 *
 * Each criterion is exact — no tolerances — and self-contained: it builds
 * everything it needs from the parameters and reports one pass/fail with a
 * short detail string (naming the first failing point when failing).
 */
#ifndef SIGMA1_ACCEPTANCE_HPP
#define SIGMA1_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include "sigma1/params.hpp"

namespace sigma1 {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// The five standard parameter sets (q = 4 realized as p = 2, f = 2).
std::vector<Params> acceptance_grid();

/// Run one criterion (1-based id in [1, 10]).
CriterionResult run_criterion(int id);

/// Run all criteria in order.
std::vector<CriterionResult> run_acceptance();

}  // namespace sigma1

#endif  // SIGMA1_ACCEPTANCE_HPP
