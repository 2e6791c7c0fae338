#pragma once

#include <optional>

#include "reachsat/cnf.hpp"
#include "reachsat/sat.hpp"

namespace reachsat {

struct OptimizeResult {
  // kSat: best_value is proven optimal. kUnsat: nothing reaches the initial
  // lower bound. kUnknown: a solve gave up; best_* hold the best so far.
  SolveStatus status = SolveStatus::kUnknown;
  Model best_model;
  int best_value = -1;  // -1 until a model is found
  int solve_calls = 0;
  // Bound whose UNSAT result closed the search, if the search was closed by
  // one (absent when best_value reached the initial upper bound).
  std::optional<int> unsat_bound;
  std::string reason;
};

// Number of objective inputs true in the model.
int objective_value(const UnaryCount& objective, const Model& model);

// Maximizes the number of true objective inputs over models of `base`, for
// values in lo..hi. Probes lo first, then bisects with the upper midpoint.
// Each probe is a fresh solve of base plus the unit clause at_least(bound).
OptimizeResult maximize(const Cnf& base, const UnaryCount& objective, const SolveFn& solve, int lo,
                        int hi);

}  // namespace reachsat
