#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reachsat/cnf.hpp"

namespace reachsat {

// Total assignment over variables 1..num_vars.
class Model {
 public:
  Model() = default;
  explicit Model(int num_vars) : values_(static_cast<std::size_t>(num_vars) + 1, 0) {}

  int num_vars() const { return values_.empty() ? 0 : static_cast<int>(values_.size()) - 1; }
  bool has(VarId v) const { return v.index >= 1 && v.index <= num_vars(); }

  bool value(VarId v) const { return values_.at(static_cast<std::size_t>(v.index)) != 0; }
  bool value(Lit l) const { return value(l.var()) == l.is_positive(); }
  void set(VarId v, bool b) { values_.at(static_cast<std::size_t>(v.index)) = b ? 1 : 0; }

  bool operator==(const Model&) const = default;

 private:
  std::vector<std::uint8_t> values_;
};

enum class SolveStatus { kSat, kUnsat, kUnknown };

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnknown;
  Model model;         // meaningful only for kSat
  std::string reason;  // why the outcome is kUnknown

  static SolveOutcome sat(Model m) { return {SolveStatus::kSat, std::move(m), {}}; }
  static SolveOutcome unsat() { return {SolveStatus::kUnsat, {}, {}}; }
  static SolveOutcome unknown(std::string why) { return {SolveStatus::kUnknown, {}, std::move(why)}; }

  bool is_sat() const { return status == SolveStatus::kSat; }
  bool is_unsat() const { return status == SolveStatus::kUnsat; }
};

const char* to_string(SolveStatus s);

// Raised when a solver claims SAT with a model that violates the formula.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// True iff every clause has a satisfied literal. Throws PreconditionError
// when the model does not cover a variable the formula refers to.
bool check_model(const Cnf& cnf, const Model& model);

struct SolverLimits {
  std::int64_t max_conflicts = -1;  // negative: unlimited
  std::int64_t max_decisions = -1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // 0 branches positive first; any other value fixes per-variable phases
  // from a generator seeded with it.
  std::uint64_t seed = 0;
};

// Complete CDCL search with two watched literals and first-UIP learning.
// Branches on the lowest-index unassigned variable, so runs are
// reproducible. Exceeding a limit yields kUnknown.
SolveOutcome solve_internal(const Cnf& cnf, const SolverLimits& limits = {});

struct ExternalSolver {
  // Program and leading arguments; the DIMACS path is appended.
  std::vector<std::string> command;
  std::filesystem::path tmpdir = std::filesystem::temp_directory_path();
  std::optional<double> timeout_seconds;
};

// Runs a SAT-competition-conforming solver as a subprocess. Temporary files
// are removed on success and kept (path in `reason`) otherwise.
SolveOutcome solve_external(const ExternalSolver& solver, const Cnf& cnf);

// Parses SAT-competition output ("s ..." status and "v ..." value lines).
// `exit_code` of -1 means the process did not exit normally.
SolveOutcome parse_competition_output(const std::string& text, int num_vars, int exit_code);

using SolveFn = std::function<SolveOutcome(const Cnf&)>;

// Whitespace-separated argv; double quotes group words.
std::vector<std::string> split_command(const std::string& cmd);

inline constexpr const char* kSolverEnvVar = "REACHSAT_SOLVER";

// "internal" (or empty) selects solve_internal; anything else is an external
// solver command line.
SolveFn make_solver(const std::string& spec, std::optional<double> timeout_seconds = std::nullopt,
                    std::uint64_t seed = 0);

// Solver spec from the environment, "internal" when unset.
std::string default_solver_spec();

}  // namespace reachsat
