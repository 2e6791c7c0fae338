#pragma once

// Parse, encode, solve, decode and verify one instance of any supported
// kind. Shared by the command-line tool and the test suites.

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "reachsat/sat.hpp"

namespace reachsat::puzzles {

enum class Kind { kRoadrunner, kMasyu, kShingoki, kTapa, kDimacs };

// Accepts the kind names used on the command line.
std::optional<Kind> kind_from_name(const std::string& name);
// From the file extension: .roadrunner/.rr, .masyu, .shingoki, .tapa,
// .cnf/.dimacs.
std::optional<Kind> kind_from_path(const std::filesystem::path& path);
const char* kind_name(Kind k);

// Stable process exit codes.
inline constexpr int kExitVerified = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitUnknown = 10;
inline constexpr int kExitInfeasible = 20;

struct Encoded {
  Cnf cnf;
  std::string var_map;  // "index name" lines
};

// Throws ParseError on malformed input. For Roadrunner, `min_k` adds the
// bound "circuit length >= min_k".
Encoded encode_instance(Kind kind, const std::string& text, int min_k = 0);

struct RunResult {
  int exit_code = kExitUnknown;
  std::string status;    // verified | rejected | infeasible | unknown
  std::string detail;    // reject code or unknown reason
  std::string ascii;     // rendered solution
  nlohmann::json json;   // solution document (null when none)
  int num_vars = 0;
  std::size_t num_clauses = 0;
  int solve_calls = 0;
};

// Solves (maximizing for Roadrunner) and checks the decoded solution with
// the independent verifier. Throws ParseError on malformed input.
RunResult run_instance(Kind kind, const std::string& text, const SolveFn& solve);

// Verifies a JSON solution document. Throws ParseError on a malformed
// instance or document.
RunResult verify_document(Kind kind, const std::string& instance_text, const std::string& solution_text);

}  // namespace reachsat::puzzles
