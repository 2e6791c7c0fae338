#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reachsat/cnf.hpp"
#include "reachsat/graph.hpp"
#include "reachsat/sat.hpp"

namespace reachsat::puzzles {

// Edge literal keyed by (r1, c1, r2, c2).
using EdgeMap = std::map<std::array<int, 4>, Lit>;

EdgeMap make_edge_map(std::span<const EdgeSpec> edges);

// Disjunction over the given cell paths, each read in both directions.
// A path with an off-grid cell is dropped; with nothing left the clause is
// empty and the formula becomes UNSAT.
void constrain_paths(CnfBuilder& b, const EdgeMap& edges, int rows, int cols,
                     const std::vector<std::vector<Cell>>& paths);

// Closed walk through grid cells; `cycle` lists each in-cell once.
struct LoopSolution {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> in;  // row-major
  std::vector<Cell> cycle;

  bool contains(int r, int c) const {
    return in[static_cast<std::size_t>((r - 1) * cols + (c - 1))] != 0;
  }
};

struct ColoringSolution {
  int n = 0;
  std::vector<std::uint8_t> black;  // row-major

  bool is_black(int r, int c) const {
    return black[static_cast<std::size_t>((r - 1) * n + (c - 1))] != 0;
  }
};

// Accept, or reject with a stable reason code and a human-readable detail.
struct Verdict {
  bool accepted = true;
  std::string code;
  std::string detail;

  static Verdict accept() { return {}; }
  static Verdict reject(std::string code, std::string detail = {}) {
    return {false, std::move(code), std::move(detail)};
  }
  explicit operator bool() const { return accepted; }
};

// Follows active edges from the first in-cell in row-major order. Throws
// EncodingError when the walk does not close over every in-cell exactly once.
LoopSolution decode_loop(const Model& model, const GridVars& grid, std::span<const EdgeSpec> edges);
ColoringSolution decode_coloring(const Model& model, const GridVars& grid);

// Checks that `cycle` is a closed orthogonal walk visiting exactly the
// in-cells once. Loops shorter than `min_length` are rejected.
Verdict check_cycle(const LoopSolution& sol, std::size_t min_length);

// ASCII drawing: loop cells "+", others ".", joined by "-" and "|"; a
// non-space entry of `marks` (row-major) replaces the cell character.
std::string render_loop(const LoopSolution& sol, const std::vector<char>& marks);

// Forbids an undirected edge from being used in both directions, which
// rules out two-cell loops.
void forbid_two_cycles(CnfBuilder& b, const EdgeMap& edges);

}  // namespace reachsat::puzzles
