#pragma once

// Shingoki: one loop through every circle; white circles are crossed
// straight, black circles are turned upon, and the two straight lines
// meeting at a circle have total length equal to its number.

#include <istream>
#include <string>
#include <vector>

#include "reachsat/puzzles/masyu.hpp"

namespace reachsat::puzzles {

struct ShingokiCell {
  Circle kind = Circle::kNone;
  int clue = 0;
};

struct ShingokiInstance {
  int n = 0;
  std::vector<ShingokiCell> board;  // row-major

  const ShingokiCell& at(int r, int c) const { return board[static_cast<std::size_t>((r - 1) * n + (c - 1))]; }
};

// "n" then n rows of whitespace-separated tokens '.', 'w<clue>', 'b<clue>'
// with clue >= 2.
ShingokiInstance parse_shingoki(std::istream& in);
std::string format_shingoki(const ShingokiInstance& inst);

// Shapes for every split of the clue into two arms, ends included as the
// cells the loop turns into.
std::vector<std::vector<Cell>> white_shingoki_shapes(int r, int c, int clue);
std::vector<std::vector<Cell>> black_shingoki_shapes(int r, int c, int clue);

void constrain_white_shingoki(CnfBuilder& b, const EdgeMap& edges, int n, int r, int c, int clue);
void constrain_black_shingoki(CnfBuilder& b, const EdgeMap& edges, int n, int r, int c, int clue);

LoopModel build_shingoki(CnfBuilder& b, const ShingokiInstance& inst);

Verdict verify_shingoki(const ShingokiInstance& inst, const LoopSolution& sol);

std::string render_shingoki(const ShingokiInstance& inst, const LoopSolution& sol);

}  // namespace reachsat::puzzles
