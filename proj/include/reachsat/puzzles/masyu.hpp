#pragma once

// Masyu: one loop through every circle. White circles are crossed straight
// with a turn just before or after; black circles are turned upon with
// straight cells on both sides.

#include <istream>
#include <string>
#include <vector>

#include "reachsat/puzzles/common.hpp"

namespace reachsat::puzzles {

enum class Circle : std::uint8_t { kNone, kWhite, kBlack };

struct MasyuInstance {
  int n = 0;
  std::vector<Circle> board;  // row-major

  Circle at(int r, int c) const { return board[static_cast<std::size_t>((r - 1) * n + (c - 1))]; }
};

// "n" then n rows of '.', 'w', 'b' (whitespace between cells is ignored).
MasyuInstance parse_masyu(std::istream& in);
std::string format_masyu(const MasyuInstance& inst);

struct LoopModel {
  GridVars grid;
  HcpGridEncoding loop;
  EdgeMap edges;
};

LoopModel build_masyu(CnfBuilder& b, const MasyuInstance& inst);

// Path shapes through a circle, each also read in reverse: 8 for white,
// 4 for black.
std::vector<std::vector<Cell>> white_masyu_shapes(int r, int c);
std::vector<std::vector<Cell>> black_masyu_shapes(int r, int c);

void constrain_white_masyu(CnfBuilder& b, const EdgeMap& edges, int n, int r, int c);
void constrain_black_masyu(CnfBuilder& b, const EdgeMap& edges, int n, int r, int c);

Verdict verify_masyu(const MasyuInstance& inst, const LoopSolution& sol);

std::string render_masyu(const MasyuInstance& inst, const LoopSolution& sol);

}  // namespace reachsat::puzzles
