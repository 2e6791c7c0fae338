#pragma once

// Tapa: colour cells black so that the black cells are one orthogonally
// connected group with no 2x2 block, and each clue cell lists the sizes of
// the black runs among its eight neighbours.

#include <istream>
#include <string>
#include <vector>

#include "reachsat/puzzles/common.hpp"

namespace reachsat::puzzles {

struct TapaInstance {
  int n = 0;
  std::vector<std::vector<int>> clues;  // row-major; empty = no clue
  std::vector<std::uint8_t> has_clue;

  bool is_clue(int r, int c) const { return has_clue[static_cast<std::size_t>((r - 1) * n + (c - 1))] != 0; }
  const std::vector<int>& clue(int r, int c) const { return clues[static_cast<std::size_t>((r - 1) * n + (c - 1))]; }
};

// "n" then n rows of whitespace-separated tokens: '.' or 1 to 4 digits,
// each digit one clue in 0..8.
TapaInstance parse_tapa(std::istream& in);
std::string format_tapa(const TapaInstance& inst);

struct NeighborRing {
  std::vector<Cell> cells;
  bool circular = false;  // all eight neighbours exist
};

// Clockwise from (r-1,c-1). A ring cut by the border starts right after the
// missing cells so that consecutive entries are always neighbours.
NeighborRing neighbor_ring(int n, int r, int c);

// Every 0/1 pattern of length ring_len whose runs of ones have exactly the
// given sizes (any order), separated by at least one zero, across the wrap
// point too when circular. Zero clues contribute no run. Sorted, no
// duplicates.
std::vector<std::vector<std::uint8_t>> findall_layouts(const std::vector<int>& clues, int ring_len, bool circular);

struct TapaModel {
  GridVars grid;  // true = black
  SccGridEncoding connected;
};

TapaModel build_tapa(CnfBuilder& b, const TapaInstance& inst);

Verdict verify_tapa(const TapaInstance& inst, const ColoringSolution& sol);

std::string render_tapa(const TapaInstance& inst, const ColoringSolution& sol);

}  // namespace reachsat::puzzles
