#pragma once

// Road runner: place lasers on open cells so that no two see each other,
// numbered hills count adjacent lasers, and the cells outside every beam
// form one closed circuit of maximum length.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "reachsat/optimize.hpp"
#include "reachsat/puzzles/common.hpp"

namespace reachsat::puzzles {

// Column x, row y, both 1-based.
struct XY {
  int x = 0;
  int y = 0;
  auto operator<=>(const XY&) const = default;
};

struct RoadrunnerInstance {
  struct Clue {
    int x, y, num;
  };
  int max_x = 0;  // columns
  int max_y = 0;  // rows
  std::vector<std::uint8_t> hill;  // row-major
  std::vector<Clue> clues;

  bool is_hill(int x, int y) const {
    return hill[static_cast<std::size_t>((y - 1) * max_x + (x - 1))] != 0;
  }
};

// "maxX maxY" then maxY rows of maxX characters: '.' open, '#' hill,
// '0'..'4' numbered hill.
RoadrunnerInstance parse_roadrunner(std::istream& in);
std::string format_roadrunner(const RoadrunnerInstance& inst);

// Open cells hit by a laser at (x,y): rays left, right, up, down, each
// stopping before the first hill.
std::vector<XY> attacked_positions(const RoadrunnerInstance& inst, int x, int y);

struct RoadrunnerModel {
  GridVars laser;  // rows = max_y, cols = max_x
  GridVars road;
  HcpGridEncoding circuit;
  UnaryCount k;  // full counter over the road cells
};

RoadrunnerModel build_roadrunner(CnfBuilder& b, const RoadrunnerInstance& inst);

struct RoadrunnerSolution {
  int max_x = 0;
  int max_y = 0;
  std::vector<std::uint8_t> laser;  // row-major
  std::vector<std::uint8_t> road;
  int k = 0;
  std::vector<XY> cycle;

  bool has_laser(int x, int y) const { return laser[static_cast<std::size_t>((y - 1) * max_x + (x - 1))] != 0; }
  bool has_road(int x, int y) const { return road[static_cast<std::size_t>((y - 1) * max_x + (x - 1))] != 0; }
};

RoadrunnerSolution decode_roadrunner(const Model& model, const RoadrunnerModel& m);

Verdict verify_roadrunner(const RoadrunnerInstance& inst, const RoadrunnerSolution& sol);

struct RoadrunnerResult {
  OptimizeResult search;
  std::optional<RoadrunnerSolution> solution;
};

// Maximizes the circuit length by bound bisection.
RoadrunnerResult solve_roadrunner(const RoadrunnerInstance& inst, const SolveFn& solve);

// "safecircuitlen(K)." followed by the laser and road grids.
std::string render_roadrunner(const RoadrunnerInstance& inst, const RoadrunnerSolution& sol);

}  // namespace reachsat::puzzles
