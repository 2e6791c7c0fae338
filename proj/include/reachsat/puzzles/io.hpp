#pragma once

// Solution documents and variable-map sidecars.
//
// JSON schema: {"kind", "n" | "maxX"+"maxY", "black" | "road"+"laser" as
// arrays of 0/1 rows, "cycle" as a list of cells, "k"}. Loop cells are
// [row, col]; Roadrunner cells are [x, y].

#include <istream>
#include <map>
#include <string>

#include <json.hpp>

#include "reachsat/puzzles/roadrunner.hpp"
#include "reachsat/puzzles/tapa.hpp"

namespace reachsat::puzzles {

nlohmann::json loop_to_json(const std::string& kind, const LoopSolution& sol);
nlohmann::json coloring_to_json(const ColoringSolution& sol);
nlohmann::json roadrunner_to_json(const RoadrunnerSolution& sol);

// Throw ParseError on schema violations. Grid sizes are checked against
// the expected dimensions.
LoopSolution loop_from_json(const nlohmann::json& doc, int n);
ColoringSolution coloring_from_json(const nlohmann::json& doc, int n);
RoadrunnerSolution roadrunner_from_json(const nlohmann::json& doc, int max_x, int max_y);

// Reads "index name" lines as written by CnfBuilder::write_var_map.
std::map<std::string, VarId> parse_var_map(std::istream& in);

// Grid literals named "<prefix>(r,c)" and the grid edges named
// "edge(r1,c1,r2,c2)" found in a variable map. Throws ParseError when a
// name is missing.
GridVars grid_from_var_map(const std::map<std::string, VarId>& names, const std::string& prefix, int rows,
                           int cols);
std::vector<EdgeSpec> grid_edges_from_var_map(const std::map<std::string, VarId>& names, int rows, int cols);

}  // namespace reachsat::puzzles
