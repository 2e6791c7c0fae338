#pragma once

// Reachability constraints over a subgraph selected by literals:
//   hcp family - the in-vertices and active edges form one directed cycle
//                (distance encoding: successor labels from a unique start);
//   scc family - the in-vertices are connected through active undirected
//                edges (tree encoding: parent choice plus depth labels).

#include <compare>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "reachsat/cnf.hpp"

namespace reachsat {

// 1-based grid position.
struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;
};

// Ground vertex identifier.
using Term = std::variant<int, Cell>;

std::string to_string(const Term& t);

struct VertexSpec {
  Term term;
  Lit in;  // true iff the vertex belongs to the subgraph
};

struct EdgeSpec {
  Term from;
  Term to;
  Lit active;
};

struct GridVars {
  int rows = 0;
  int cols = 0;
  std::vector<Lit> cells;  // row-major

  GridVars() = default;
  GridVars(int r, int c, std::vector<Lit> lits);

  Lit at(int row, int col) const {  // 1-based
    return cells[static_cast<std::size_t>((row - 1) * cols + (col - 1))];
  }
  bool contains(int row, int col) const {
    return row >= 1 && row <= rows && col >= 1 && col <= cols;
  }
};

// One fresh variable per cell, named "<prefix>(r,c)".
GridVars new_grid(CnfBuilder& b, int rows, int cols, const std::string& prefix = "cell");

struct HcpEncoding {
  std::vector<Lit> start;         // per vertex, declaration order
  std::vector<BitVec> distance;   // per vertex
  UnaryCount count;               // over the in-literals; capped unless counted
  Lit single;                     // exactly one in-vertex
};

struct SccEncoding {
  struct Parent {
    int vertex;  // index into the declaration order
    Lit chosen;
  };
  std::vector<Lit> root;
  std::vector<BitVec> distance;
  std::vector<std::vector<Parent>> parents;  // candidate parents per vertex
  UnaryCount count;                          // empty unless a count was requested
};

// Active edges form a single directed cycle through exactly the in-vertices.
// A single in-vertex with no active edge is a cycle; the empty subgraph is
// not.
HcpEncoding hcp(CnfBuilder& b, std::span<const VertexSpec> vs, std::span<const EdgeSpec> es);
// hcp with exactly k in-vertices.
HcpEncoding hcp_k(CnfBuilder& b, std::span<const VertexSpec> vs, std::span<const EdgeSpec> es,
                  int k);
// hcp exposing a full counter over the in-vertices, for bounding by the caller.
HcpEncoding hcp_counted(CnfBuilder& b, std::span<const VertexSpec> vs,
                        std::span<const EdgeSpec> es);

struct HcpGridEncoding {
  std::vector<EdgeSpec> edges;  // row-major; per cell: up, down, left, right
  HcpEncoding hcp;
};

HcpGridEncoding hcp_grid(CnfBuilder& b, const GridVars& grid);
HcpGridEncoding hcp_grid_k(CnfBuilder& b, const GridVars& grid, int k);
HcpGridEncoding hcp_grid_counted(CnfBuilder& b, const GridVars& grid);

// Directed edges of the grid graph in hcp_grid order with fresh literals
// named "edge(r1,c1,r2,c2)".
std::vector<EdgeSpec> grid_edges(CnfBuilder& b, int rows, int cols);

// In-vertices are non-empty and connected through active edges, treated as
// undirected: {u,v,B} also connects v to u.
SccEncoding scc(CnfBuilder& b, std::span<const VertexSpec> vs, std::span<const EdgeSpec> es);
SccEncoding scc_k(CnfBuilder& b, std::span<const VertexSpec> vs, std::span<const EdgeSpec> es,
                  int k);

struct SccGridEncoding {
  std::vector<EdgeSpec> edges;  // one per orthogonal pair: right, then down
  SccEncoding scc;
};

SccGridEncoding scc_grid(CnfBuilder& b, const GridVars& grid);
SccGridEncoding scc_grid_k(CnfBuilder& b, const GridVars& grid, int k);

struct Successor {
  int to;   // 0-based vertex index
  Lit sel;  // true iff this successor is chosen
};

// Every vertex picks one successor; the choices form a Hamiltonian cycle.
HcpEncoding circuit(CnfBuilder& b, std::span<const std::vector<Successor>> adjacency);
// Vertex i either stays (stay[i] true, not in the subgraph) or picks one
// successor; the non-staying vertices form a cycle. All-stay is allowed.
HcpEncoding subcircuit(CnfBuilder& b, std::span<const std::vector<Successor>> adjacency,
                       std::span<const Lit> stay);

}  // namespace reachsat
