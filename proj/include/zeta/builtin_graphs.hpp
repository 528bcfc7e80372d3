#pragma once

#include "zeta/graph.hpp"

namespace zeta::graphs {

// Rank-0 graphs (finite covers).
VoltageGraph single_edge();        // two vertices, one geometric edge
VoltageGraph path_graph(int vertices);
VoltageGraph star_tree(int leaves);
VoltageGraph triangle();
VoltageGraph complete4();
VoltageGraph bouquet_rank0(int loops);
VoltageGraph theta();              // two vertices joined by three edges

// Periodic covers.
VoltageGraph grid_bouquet();       // 1 vertex, loops (1,0) and (0,1): the square grid
VoltageGraph line_bouquet();       // 1 vertex, loop (1): the line
VoltageGraph ladder();             // 2 vertices, rung (0) and rail loops (1): the infinite ladder
VoltageGraph hex_lattice();        // 2 vertices, edges (0,0),(1,0),(0,1): the hexagonal lattice
VoltageGraph zigzag_line();        // 2 vertices, edges (0) and (1): the line again

struct NamedGraph {
    const char* name;
    VoltageGraph graph;
};

// The fixed rank-0 collection exercised by identity and oracle suites.
std::vector<NamedGraph> finite_collection();

// The fixed periodic collection (ranks 1 and 2).
std::vector<NamedGraph> periodic_collection();

} // namespace zeta::graphs
