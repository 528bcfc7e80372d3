#pragma once

#include <functional>
#include <string>
#include <vector>

namespace zeta {

// Graph in Serre's convention: oriented edges with a fixed-point-free
// reversal involution and endpoint maps satisfying origin(rev e) = terminus(e).
// A geometric edge is an orientation pair {e, rev e}; loops are allowed.
//
// Builders lay edges out so that 2k and 2k+1 reverse each other, but nothing
// below assumes that layout; validate_graph checks arbitrary data.
struct SerreGraph {
    int vertex_count = 0;
    std::vector<int> edge_origin;
    std::vector<int> edge_terminus;
    std::vector<int> edge_reversal;

    int edge_count() const { return static_cast<int>(edge_origin.size()); }
    int geometric_edge_count() const { return edge_count() / 2; }
};

using VoltageVector = std::vector<long long>;

// SerreGraph plus Z^d-valued edge voltages, antisymmetric under reversal.
// This presents the Z^d-periodic cover: vertices (x, g), with edge e lifting
// to (origin e, g) -> (terminus e, g + voltage e). Rank 0 is the finite case.
struct VoltageGraph {
    SerreGraph base;
    int rank = 0;
    std::vector<VoltageVector> voltage; // one vector of length rank per oriented edge
};

struct ClosedWalk {
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const ClosedWalk& o) const { return edges == o.edges; }
};

// Appends one oriented pair for the geometric edge {from, to}; returns the id
// of the forward orientation (the reverse is id+1).
int add_geometric_edge(SerreGraph& g, int from, int to);
int add_geometric_edge(VoltageGraph& vg, int from, int to, VoltageVector v);

// Lists violated invariants, empty when the graph is valid. Violations are
// data, not failures.
std::vector<std::string> validate_graph(const SerreGraph& g);
std::vector<std::string> validate_voltage_graph(const VoltageGraph& vg);

int degree(const SerreGraph& g, int vertex);

// The edges e1 with origin(e1) = terminus(e) and e1 != rev(e); exactly
// degree(terminus(e)) - 1 of them. Throws std::out_of_range on a bad id.
std::vector<int> reduced_successors(const SerreGraph& g, int e);

bool is_closed(const SerreGraph& g, const ClosedWalk& w);
// Cyclically reduced: every step avoids the reversal of the previous edge,
// indices mod n (so the wrap from last to first is included).
bool is_cyclically_reduced(const SerreGraph& g, const ClosedWalk& w);
VoltageVector total_voltage(const VoltageGraph& vg, const ClosedWalk& w);

// Counts cyclically reduced closed walks of length n as based edge
// sequences (one count per starting position). With zero_voltage_only set,
// only walks of total voltage zero are counted; those are the walks that
// close up in the periodic cover.
long long closed_nb_walks(const VoltageGraph& vg, int n, bool zero_voltage_only);
long long closed_nb_walks(const SerreGraph& g, int n);

struct PrimitiveRoot {
    ClosedWalk root;
    int multiplicity = 1;
};

// Smallest cyclic period: w = root^multiplicity and root is not a proper
// power.
PrimitiveRoot primitive_root(const ClosedWalk& w);

// Visits every cyclically reduced closed walk of length n, once per starting
// edge. The visitor receives the edge sequence and its total voltage.
void for_each_closed_nb_walk(const VoltageGraph& vg, int n,
                             const std::function<void(const std::vector<int>&, const VoltageVector&)>& visit);

} // namespace zeta
