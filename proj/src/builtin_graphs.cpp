#include "zeta/builtin_graphs.hpp"

namespace zeta::graphs {

namespace {

VoltageGraph finite(int vertices) {
    VoltageGraph vg;
    vg.base.vertex_count = vertices;
    vg.rank = 0;
    return vg;
}

VoltageGraph periodic(int vertices, int rank) {
    VoltageGraph vg;
    vg.base.vertex_count = vertices;
    vg.rank = rank;
    return vg;
}

} // namespace

VoltageGraph single_edge() {
    VoltageGraph vg = finite(2);
    add_geometric_edge(vg, 0, 1, {});
    return vg;
}

VoltageGraph path_graph(int vertices) {
    VoltageGraph vg = finite(vertices);
    for (int i = 0; i + 1 < vertices; ++i) add_geometric_edge(vg, i, i + 1, {});
    return vg;
}

VoltageGraph star_tree(int leaves) {
    VoltageGraph vg = finite(leaves + 1);
    for (int i = 1; i <= leaves; ++i) add_geometric_edge(vg, 0, i, {});
    return vg;
}

VoltageGraph triangle() {
    VoltageGraph vg = finite(3);
    add_geometric_edge(vg, 0, 1, {});
    add_geometric_edge(vg, 1, 2, {});
    add_geometric_edge(vg, 2, 0, {});
    return vg;
}

VoltageGraph complete4() {
    VoltageGraph vg = finite(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) add_geometric_edge(vg, i, j, {});
    return vg;
}

VoltageGraph bouquet_rank0(int loops) {
    VoltageGraph vg = finite(1);
    for (int i = 0; i < loops; ++i) add_geometric_edge(vg, 0, 0, {});
    return vg;
}

VoltageGraph theta() {
    VoltageGraph vg = finite(2);
    add_geometric_edge(vg, 0, 1, {});
    add_geometric_edge(vg, 0, 1, {});
    add_geometric_edge(vg, 0, 1, {});
    return vg;
}

VoltageGraph grid_bouquet() {
    VoltageGraph vg = periodic(1, 2);
    add_geometric_edge(vg, 0, 0, {1, 0});
    add_geometric_edge(vg, 0, 0, {0, 1});
    return vg;
}

VoltageGraph line_bouquet() {
    VoltageGraph vg = periodic(1, 1);
    add_geometric_edge(vg, 0, 0, {1});
    return vg;
}

VoltageGraph ladder() {
    VoltageGraph vg = periodic(2, 1);
    add_geometric_edge(vg, 0, 1, {0});
    add_geometric_edge(vg, 0, 0, {1});
    add_geometric_edge(vg, 1, 1, {1});
    return vg;
}

VoltageGraph hex_lattice() {
    VoltageGraph vg = periodic(2, 2);
    add_geometric_edge(vg, 0, 1, {0, 0});
    add_geometric_edge(vg, 0, 1, {1, 0});
    add_geometric_edge(vg, 0, 1, {0, 1});
    return vg;
}

VoltageGraph zigzag_line() {
    VoltageGraph vg = periodic(2, 1);
    add_geometric_edge(vg, 0, 1, {0});
    add_geometric_edge(vg, 0, 1, {1});
    return vg;
}

std::vector<NamedGraph> finite_collection() {
    return {{"single-edge", single_edge()}, {"path4", path_graph(4)},
            {"star3", star_tree(3)},        {"triangle", triangle()},
            {"K4", complete4()},            {"bouquet2", bouquet_rank0(2)},
            {"theta", theta()}};
}

std::vector<NamedGraph> periodic_collection() {
    return {{"grid", grid_bouquet()},
            {"line-bouquet", line_bouquet()},
            {"ladder", ladder()},
            {"hex", hex_lattice()},
            {"zigzag-line", zigzag_line()}};
}

} // namespace zeta::graphs
