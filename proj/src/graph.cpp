#include "zeta/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace zeta {

namespace {

bool edge_in_range(const SerreGraph& g, int e) { return e >= 0 && e < g.edge_count(); }

std::vector<std::vector<int>> out_edges(const SerreGraph& g) {
    std::vector<std::vector<int>> out(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) out[g.edge_origin[e]].push_back(e);
    return out;
}

} // namespace

int add_geometric_edge(SerreGraph& g, int from, int to) {
    if (from < 0 || from >= g.vertex_count || to < 0 || to >= g.vertex_count)
        throw std::out_of_range("edge endpoint out of range");
    int e = g.edge_count();
    g.edge_origin.push_back(from);
    g.edge_terminus.push_back(to);
    g.edge_origin.push_back(to);
    g.edge_terminus.push_back(from);
    g.edge_reversal.push_back(e + 1);
    g.edge_reversal.push_back(e);
    return e;
}

int add_geometric_edge(VoltageGraph& vg, int from, int to, VoltageVector v) {
    if (static_cast<int>(v.size()) != vg.rank)
        throw std::invalid_argument("voltage length must equal the rank");
    int e = add_geometric_edge(vg.base, from, to);
    VoltageVector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    vg.voltage.push_back(std::move(v));
    vg.voltage.push_back(std::move(neg));
    return e;
}

std::vector<std::string> validate_graph(const SerreGraph& g) {
    std::vector<std::string> report;
    const int E = g.edge_count();
    if (static_cast<int>(g.edge_terminus.size()) != E ||
        static_cast<int>(g.edge_reversal.size()) != E) {
        report.push_back("edge arrays have inconsistent lengths");
        return report;
    }
    if (E % 2 != 0) report.push_back("odd oriented-edge count");
    for (int e = 0; e < E; ++e) {
        if (g.edge_origin[e] < 0 || g.edge_origin[e] >= g.vertex_count ||
            g.edge_terminus[e] < 0 || g.edge_terminus[e] >= g.vertex_count) {
            report.push_back("endpoint out of range: edge " + std::to_string(e));
            continue;
        }
        int r = g.edge_reversal[e];
        if (!edge_in_range(g, r)) {
            report.push_back("involution out of range: edge " + std::to_string(e));
            continue;
        }
        if (r == e) report.push_back("fixed-point involution: edge " + std::to_string(e));
        if (g.edge_reversal[r] != e)
            report.push_back("involution not self-inverse: edge " + std::to_string(e));
        if (edge_in_range(g, r) &&
            (g.edge_origin[r] != g.edge_terminus[e] || g.edge_terminus[r] != g.edge_origin[e]))
            report.push_back("endpoint mismatch: edge " + std::to_string(e) + " reversed to " +
                             std::to_string(r));
    }
    std::vector<int> deg(g.vertex_count, 0);
    for (int e = 0; e < E; ++e) {
        if (g.edge_origin[e] >= 0 && g.edge_origin[e] < g.vertex_count) ++deg[g.edge_origin[e]];
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (deg[v] == 0) report.push_back("isolated vertex: " + std::to_string(v));
    return report;
}

std::vector<std::string> validate_voltage_graph(const VoltageGraph& vg) {
    std::vector<std::string> report = validate_graph(vg.base);
    if (vg.rank < 0) report.push_back("negative rank");
    if (static_cast<int>(vg.voltage.size()) != vg.base.edge_count()) {
        report.push_back("voltage array length mismatch");
        return report;
    }
    for (int e = 0; e < vg.base.edge_count(); ++e) {
        if (static_cast<int>(vg.voltage[e].size()) != vg.rank) {
            report.push_back("voltage length mismatch: edge " + std::to_string(e));
            continue;
        }
        int r = vg.base.edge_reversal[e];
        if (!edge_in_range(vg.base, r)) continue;
        bool anti = true;
        for (int i = 0; i < vg.rank; ++i)
            if (vg.voltage[r][i] != -vg.voltage[e][i]) anti = false;
        if (!anti)
            report.push_back("voltage antisymmetry violated: edge " + std::to_string(e));
    }
    return report;
}

int degree(const SerreGraph& g, int vertex) {
    if (vertex < 0 || vertex >= g.vertex_count) throw std::out_of_range("unknown vertex id");
    int d = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge_origin[e] == vertex) ++d;
    return d;
}

std::vector<int> reduced_successors(const SerreGraph& g, int e) {
    if (!edge_in_range(g, e)) throw std::out_of_range("unknown edge id");
    std::vector<int> succ;
    int v = g.edge_terminus[e];
    for (int e1 = 0; e1 < g.edge_count(); ++e1)
        if (g.edge_origin[e1] == v && e1 != g.edge_reversal[e]) succ.push_back(e1);
    return succ;
}

bool is_closed(const SerreGraph& g, const ClosedWalk& w) {
    if (w.edges.empty()) return false;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        int e = w.edges[i];
        int next = w.edges[(i + 1) % w.edges.size()];
        if (!edge_in_range(g, e) || !edge_in_range(g, next)) return false;
        if (g.edge_terminus[e] != g.edge_origin[next]) return false;
    }
    return true;
}

bool is_cyclically_reduced(const SerreGraph& g, const ClosedWalk& w) {
    if (!is_closed(g, w)) return false;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        int e = w.edges[i];
        int next = w.edges[(i + 1) % w.edges.size()];
        if (next == g.edge_reversal[e]) return false;
    }
    return true;
}

VoltageVector total_voltage(const VoltageGraph& vg, const ClosedWalk& w) {
    VoltageVector total(vg.rank, 0);
    for (int e : w.edges) {
        if (e < 0 || e >= static_cast<int>(vg.voltage.size()))
            throw std::out_of_range("unknown edge id");
        for (int i = 0; i < vg.rank; ++i) total[i] += vg.voltage[e][i];
    }
    return total;
}

void for_each_closed_nb_walk(
    const VoltageGraph& vg, int n,
    const std::function<void(const std::vector<int>&, const VoltageVector&)>& visit) {
    if (n < 1) throw std::invalid_argument("walk length must be >= 1");
    const SerreGraph& g = vg.base;
    auto out = out_edges(g);

    std::vector<int> walk(n);
    VoltageVector volt(vg.rank, 0);

    // Depth-first over reduced extensions; voltage accumulates along the way
    // and the only pruning is on length.
    auto extend = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            int first = walk[0];
            int last = walk[n - 1];
            if (g.edge_terminus[last] != g.edge_origin[first]) return;
            if (first == g.edge_reversal[last]) return;
            visit(walk, volt);
            return;
        }
        int prev = walk[depth - 1];
        for (int e1 : out[g.edge_terminus[prev]]) {
            if (e1 == g.edge_reversal[prev]) continue;
            walk[depth] = e1;
            for (int i = 0; i < vg.rank; ++i) volt[i] += vg.voltage[e1][i];
            self(self, depth + 1);
            for (int i = 0; i < vg.rank; ++i) volt[i] -= vg.voltage[e1][i];
        }
    };

    for (int e0 = 0; e0 < g.edge_count(); ++e0) {
        walk[0] = e0;
        for (int i = 0; i < vg.rank; ++i) volt[i] += vg.voltage[e0][i];
        extend(extend, 1);
        for (int i = 0; i < vg.rank; ++i) volt[i] -= vg.voltage[e0][i];
    }
}

long long closed_nb_walks(const VoltageGraph& vg, int n, bool zero_voltage_only) {
    long long count = 0;
    for_each_closed_nb_walk(vg, n, [&](const std::vector<int>&, const VoltageVector& v) {
        if (zero_voltage_only) {
            for (long long x : v)
                if (x != 0) return;
        }
        ++count;
    });
    return count;
}

long long closed_nb_walks(const SerreGraph& g, int n) {
    VoltageGraph vg;
    vg.base = g;
    vg.rank = 0;
    vg.voltage.assign(g.edge_count(), {});
    return closed_nb_walks(vg, n, false);
}

PrimitiveRoot primitive_root(const ClosedWalk& w) {
    PrimitiveRoot r;
    const int n = w.length();
    if (n == 0) {
        r.root = w;
        return r;
    }
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (int i = 0; i + p < n && periodic; ++i)
            if (w.edges[i] != w.edges[i + p]) periodic = false;
        if (periodic) {
            r.root.edges.assign(w.edges.begin(), w.edges.begin() + p);
            r.multiplicity = n / p;
            return r;
        }
    }
    r.root = w; // unreachable: p = n always matches
    return r;
}

} // namespace zeta
