#include "zeta/zeta_finite.hpp"

#include <stdexcept>

namespace zeta {

FiniteOperators build_operators(const SerreGraph& g) {
    auto violations = validate_graph(g);
    if (!violations.empty())
        throw std::invalid_argument("invalid graph: " + violations.front());

    const int E = g.edge_count();
    const int V = g.vertex_count;
    FiniteOperators ops{DenseMatrix<Rational>(E), DenseMatrix<Rational>(V),
                        DenseMatrix<Rational>(V), Rational(0)};

    for (int e = 0; e < E; ++e)
        for (int e1 = 0; e1 < E; ++e1)
            if (g.edge_origin[e1] == g.edge_terminus[e] && e1 != g.edge_reversal[e])
                ops.T.at(e1, e) = 1;

    for (int e = 0; e < E; ++e) ops.delta.at(g.edge_origin[e], g.edge_terminus[e]) += 1;

    for (int v = 0; v < V; ++v) ops.Q.at(v, v) = degree(g, v) - 1;

    ops.chi = Rational(V) - Rational(g.geometric_edge_count());
    return ops;
}

SeriesMatrix<Rational> edge_pencil(const FiniteOperators& ops, int order) {
    SeriesMatrix<Rational> A = SeriesMatrix<Rational>::identity(ops.T.size(), order);
    if (order >= 1) A.set_coeff(1, -ops.T);
    return A;
}

SeriesMatrix<Rational> vertex_pencil(const FiniteOperators& ops, int order) {
    SeriesMatrix<Rational> A = SeriesMatrix<Rational>::identity(ops.delta.size(), order);
    if (order >= 1) A.set_coeff(1, -ops.delta);
    if (order >= 2) A.set_coeff(2, ops.Q);
    return A;
}

TruncatedSeries<Rational> zeta_via_T(const SerreGraph& g, int order) {
    FiniteOperators ops = build_operators(g);
    return det_vn(edge_pencil(ops, order));
}

TruncatedSeries<Rational> zeta_via_ihara(const SerreGraph& g, int order) {
    FiniteOperators ops = build_operators(g);
    return binomial_factor(-ops.chi, order) * det_vn(vertex_pencil(ops, order));
}

Rational weighted_chi(const std::vector<long long>& vertex_orders,
                      const std::vector<long long>& geometric_edge_orders) {
    Rational chi(0);
    for (long long w : vertex_orders) {
        if (w < 1) throw std::invalid_argument("stabilizer order must be >= 1");
        chi += frac(1, w);
    }
    for (long long w : geometric_edge_orders) {
        if (w < 1) throw std::invalid_argument("stabilizer order must be >= 1");
        chi -= frac(1, w);
    }
    return chi;
}

} // namespace zeta
