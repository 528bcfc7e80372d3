#pragma once

#include "zeta/graph.hpp"
#include "zeta/vn_det.hpp"

namespace zeta {

// Operators of a finite graph. T acts on oriented edges: T[e1][e] = 1 when
// (e, e1) is reduced, i.e. origin(e1) = terminus(e) and e1 != rev(e).
// delta is the adjacency operator on vertices (delta[x][y] = number of edges
// x -> y), Q the diagonal degree-minus-one operator, chi = |V| - |E_geom|.
struct FiniteOperators {
    DenseMatrix<Rational> T;
    DenseMatrix<Rational> delta;
    DenseMatrix<Rational> Q;
    Rational chi;
};

FiniteOperators build_operators(const SerreGraph& g);

// I - Tu and I - delta*u + Q*u^2 as series matrices ready for det_vn.
SeriesMatrix<Rational> edge_pencil(const FiniteOperators& ops, int order);
SeriesMatrix<Rational> vertex_pencil(const FiniteOperators& ops, int order);

// Zeta function as Det(I - Tu). A polynomial: coefficients vanish above the
// oriented edge count.
TruncatedSeries<Rational> zeta_via_T(const SerreGraph& g, int order);

// Zeta function as (1-u^2)^{-chi} * Det(I - delta*u + Q*u^2).
TruncatedSeries<Rational> zeta_via_ihara(const SerreGraph& g, int order);

// sum_x 1/|stab(x)| - sum_{geometric e} 1/|stab(e)|; the oriented-edge sum
// of the L2 Euler characteristic halved into geometric edges. Orders must
// be >= 1.
Rational weighted_chi(const std::vector<long long>& vertex_orders,
                      const std::vector<long long>& geometric_edge_orders);

} // namespace zeta
