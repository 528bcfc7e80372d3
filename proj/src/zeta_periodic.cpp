#include "zeta/zeta_periodic.hpp"

#include <stdexcept>

namespace zeta {

namespace {

GroupRingElement voltage_monomial(const VoltageGraph& vg, int e) {
    return GroupRingElement::monomial(vg.voltage[e], 1);
}

} // namespace

PeriodicOperators build_periodic(const VoltageGraph& vg) {
    auto violations = validate_voltage_graph(vg);
    if (!violations.empty())
        throw std::invalid_argument("invalid voltage graph: " + violations.front());

    const SerreGraph& g = vg.base;
    const int E = g.edge_count();
    const int V = g.vertex_count;
    PeriodicOperators ops{DenseMatrix<GroupRingElement>(E), DenseMatrix<GroupRingElement>(V),
                          DenseMatrix<GroupRingElement>(V), Rational(0), vg.rank};

    for (int e = 0; e < E; ++e)
        for (int e1 = 0; e1 < E; ++e1)
            if (g.edge_origin[e1] == g.edge_terminus[e] && e1 != g.edge_reversal[e])
                ops.T.at(e1, e) += voltage_monomial(vg, e1);

    for (int e = 0; e < E; ++e)
        ops.delta.at(g.edge_origin[e], g.edge_terminus[e]) += voltage_monomial(vg, e);

    for (int v = 0; v < V; ++v)
        ops.Q.at(v, v) = GroupRingElement(vg.rank, Rational(degree(g, v) - 1));

    ops.chi2 = Rational(V) - Rational(g.geometric_edge_count());
    return ops;
}

SeriesMatrix<GroupRingElement> edge_pencil(const PeriodicOperators& ops, int order) {
    SeriesMatrix<GroupRingElement> A =
        SeriesMatrix<GroupRingElement>::identity(ops.T.size(), order);
    if (order >= 1) A.set_coeff(1, -ops.T);
    return A;
}

SeriesMatrix<GroupRingElement> vertex_pencil(const PeriodicOperators& ops, int order) {
    SeriesMatrix<GroupRingElement> A =
        SeriesMatrix<GroupRingElement>::identity(ops.delta.size(), order);
    if (order >= 1) A.set_coeff(1, -ops.delta);
    if (order >= 2) A.set_coeff(2, ops.Q);
    return A;
}

TruncatedSeries<Rational> log_zeta(const VoltageGraph& vg, int order) {
    PeriodicOperators ops = build_periodic(vg);
    TruncatedSeries<Rational> one_minus_u2(order);
    one_minus_u2.set_coeff(0, Rational(1));
    if (order >= 2) one_minus_u2.set_coeff(2, Rational(-1));
    TruncatedSeries<Rational> euler_part = log(one_minus_u2).scaled(-ops.chi2);
    TruncatedSeries<Rational> det_part = vn_trace(matrix_log(vertex_pencil(ops, order)).trace());
    return euler_part + det_part;
}

Rational tr_T_power(const VoltageGraph& vg, int n) {
    if (n < 1) throw std::invalid_argument("power must be >= 1");
    return tr_T_powers(vg, n).back();
}

std::vector<Rational> tr_T_powers(const VoltageGraph& vg, int n_max) {
    if (n_max < 1) throw std::invalid_argument("power must be >= 1");
    PeriodicOperators ops = build_periodic(vg);
    std::vector<Rational> traces;
    traces.reserve(n_max);
    DenseMatrix<GroupRingElement> P = ops.T;
    traces.push_back(P.trace().trace());
    for (int n = 2; n <= n_max; ++n) {
        P = P * ops.T;
        traces.push_back(P.trace().trace());
    }
    return traces;
}

EqualityReport bass_hashimoto_check(const VoltageGraph& vg, int order) {
    PeriodicOperators ops = build_periodic(vg);
    EqualityReport r{true, -1, TruncatedSeries<Rational>(order), TruncatedSeries<Rational>(order)};
    r.lhs = det_vn(edge_pencil(ops, order));
    r.rhs = binomial_factor(-ops.chi2, order) * det_vn(vertex_pencil(ops, order));
    for (int k = 0; k <= order; ++k) {
        if (r.lhs.coeff(k) != r.rhs.coeff(k)) {
            r.equal = false;
            r.first_mismatch = k;
            break;
        }
    }
    return r;
}

} // namespace zeta
