#pragma once

#include "zeta/graph.hpp"
#include "zeta/vn_det.hpp"

namespace zeta {

// Operators of the Z^d-periodic cover presented by a voltage graph, with
// entries in Q[Z^d]:
//   delta[x][y] = sum over edges e: x -> y of the group element of voltage(e)
//   Q[x][x]     = (degree(x) - 1) * 1
//   T[e1][e]    = group element of voltage(e1) when (e, e1) is reduced
// chi2 is the L2 Euler characteristic |VB| - |EB_geometric| (free action).
// Specializing every group element to 1 recovers the finite operators of the
// base graph.
struct PeriodicOperators {
    DenseMatrix<GroupRingElement> T;
    DenseMatrix<GroupRingElement> delta;
    DenseMatrix<GroupRingElement> Q;
    Rational chi2;
    int rank = 0;
};

PeriodicOperators build_periodic(const VoltageGraph& vg);

// I - Tu and Delta(u) = I - delta*u + Q*u^2 over Q[Z^d].
SeriesMatrix<GroupRingElement> edge_pencil(const PeriodicOperators& ops, int order);
SeriesMatrix<GroupRingElement> vertex_pencil(const PeriodicOperators& ops, int order);

// Log Z_pi(Y, u) = -chi2 * Log(1 - u^2) + Tr_pi Log Delta(u), over Q.
TruncatedSeries<Rational> log_zeta(const VoltageGraph& vg, int order);

// Tr_pi of the matrix trace of T^n; equals the zero-voltage cyclically
// reduced closed-walk count of length n.
Rational tr_T_power(const VoltageGraph& vg, int n);

// tr_T_power for all n = 1..n_max, reusing intermediate powers.
std::vector<Rational> tr_T_powers(const VoltageGraph& vg, int n_max);

struct EqualityReport {
    bool equal = true;
    int first_mismatch = -1; // order of the first differing coefficient
    TruncatedSeries<Rational> lhs;
    TruncatedSeries<Rational> rhs;
};

// Compares Det(I - Tu) with (1-u^2)^{-chi2} * Det(Delta(u)) coefficient-wise
// to the given order. Inequality is data: it signals an implementation bug,
// not a user error.
EqualityReport bass_hashimoto_check(const VoltageGraph& vg, int order);

} // namespace zeta
