#pragma once

#include "zeta/graph.hpp"
#include "zeta/series.hpp"

#include <map>

namespace zeta {

// Table of loop counts: length l -> N(l), the number of translation classes
// of primitive cyclically reduced loops in the cover. Entries are rational
// to leave room for the stabilizer-weighted exponents of non-free actions,
// but enumeration only ever produces nonnegative integers.
struct LoopCountTable {
    std::map<int, Rational> counts;
    int max_length = 0;
    // Lengths whose entry came out negative or non-integer under inversion;
    // nonempty flags inconsistent input.
    std::vector<int> flagged;

    Rational at(int length) const {
        auto it = counts.find(length);
        return it == counts.end() ? Rational(0) : it->second;
    }
};

// Recovers N(l) from f = Log Z: with c_m = -m * [u^m] f, solves
// N(m) = (c_m - sum_{l | m, l < m} l * N(l)) / m for m = 1..order(f).
// Requires zero constant term. Negative or non-integer entries are stored
// as-is and flagged.
LoopCountTable invert_log_zeta(const TruncatedSeries<Rational>& f);

// Log Z built from a table: sum_l N(l) * Log(1 - u^l), truncated at order.
// Inverting the result recovers the table at lengths <= order.
TruncatedSeries<Rational> log_zeta_from_table(const LoopCountTable& table, int order);

// N(l) by brute force: enumerates cyclically reduced closed walks of length
// l with zero total voltage, keeps the primitive ones, and divides by l
// (each translation class of primitive loops has exactly l based
// representatives; Z^d is torsion-free, so the division is exact and is
// asserted). For rank 0 this counts cyclic classes of primitive walks.
long long count_loop_classes(const VoltageGraph& vg, int length);

// Closed-form coefficient of u^{2M} in -Log Z for the square grid (the
// 2-loop bouquet with voltages (1,0), (0,1)):
//   1/M + sum_{d=0}^{M} (-3)^{M-d}/(M+d) * C(M+d, M-d) * C(2d, d)^2.
Rational grid_neglog_coefficient(int M);

// CSV rows "length,count" with exact fractions, one per length 1..max_length.
std::string table_to_csv(const LoopCountTable& table);

} // namespace zeta
