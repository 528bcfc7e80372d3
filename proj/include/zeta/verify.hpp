#pragma once

#include "zeta/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace zeta {

// Outcome of one randomized/fixed property suite. Counterexamples carry a
// reproducible dump (a graph document or the offending matrices) plus the
// order at which the mismatch appeared.
struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> counterexamples;

    bool passed() const { return failures == 0; }
};

// Deterministic bounded draw (stdlib distributions are not pinned across
// platforms).
long long uniform_int(std::mt19937_64& rng, long long lo, long long hi);

// Uniform pairing model conditioned on connectivity: |V| in [2, max_vertices],
// degrees in [1, max_degree] with even sum, half-edges paired uniformly.
// Loops and multi-edges are allowed; the pairing never creates inversions.
VoltageGraph random_connected_graph(std::mt19937_64& rng, int max_vertices = 8,
                                    int max_degree = 5);

// Determinant axioms (multiplicativity, conjugation invariance,
// block-triangular factorization, scalar power rule) on random matrix
// series of sizes 1-3 over Q and over Q[Z^2], exactly to the given order.
SuiteResult verify_det_axioms(std::uint64_t seed, int instances_per_axiom = 100, int order = 8);

// zeta_via_T == zeta_via_ihara on the builtin finite collection and
// random_graphs random graphs, at order twice the oriented edge count;
// plus the periodic collection via bass_hashimoto_check.
SuiteResult verify_bass_hashimoto(std::uint64_t seed, int random_graphs = 50);

// Tr T^n == zero-voltage cyclically reduced closed-walk count for the
// builtin finite and periodic collections, n <= n_max.
SuiteResult verify_trace_lemma(std::uint64_t seed, int n_max = 10);

// invert_log_zeta(log_zeta_from_table(t)) == t for random integer tables
// with lengths <= max_length.
SuiteResult verify_inversion_roundtrip(std::uint64_t seed, int tables = 100, int max_length = 20);

} // namespace zeta
