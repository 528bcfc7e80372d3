#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zeta/builtin_graphs.hpp"
#include "zeta/verify.hpp"
#include "zeta/zeta_finite.hpp"
#include "zeta/zeta_periodic.hpp"

#include <random>

using namespace zeta;
using testutil::make_series;
using testutil::mono;

TEST_CASE("grid operators match the worked example") {
    PeriodicOperators ops = build_periodic(graphs::grid_bouquet());
    GroupRingElement expected_delta =
        mono({1, 0}) + mono({-1, 0}) + mono({0, 1}) + mono({0, -1});
    CHECK(ops.delta.size() == 1);
    CHECK(ops.delta.at(0, 0) == expected_delta);
    CHECK(ops.Q.at(0, 0) == GroupRingElement(2, 3));
    CHECK(ops.chi2 == -1);

    // T entry (e1, e) holds the voltage monomial of the successor e1
    CHECK(ops.T.at(0, 0) == mono({1, 0}));  // a after a
    CHECK(ops.T.at(1, 0).is_zero());        // a-bar never follows a
    CHECK(ops.T.at(2, 0) == mono({0, 1}));  // b after a
}

TEST_CASE("delta is self-adjoint under star and transpose") {
    for (const auto& [name, vg] : graphs::periodic_collection()) {
        CAPTURE(name);
        PeriodicOperators ops = build_periodic(vg);
        for (int x = 0; x < ops.delta.size(); ++x)
            for (int y = 0; y < ops.delta.size(); ++y)
                CHECK(ops.delta.at(x, y) == ops.delta.at(y, x).star());
    }
}

TEST_CASE("rank-0 input specializes to the finite operators") {
    for (const auto& [name, vg] : graphs::finite_collection()) {
        CAPTURE(name);
        PeriodicOperators p = build_periodic(vg);
        FiniteOperators f = build_operators(vg.base);
        for (int i = 0; i < p.T.size(); ++i)
            for (int j = 0; j < p.T.size(); ++j)
                CHECK(p.T.at(i, j).augmentation() == f.T.at(i, j));
        for (int i = 0; i < p.delta.size(); ++i)
            for (int j = 0; j < p.delta.size(); ++j)
                CHECK(p.delta.at(i, j).augmentation() == f.delta.at(i, j));
        CHECK(p.chi2 == f.chi);
    }
}

TEST_CASE("augmentation of periodic operators recovers the base graph") {
    PeriodicOperators p = build_periodic(graphs::ladder());
    FiniteOperators f = build_operators(graphs::ladder().base);
    for (int i = 0; i < p.T.size(); ++i)
        for (int j = 0; j < p.T.size(); ++j)
            CHECK(p.T.at(i, j).augmentation() == f.T.at(i, j));
}

TEST_CASE("two-vertex rank-1 graph has the expected adjacency entries") {
    PeriodicOperators ops = build_periodic(graphs::zigzag_line());
    CHECK(ops.delta.at(0, 1) == GroupRingElement::unit(1) + mono({1}));
    CHECK(ops.delta.at(1, 0) == GroupRingElement::unit(1) + mono({-1}));
}

TEST_CASE("voltage antisymmetry violations are input errors") {
    VoltageGraph vg = graphs::grid_bouquet();
    vg.voltage[1] = {1, 0};
    CHECK_THROWS_AS(build_periodic(vg), std::invalid_argument);
}

TEST_CASE("grid log zeta coefficients") {
    TruncatedSeries<Rational> lz = log_zeta(graphs::grid_bouquet(), 6);
    CHECK(lz.coeff(1) == 0);
    CHECK(lz.coeff(2) == 0);
    CHECK(lz.coeff(3) == 0);
    CHECK(lz.coeff(4) == -2);
}

TEST_CASE("rank-0 triangle log zeta matches the finite route") {
    TruncatedSeries<Rational> lz = log_zeta(graphs::triangle(), 9);
    CHECK(lz == log(zeta_via_T(graphs::triangle().base, 9)));
    // explicitly: Log (1 - u^3)^2
    CHECK(lz.coeff(3) == -2);
    CHECK(lz.coeff(6) == -1);
    CHECK(lz.coeff(9) == frac(-2, 3));
}

TEST_CASE("T-power traces on the grid") {
    CHECK(tr_T_power(graphs::grid_bouquet(), 2) == 0);
    CHECK(tr_T_power(graphs::grid_bouquet(), 4) == 8);
    for (int n = 1; n <= 6; ++n) CHECK(tr_T_power(graphs::path_graph(4), n) == 0);
}

TEST_CASE("trace lemma on the full collection") {
    SuiteResult r = verify_trace_lemma(0, 8);
    for (const auto& c : r.counterexamples) MESSAGE(c);
    CHECK(r.failures == 0);
}

TEST_CASE("log zeta is invariant under deck basis change and coboundaries") {
    VoltageGraph grid = graphs::grid_bouquet();
    CHECK(log_zeta(testutil::basis_changed(grid, {{1, 1}, {0, 1}}), 8) == log_zeta(grid, 8));
    CHECK(log_zeta(testutil::basis_changed(grid, {{0, 1}, {1, 0}}), 8) == log_zeta(grid, 8));

    VoltageGraph hex = graphs::hex_lattice();
    CHECK(log_zeta(testutil::basis_changed(hex, {{1, 0}, {1, 1}}), 8) == log_zeta(hex, 8));
    CHECK(log_zeta(testutil::coboundary_shifted(hex, {{1, -2}, {0, 3}}), 8) == log_zeta(hex, 8));

    VoltageGraph ladder = graphs::ladder();
    CHECK(log_zeta(testutil::coboundary_shifted(ladder, {{5}, {-3}}), 8) == log_zeta(ladder, 8));
}

TEST_CASE("bass hashimoto identity for periodic covers") {
    EqualityReport grid = bass_hashimoto_check(graphs::grid_bouquet(), 12);
    CHECK(grid.equal);

    EqualityReport k4 = bass_hashimoto_check(graphs::complete4(), 12);
    CHECK(k4.equal);

    EqualityReport ladder = bass_hashimoto_check(graphs::ladder(), 10);
    CHECK(ladder.equal);

    EqualityReport hex = bass_hashimoto_check(graphs::hex_lattice(), 8);
    CHECK(hex.equal);
}

TEST_CASE("identity and trace lemma hold on random voltage graphs") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 6; ++t) {
        VoltageGraph vg = random_connected_graph(rng, 5, 4);
        vg.rank = 2;
        vg.voltage.assign(vg.base.edge_count(), {});
        for (int e = 0; e < vg.base.edge_count(); e += 2) {
            VoltageVector v = {uniform_int(rng, -2, 2), uniform_int(rng, -2, 2)};
            vg.voltage[e + 1] = {-v[0], -v[1]};
            vg.voltage[e] = std::move(v);
        }
        CAPTURE(t);
        EqualityReport r = bass_hashimoto_check(vg, 8);
        CHECK(r.equal);
        for (int n = 1; n <= 6; ++n)
            CHECK(tr_T_power(vg, n) == frac(closed_nb_walks(vg, n, true)));
    }
}

TEST_CASE("log zeta denominators stay within the truncation factorials") {
    TruncatedSeries<Rational> lz = log_zeta(graphs::grid_bouquet(), 10);
    mpz_class lcm = 1;
    for (int k = 1; k <= 10; ++k) {
        mpz_class kk(k);
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), kk.get_mpz_t());
    }
    for (int k = 0; k <= 10; ++k) {
        Rational scaled = lz.coeff(k) * Rational(lcm);
        CHECK(is_integer(scaled));
    }
}
