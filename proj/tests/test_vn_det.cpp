#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_bareiss.hpp"
#include "test_util.hpp"
#include "zeta/verify.hpp"
#include "zeta/vn_det.hpp"

#include <cmath>

using namespace zeta;
using testutil::make_series;
using testutil::mono;

TEST_CASE("det of a scalar multiple of the identity is the power") {
    // (1 - 2u) Id, 3x3
    SeriesMatrix<Rational> a = SeriesMatrix<Rational>::identity(3, 4);
    DenseMatrix<Rational> lin(3);
    for (int i = 0; i < 3; ++i) lin.at(i, i) = -2;
    a.set_coeff(1, lin);
    CHECK(det_vn(a) == make_series({"1", "-6", "12", "-8"}, 4));

    CHECK(det_vn(SeriesMatrix<Rational>::identity(4, 5)) ==
          TruncatedSeries<Rational>::constant(1, 5));
}

TEST_CASE("det over the group ring matches the hand expansion for the grid Laplacian") {
    // 1x1 matrix 1 - (a + a^-1 + b + b^-1) u + 3 u^2
    GroupRingElement s = mono({1, 0}) + mono({-1, 0}) + mono({0, 1}) + mono({0, -1});
    SeriesMatrix<GroupRingElement> a(1, 4);
    DenseMatrix<GroupRingElement> c0(1), c1(1), c2(1);
    c0.at(0, 0) = GroupRingElement::unit(2);
    c1.at(0, 0) = -s;
    c2.at(0, 0) = GroupRingElement(2, 3);
    a.set_coeff(0, c0);
    a.set_coeff(1, c1);
    a.set_coeff(2, c2);
    TruncatedSeries<Rational> lg = log(det_vn(a));
    CHECK(lg.coeff(1) == 0);
    CHECK(lg.coeff(2) == 1); // 3 - 4/2
}

TEST_CASE("det requires an identity constant term") {
    SeriesMatrix<Rational> a(2, 3); // zero constant term
    CHECK_THROWS_AS(det_vn(a), std::invalid_argument);
}

TEST_CASE("binomial factor specializes correctly") {
    CHECK(binomial_factor(1, 6) == make_series({"1", "0", "-1"}, 6));
    CHECK(binomial_factor(-1, 6) == make_series({"1", "0", "1", "0", "1", "0", "1"}, 6));
    CHECK(binomial_factor(frac(1, 2), 6) ==
          make_series({"1", "0", "-1/2", "0", "-1/8", "0", "-1/16"}, 6));

    // integer exponents agree with the repeated product
    auto one_minus_u2 = make_series({"1", "0", "-1"}, 8);
    CHECK(binomial_factor(3, 8) == one_minus_u2 * one_minus_u2 * one_minus_u2);
}

TEST_CASE("series inverse really inverts") {
    auto f = make_series({"1", "3", "-2", "1/4"}, 8);
    CHECK(f * series_inverse(f) == make_series({"1"}, 8));
}

TEST_CASE("eval_series computes partial sums and flags the radius") {
    auto f = make_series({"1", "-1"}, 4);
    SeriesEvaluation ev = eval_series(f, {0.5, 0.0}, 1.0);
    CHECK(ev.value.real() == doctest::Approx(0.5));
    CHECK(!ev.outside_radius);

    // log(1 - u) partial sums at 0.1 approximate the logarithm within the tail
    TruncatedSeries<Rational> lg(12);
    for (int k = 1; k <= 12; ++k) lg.set_coeff(k, frac(-1, k));
    SeriesEvaluation lev = eval_series(lg, {0.1, 0.0}, 1.0);
    double tail = std::pow(0.1, 13) / (13 * (1 - 0.1));
    CHECK(std::abs(lev.value.real() - std::log(0.9)) <= tail + 1e-15);

    // outside the guaranteed radius the arithmetic is the same, flag set
    SeriesEvaluation warn = eval_series(f, {0.6, 0.0}, 2.0);
    CHECK(warn.outside_radius);
    CHECK(warn.value.real() == doctest::Approx(0.4));
}

TEST_CASE("multiplicativity, conjugation, block and scalar axioms hold") {
    SuiteResult r = verify_det_axioms(42, 12, 8);
    for (const auto& c : r.counterexamples) MESSAGE(c);
    CHECK(r.failures == 0);
    CHECK(r.checks == 48);
}

TEST_CASE("rank-0 det agrees with fraction-free elimination") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        int size = 1 + t % 3;
        int degree = 2; // polynomial entries of degree <= 2
        int order = 3 * degree * size; // beyond the determinant's degree
        SeriesMatrix<Rational> a = SeriesMatrix<Rational>::identity(size, order);
        for (int k = 1; k <= degree; ++k) {
            DenseMatrix<Rational> m(size);
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    m.at(i, j) = frac(uniform_int(rng, -2, 2), uniform_int(rng, 1, 2));
            a.set_coeff(k, m);
        }
        testutil::Poly expected = testutil::classical_determinant(a);
        TruncatedSeries<Rational> got = det_vn(a);
        REQUIRE(expected.degree() <= got.order());
        for (int k = 0; k <= got.order(); ++k) CHECK(got.coeff(k) == expected.coeff(k));
    }
}
