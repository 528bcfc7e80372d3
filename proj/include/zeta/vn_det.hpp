#pragma once

#include "zeta/matrix.hpp"

#include <complex>

namespace zeta {

// Applies the von Neumann trace coefficient-wise: matrix trace first, then
// the ring trace (identity on Q, coefficient of 1 on Q[Z^d]).
template <typename R>
TruncatedSeries<Rational> vn_trace(const TruncatedSeries<R>& f) {
    TruncatedSeries<Rational> t(f.order());
    for (int k = 0; k <= f.order(); ++k) t.set_coeff(k, RingTraits<R>::vn_trace(f.coeff(k)));
    return t;
}

// Formal von Neumann determinant Det = Exp . Tr . Log of a matrix power
// series with identity constant term. The result is a series over Q with
// constant term 1.
template <typename R>
TruncatedSeries<Rational> det_vn(const SeriesMatrix<R>& A) {
    SeriesMatrix<R> L = matrix_log(A);
    return exp(vn_trace(L.trace()));
}

// (1 - u^2)^s via Exp(s * Log(1 - u^2)), principal branch; s may be any
// rational. For integer s this agrees with the repeated product.
TruncatedSeries<Rational> binomial_factor(const Rational& s, int order);

// 1/f for f with constant term 1, as Exp(-Log f).
TruncatedSeries<Rational> series_inverse(const TruncatedSeries<Rational>& f);

struct SeriesEvaluation {
    std::complex<double> value;
    // Set when |u0| >= 1/norm_bound, i.e. u0 is outside the radius on which
    // the series is guaranteed to converge absolutely.
    bool outside_radius = false;
};

// Floating-point partial sum of f at u0. norm_bound is an operator-norm
// estimate for the operator whose determinant f is; the guaranteed radius
// of absolute convergence is 1/norm_bound.
SeriesEvaluation eval_series(const TruncatedSeries<Rational>& f, std::complex<double> u0,
                             double norm_bound);

} // namespace zeta
