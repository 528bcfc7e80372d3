#include "zeta/vn_det.hpp"

namespace zeta {

TruncatedSeries<Rational> binomial_factor(const Rational& s, int order) {
    TruncatedSeries<Rational> base(order);
    base.set_coeff(0, Rational(1));
    if (order >= 2) base.set_coeff(2, Rational(-1));
    return exp(log(base).scaled(s));
}

TruncatedSeries<Rational> series_inverse(const TruncatedSeries<Rational>& f) {
    return exp(-log(f));
}

SeriesEvaluation eval_series(const TruncatedSeries<Rational>& f, std::complex<double> u0,
                             double norm_bound) {
    SeriesEvaluation r;
    std::complex<double> acc(0.0, 0.0);
    for (int k = f.order(); k >= 0; --k) {
        acc = acc * u0 + f.coeff(k).get_d();
    }
    r.value = acc;
    r.outside_radius = norm_bound > 0.0 && std::abs(u0) >= 1.0 / norm_bound;
    return r;
}

} // namespace zeta
