#include "zeta/rational.hpp"

#include <stdexcept>

namespace zeta {

Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace zeta
