#pragma once

#include <gmpxx.h>
#include <string>

namespace zeta {

// Exact rational scalar. Library arithmetic is exact everywhere; floating
// point appears only in eval_series().
using Rational = mpq_class;

// Canonicalized p/q. mpq_class(p, q) alone does not reduce the fraction.
inline Rational frac(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument.
Rational rational_from_string(const std::string& s);

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

} // namespace zeta
