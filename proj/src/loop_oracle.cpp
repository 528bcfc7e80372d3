#include "zeta/loop_oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace zeta {

LoopCountTable invert_log_zeta(const TruncatedSeries<Rational>& f) {
    if (!zeta::is_zero(f.coeff(0)))
        throw std::invalid_argument("invert_log_zeta: constant term must be 0");
    LoopCountTable table;
    table.max_length = f.order();
    for (int m = 1; m <= f.order(); ++m) {
        Rational c_m = -Rational(m) * f.coeff(m);
        Rational acc = c_m;
        for (int l = 1; l < m; ++l)
            if (m % l == 0) acc -= Rational(l) * table.at(l);
        Rational n_m = acc / m;
        table.counts[m] = n_m;
        if (sgn(n_m) < 0 || !is_integer(n_m)) table.flagged.push_back(m);
    }
    return table;
}

TruncatedSeries<Rational> log_zeta_from_table(const LoopCountTable& table, int order) {
    TruncatedSeries<Rational> f(order);
    for (const auto& [l, n] : table.counts) {
        if (l < 1 || l > order || zeta::is_zero(n)) continue;
        // N(l) * Log(1 - u^l) = -N(l) * sum_k u^{lk} / k
        for (int k = 1; l * k <= order; ++k)
            f.set_coeff(l * k, f.coeff(l * k) - n / k);
    }
    return f;
}

long long count_loop_classes(const VoltageGraph& vg, int length) {
    if (length < 1) throw std::invalid_argument("length must be >= 1");
    long long primitive_based = 0;
    for_each_closed_nb_walk(vg, length,
                            [&](const std::vector<int>& walk, const VoltageVector& volt) {
                                for (long long x : volt)
                                    if (x != 0) return;
                                ClosedWalk w{walk};
                                if (primitive_root(w).multiplicity == 1) ++primitive_based;
                            });
    if (primitive_based % length != 0)
        throw std::logic_error("primitive based-walk count not divisible by the length");
    return primitive_based / length;
}

Rational grid_neglog_coefficient(int M) {
    if (M < 1) throw std::invalid_argument("M must be >= 1");
    Rational acc = frac(1, M);
    for (int d = 0; d <= M; ++d) {
        mpz_class sign = (M - d) % 2 == 0 ? 1 : -1;
        mpz_class three_pow;
        mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(M - d));
        mpz_class b1 = binomial(static_cast<unsigned long>(M + d), static_cast<unsigned long>(M - d));
        mpz_class b2 = binomial(2ul * d, static_cast<unsigned long>(d));
        Rational term(sign * three_pow * b1 * b2 * b2, M + d);
        term.canonicalize();
        acc += term;
    }
    return acc;
}

std::string table_to_csv(const LoopCountTable& table) {
    std::ostringstream out;
    for (int l = 1; l <= table.max_length; ++l)
        out << l << "," << table.at(l).get_str() << "\n";
    return out.str();
}

} // namespace zeta
