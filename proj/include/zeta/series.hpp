#pragma once

#include "zeta/group_ring.hpp"
#include "zeta/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace zeta {

// Coefficient-ring plumbing shared by series and matrices. vn_trace is the
// von Neumann trace on the ring: identity on Q, the coefficient of the
// identity group element on Q[Z^d].
template <typename R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational scaled(const Rational& x, const Rational& s) { return x * s; }
    static Rational vn_trace(const Rational& x) { return x; }
    static Rational l1_norm(const Rational& x) { return abs(x); }
    static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct RingTraits<GroupRingElement> {
    static GroupRingElement zero() { return GroupRingElement(); }
    static GroupRingElement one() { return GroupRingElement(0, 1); }
    static bool is_zero(const GroupRingElement& x) { return x.is_zero(); }
    static GroupRingElement scaled(const GroupRingElement& x, const Rational& s) {
        return x.scaled(s);
    }
    static Rational vn_trace(const GroupRingElement& x) { return x.trace(); }
    static Rational l1_norm(const GroupRingElement& x) {
        Rational n(0);
        for (const auto& [g, c] : x.terms()) n += abs(c);
        return n;
    }
    static std::string str(const GroupRingElement& x) { return x.str(); }
};

// Power series in u truncated at a fixed order N: coefficients c_0..c_N over
// an exact coefficient ring. All arithmetic is modulo u^{N+1}; binary
// operations on series of different orders truncate to the minimum order.
template <typename R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(check_order(order) + 1, RingTraits<R>::zero()) {}

    static TruncatedSeries constant(R c0, int order) {
        TruncatedSeries f(order);
        f.c_[0] = std::move(c0);
        return f;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& coeff(int k) const {
        if (k < 0 || k > order()) throw std::out_of_range("series coefficient out of range");
        return c_[k];
    }

    void set_coeff(int k, R v) {
        if (k < 0 || k > order()) throw std::out_of_range("series coefficient out of range");
        c_[k] = std::move(v);
    }

    bool is_zero() const {
        for (const R& c : c_)
            if (!RingTraits<R>::is_zero(c)) return false;
        return true;
    }

    TruncatedSeries truncated(int new_order) const {
        TruncatedSeries f(new_order);
        for (int k = 0; k <= std::min(new_order, order()); ++k) f.c_[k] = c_[k];
        return f;
    }

    TruncatedSeries scaled(const Rational& s) const {
        TruncatedSeries f(order());
        for (int k = 0; k <= order(); ++k) f.c_[k] = RingTraits<R>::scaled(c_[k], s);
        return f;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries f(std::min(a.order(), b.order()));
        for (int k = 0; k <= f.order(); ++k) f.c_[k] = a.c_[k] + b.c_[k];
        return f;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries f(std::min(a.order(), b.order()));
        for (int k = 0; k <= f.order(); ++k) f.c_[k] = a.c_[k] - b.c_[k];
        return f;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries f(order());
        for (int k = 0; k <= order(); ++k) f.c_[k] = -c_[k];
        return f;
    }

    // Cauchy product truncated at min(N_a, N_b).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries f(std::min(a.order(), b.order()));
        for (int i = 0; i <= f.order(); ++i) {
            if (RingTraits<R>::is_zero(a.c_[i])) continue;
            for (int j = 0; i + j <= f.order(); ++j) {
                if (RingTraits<R>::is_zero(b.c_[j])) continue;
                f.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return f;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream out;
        bool first = true;
        for (int k = 0; k <= order(); ++k) {
            if (RingTraits<R>::is_zero(c_[k])) continue;
            if (!first) out << " + ";
            first = false;
            out << "(" << RingTraits<R>::str(c_[k]) << ")";
            if (k == 1) out << "*u";
            if (k > 1) out << "*u^" << k;
        }
        if (first) out << "0";
        return out.str();
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
        return order;
    }

    std::vector<R> c_;
};

// Log(f) for f with constant term 1: the principal-branch formal series
// -sum_{m>=1} (1-f)^m / m. Computed coefficient-recursively from f' = g'*f,
// which yields the identical formal series over a commutative Q-algebra.
template <typename R>
TruncatedSeries<R> log(const TruncatedSeries<R>& f) {
    if (!(f.coeff(0) == RingTraits<R>::one()))
        throw std::invalid_argument("log: constant term must be 1");
    const int n = f.order();
    TruncatedSeries<R> g(n);
    for (int m = 1; m <= n; ++m) {
        R acc = f.coeff(m);
        for (int k = 1; k < m; ++k) {
            if (RingTraits<R>::is_zero(g.coeff(k)) || RingTraits<R>::is_zero(f.coeff(m - k)))
                continue;
            acc -= RingTraits<R>::scaled(g.coeff(k) * f.coeff(m - k), frac(k, m));
        }
        g.set_coeff(m, std::move(acc));
    }
    return g;
}

// Exp(f) for f with zero constant term: sum_{m>=0} f^m / m!, via the same
// derivative recursion.
template <typename R>
TruncatedSeries<R> exp(const TruncatedSeries<R>& f) {
    if (!RingTraits<R>::is_zero(f.coeff(0)))
        throw std::invalid_argument("exp: constant term must be 0");
    const int n = f.order();
    TruncatedSeries<R> h(n);
    h.set_coeff(0, RingTraits<R>::one());
    for (int m = 1; m <= n; ++m) {
        R acc = RingTraits<R>::zero();
        for (int k = 1; k <= m; ++k) {
            if (RingTraits<R>::is_zero(f.coeff(k)) || RingTraits<R>::is_zero(h.coeff(m - k)))
                continue;
            acc += RingTraits<R>::scaled(f.coeff(k) * h.coeff(m - k), frac(k, m));
        }
        h.set_coeff(m, std::move(acc));
    }
    return h;
}

template <typename R>
std::string to_string(const TruncatedSeries<R>& f) {
    return f.str();
}

} // namespace zeta
