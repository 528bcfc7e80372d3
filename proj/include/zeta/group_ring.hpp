#pragma once

#include "zeta/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace zeta {

// Element of the group ring Q[Z^d]: a Laurent polynomial in d commuting
// variables, stored as a sparse map from exponent vectors to nonzero
// rational coefficients. The map keeps exponents in lexicographic order,
// which doubles as the canonical rendering order.
//
// Elements supported on the zero vector ("constants") are identified with
// rationals across ranks: arithmetic promotes a constant to the rank of the
// other operand, so the rank-0 ring embeds canonically in every Q[Z^d].
// Combining non-constant elements of different ranks is an input error.
class GroupRingElement {
public:
    using Exponent = std::vector<long long>;

    GroupRingElement() = default;          // zero of rank 0
    explicit GroupRingElement(int rank);   // zero of the given rank
    GroupRingElement(int rank, const Rational& constant);
    static GroupRingElement monomial(Exponent g, const Rational& coeff = 1);
    static GroupRingElement unit(int rank) { return GroupRingElement(rank, 1); }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t support_size() const { return terms_.size(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    Rational coefficient(const Exponent& g) const;

    // Coefficient of the identity group element: the von Neumann trace Tr_pi.
    Rational trace() const;

    // Specializes every group element to 1 (sum of coefficients).
    Rational augmentation() const;

    // Negates all exponents; the *-involution on Q[Z^d].
    GroupRingElement star() const;

    GroupRingElement operator-() const;
    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        a += b;
        return a;
    }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        a -= b;
        return a;
    }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

    GroupRingElement scaled(const Rational& s) const;

    bool operator==(const GroupRingElement& o) const;
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    // Canonical form: terms in lexicographic exponent order, e.g.
    // "1*x^(-1,0) + 1/2*x^(1,2)"; constants render as plain fractions.
    std::string str() const;

private:
    void add_term(const Exponent& g, const Rational& c);
    bool promotable_to(int rank) const { return is_zero() || is_constant(); }
    GroupRingElement promoted(int rank) const;
    // Promotes constants so both sides share a rank; throws on a true mismatch.
    static void align_ranks(GroupRingElement& a, GroupRingElement& b);

    int rank_ = 0;
    std::map<Exponent, Rational> terms_;
};

inline std::string to_string(const GroupRingElement& g) { return g.str(); }

} // namespace zeta
