#include "zeta/group_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace zeta {

GroupRingElement::GroupRingElement(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("group ring rank must be >= 0");
}

GroupRingElement::GroupRingElement(int rank, const Rational& constant) : GroupRingElement(rank) {
    if (!zeta::is_zero(constant)) terms_.emplace(Exponent(rank, 0), constant);
}

GroupRingElement GroupRingElement::monomial(Exponent g, const Rational& coeff) {
    GroupRingElement e(static_cast<int>(g.size()));
    if (!zeta::is_zero(coeff)) e.terms_.emplace(std::move(g), coeff);
    return e;
}

bool GroupRingElement::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponent& g = terms_.begin()->first;
    for (long long v : g)
        if (v != 0) return false;
    return true;
}

Rational GroupRingElement::coefficient(const Exponent& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational GroupRingElement::trace() const {
    return coefficient(Exponent(rank_, 0));
}

Rational GroupRingElement::augmentation() const {
    Rational s(0);
    for (const auto& [g, c] : terms_) s += c;
    return s;
}

GroupRingElement GroupRingElement::star() const {
    GroupRingElement r(rank_);
    for (const auto& [g, c] : terms_) {
        Exponent neg(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
        r.terms_.emplace(std::move(neg), c);
    }
    return r;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement r(rank_);
    for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
    return r;
}

void GroupRingElement::add_term(const Exponent& g, const Rational& c) {
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (zeta::is_zero(it->second)) terms_.erase(it);
    }
}

GroupRingElement GroupRingElement::promoted(int rank) const {
    if (rank_ == rank) return *this;
    if (!promotable_to(rank))
        throw std::invalid_argument("group ring rank mismatch");
    GroupRingElement r(rank);
    if (!terms_.empty()) r.terms_.emplace(Exponent(rank, 0), terms_.begin()->second);
    return r;
}

void GroupRingElement::align_ranks(GroupRingElement& a, GroupRingElement& b) {
    if (a.rank_ == b.rank_) return;
    if (a.promotable_to(b.rank_))
        a = a.promoted(b.rank_);
    else
        b = b.promoted(a.rank_);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    GroupRingElement rhs = o;
    align_ranks(*this, rhs);
    for (const auto& [g, c] : rhs.terms_) add_term(g, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    GroupRingElement rhs = o;
    align_ranks(*this, rhs);
    for (const auto& [g, c] : rhs.terms_) add_term(g, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement lhs = a, rhs = b;
    GroupRingElement::align_ranks(lhs, rhs);
    GroupRingElement r(lhs.rank_);
    GroupRingElement::Exponent g(lhs.rank_, 0);
    for (const auto& [ga, ca] : lhs.terms_) {
        for (const auto& [gb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < g.size(); ++i) g[i] = ga[i] + gb[i];
            r.add_term(g, ca * cb);
        }
    }
    return r;
}

GroupRingElement GroupRingElement::scaled(const Rational& s) const {
    if (zeta::is_zero(s)) return GroupRingElement(rank_);
    GroupRingElement r(rank_);
    for (const auto& [g, c] : terms_) r.terms_.emplace(g, c * s);
    return r;
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
    if (rank_ == o.rank_) return terms_ == o.terms_;
    if (is_zero() && o.is_zero()) return true;
    if (promotable_to(o.rank_)) return promoted(o.rank_).terms_ == o.terms_;
    if (o.promotable_to(rank_)) return terms_ == o.promoted(rank_).terms_;
    return false;
}

std::string GroupRingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        bool is_id = true;
        for (long long v : g)
            if (v != 0) is_id = false;
        if (is_id) {
            out << c.get_str();
            continue;
        }
        out << c.get_str() << "*x^(";
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i) out << ",";
            out << g[i];
        }
        out << ")";
    }
    return out.str();
}

} // namespace zeta
