#include "sesquipair/rdivisor.hpp"

namespace sesq {

RDivisor &RDivisor::add_term(const Point &P, const QuadInt &coeff) {
    if (!terms_.empty()) {
        const Point &ref = terms_.begin()->first;
        if (ref.E != P.E)
            throw CurveMismatch("divisor mixes curves");
        if (terms_.begin()->second.ord != coeff.ord)
            throw OrderMismatch("divisor mixes orders");
    }
    auto it = terms_.find(P);
    if (it == terms_.end()) {
        if (!coeff.is_zero())
            terms_.emplace(P, coeff);
        return *this;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero())
        terms_.erase(it);
    return *this;
}

RDivisor RDivisor::operator+(const RDivisor &o) const {
    RDivisor out = *this;
    for (const auto &[P, c] : o.terms_)
        out.add_term(P, c);
    return out;
}

RDivisor RDivisor::operator-(const RDivisor &o) const {
    RDivisor out = *this;
    for (const auto &[P, c] : o.terms_)
        out.add_term(P, -c);
    return out;
}

RDivisor operator*(const QuadInt &beta, const RDivisor &D) {
    RDivisor out;
    if (beta.is_zero())
        return out;
    for (const auto &[P, c] : D.terms_)
        out.add_term(P, beta * c);
    return out;
}

QuadInt RDivisor::degree(const QuadOrder &ord) const {
    QuadInt d(0, 0, ord);
    for (const auto &[P, c] : terms_)
        d = d + c;
    return d;
}

std::string RDivisor::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto &[P, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.str() + ")*" + P.str();
    }
    return s;
}

bool supports_disjoint(const RDivisor &D, const RDivisor &E) {
    for (const auto &[P, c] : D.terms())
        if (E.terms().count(P))
            return false;
    return true;
}

RDivisor eta(const Point &P, const CMEndo &endo) {
    const QuadOrder &ord = endo.order();
    const QuadInt one(1, 0, ord), tau(0, 1, ord);
    const Point O = P.E.infinity();
    RDivisor D;
    D.add_term(apply_r(-tau, P, endo), one);
    D.add_term(O, -one - tau);
    D.add_term(P, tau);
    return D;
}

CanonicalPair canonical_form(const RDivisor &D, const Curve &E, const QuadOrder &ord) {
    if (!D.degree(ord).is_zero())
        throw NonzeroDegree("canonical form requires a degree-0 divisor");
    Point p0 = E.infinity(), p1 = E.infinity();
    for (const auto &[P, c] : D.terms()) {
        p0 = p0 + scalar_mul(P, c.x);
        p1 = p1 + scalar_mul(P, c.y);
    }
    return CanonicalPair{p0, p1};
}

RDivisor translate(const RDivisor &D, const Point &S) {
    RDivisor out;
    for (const auto &[P, c] : D.terms())
        out.add_term(P + S, c);
    return out;
}

} // namespace sesq
