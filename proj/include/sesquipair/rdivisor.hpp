#pragma once

#include <map>

#include "sesquipair/curve.hpp"

namespace sesq {

// Finite formal sum of points with QuadInt coefficients (Div_R(E)).
// Zero coefficients are never retained.
class RDivisor {
public:
    RDivisor() = default;

    RDivisor &add_term(const Point &P, const QuadInt &coeff);

    RDivisor operator+(const RDivisor &o) const;
    RDivisor operator-(const RDivisor &o) const;
    friend RDivisor operator*(const QuadInt &beta, const RDivisor &D);

    bool empty() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }
    const std::map<Point, QuadInt, PointCmp> &terms() const { return terms_; }

    QuadInt degree(const QuadOrder &ord) const;

    bool operator==(const RDivisor &o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<Point, QuadInt, PointCmp> terms_;
};

bool supports_disjoint(const RDivisor &D, const RDivisor &E);

// D ~ (p0) - (O) + tau*((p1) - (O)) in Pic^0_R(E)
struct CanonicalPair {
    Point p0, p1;
    bool operator==(const CanonicalPair &o) const { return p0 == o.p0 && p1 == o.p1; }
    bool operator!=(const CanonicalPair &o) const { return !(*this == o); }
    bool is_zero() const { return p0.is_infinity() && p1.is_infinity(); }
};

// ([-tau]P) - (O) + tau*((P) - (O)); twists the action:
// eta([alpha]P) ~ conj(alpha)*eta(P).
RDivisor eta(const Point &P, const CMEndo &endo);

// Splits a degree-0 R-divisor D = D0 + tau*D1 and returns (D0^Sigma, D1^Sigma).
// Throws NonzeroDegree unless degree(D) = 0.
CanonicalPair canonical_form(const RDivisor &D, const Curve &E, const QuadOrder &ord);

// Every support point shifted by +S, coefficients unchanged.
RDivisor translate(const RDivisor &D, const Point &S);

} // namespace sesq
