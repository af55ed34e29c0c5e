#include "sesquipair/quad.hpp"

#include <numeric>
#include <tuple>

namespace sesq {

std::string QuadInt::str() const {
    if (y == 0)
        return std::to_string(x);
    std::string s;
    if (x != 0)
        s = std::to_string(x);
    if (y > 0 && !s.empty())
        s += "+";
    if (y == -1)
        s += "-";
    else if (y != 1)
        s += std::to_string(y) + "*";
    s += "tau";
    return s;
}

ActionMatrix action_matrix(const QuadInt &beta) {
    // beta*1 = x + y*tau; beta*tau = x*tau + y*tau^2 = -y*n + (x + y*t)*tau
    return ActionMatrix{beta.x, -beta.y * beta.ord.n, beta.y, beta.x + beta.y * beta.ord.t};
}

namespace {

// floor division
i64 fdiv(i64 a, i64 b) {
    i64 qq = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --qq;
    return qq;
}

i64 emod(i64 a, i64 b) {
    i64 r = a % b;
    if (r < 0)
        r += (b > 0 ? b : -b);
    return r;
}

} // namespace

Hnf2 hnf_of_columns(const std::vector<std::pair<i64, i64>> &cols) {
    // fold columns with nonzero second coordinate by extended gcd
    i64 gx = 0, gy = 0; // vector whose y-part is gcd of all y-parts
    std::vector<i64> xs; // x-parts of vectors with zero y-part
    for (auto [cx, cy] : cols) {
        if (cy == 0) {
            xs.push_back(cx);
            continue;
        }
        if (gy == 0) {
            gx = cx;
            gy = cy;
            continue;
        }
        // replace (gx,gy),(cx,cy) by (gcd combo, y=gcd) and (combo, y=0)
        i64 old_gx = gx, old_gy = gy;
        i64 a = gy, b = cy;
        // extended gcd
        i64 s0 = 1, s1 = 0, r0 = a, r1 = b;
        while (r1 != 0) {
            i64 qq = fdiv(r0, r1);
            std::tie(r0, r1) = std::make_pair(r1, r0 - qq * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - qq * s1);
        }
        i64 g = r0;
        i64 u = s0;                  // u*a + v*b = g
        i64 v = (b == 0) ? 0 : (g - u * a) / b;
        gx = u * old_gx + v * cx;
        gy = g;
        // the eliminated combination has zero y-part
        xs.push_back((cy / g) * old_gx - (old_gy / g) * cx);
    }
    if (gy == 0)
        throw ZeroModulus("lattice has rank < 2");
    if (gy < 0) {
        gx = -gx;
        gy = -gy;
    }
    i64 d0 = 0;
    for (i64 xv : xs)
        d0 = std::gcd(d0, xv < 0 ? -xv : xv);
    if (d0 == 0)
        throw ZeroModulus("lattice has rank < 2");
    return Hnf2{d0, emod(gx, d0), gy};
}

ResidueRing::ResidueRing(const QuadInt &alpha) : alpha_(alpha), hnf_{} {
    if (alpha.is_zero())
        throw ZeroModulus("residue ring modulo zero");
    const ActionMatrix m = action_matrix(alpha);
    hnf_ = hnf_of_columns({{m.a, m.c}, {m.b, m.d}});
}

QuadInt ResidueRing::reduce(const QuadInt &beta) const {
    if (beta.ord != alpha_.ord)
        throw OrderMismatch("reduction across orders");
    i64 x = beta.x, y = beta.y;
    i64 k = fdiv(y, hnf_.d1);
    x -= k * hnf_.c01;
    y -= k * hnf_.d1;
    x = emod(x, hnf_.d0);
    return QuadInt(x, y, beta.ord);
}

std::vector<QuadInt> ResidueRing::representatives() const {
    std::vector<QuadInt> out;
    out.reserve(static_cast<size_t>(size()));
    for (i64 y = 0; y < hnf_.d1; ++y)
        for (i64 x = 0; x < hnf_.d0; ++x)
            out.emplace_back(x, y, alpha_.ord);
    return out;
}

QuadInt inverse_mod(const QuadInt &beta, const ResidueRing &ring) {
    const QuadInt one(1, 0, beta.ord);
    if (ring.size() <= 10'000) {
        for (const QuadInt &r : ring.representatives()) {
            if (ring.reduce(r * beta) == ring.reduce(one))
                return r;
        }
        throw NotInvertible("no inverse modulo " + ring.modulus().str());
    }
    // gamma = conj(beta) * u with u = N(beta)^{-1} mod N(alpha); then
    // beta*gamma = N(beta)*u = 1 mod N(alpha), and N(alpha) lies in alpha R.
    const i64 na = ring.size();
    const i64 nb = emod(beta.norm(), na);
    if (std::gcd(nb, na) != 1)
        throw NotInvertible("norm shares a factor with the modulus");
    i64 s0 = 1, s1 = 0, r0 = nb, r1 = na;
    while (r1 != 0) {
        i64 qq = fdiv(r0, r1);
        std::tie(r0, r1) = std::make_pair(r1, r0 - qq * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - qq * s1);
    }
    return ring.reduce(beta.conj() * emod(s0, na));
}

} // namespace sesq
