#include "sesquipair/gm.hpp"

namespace sesq {

namespace {

Fe pow_signed(const Fe &x, i64 e) {
    return x.pow(e);
}

} // namespace

GmElement gm_pow(const GmElement &u, const QuadInt &beta) {
    const ActionMatrix m = action_matrix(beta);
    return GmElement(pow_signed(u.g0, m.a) * pow_signed(u.g1, m.b),
                     pow_signed(u.g0, m.c) * pow_signed(u.g1, m.d));
}

GmElement gm_conj(const GmElement &u, const QuadOrder &ord) {
    return GmElement(u.g0 * u.g1.pow(ord.t), u.g1.inv());
}

std::pair<u64, u64> gm_exponents(const GmElement &u, const Fe &h) {
    const u64 n = h.q - 1;
    try {
        return {discrete_log(h, u.g0, n), discrete_log(h, u.g1, n)};
    } catch (const NotInSubgroup &) {
        throw DlogFailure("component outside the generator's span");
    }
}

bool equal_mod_alpha_powers(const GmElement &u, const GmElement &v,
                            const QuadInt &alpha, const Fe &h) {
    const GmElement w = u * v.inv();
    const auto [e0, e1] = gm_exponents(w, h);
    const i64 m = static_cast<i64>(h.q - 1);
    const ActionMatrix am = action_matrix(alpha);
    const Hnf2 H = hnf_of_columns({{am.a, am.c}, {am.b, am.d}, {m, 0}, {0, m}});
    i64 x = static_cast<i64>(e0), y = static_cast<i64>(e1);
    if (y % H.d1 != 0)
        return false;
    const i64 k = y / H.d1;
    x -= k * H.c01;
    return x % H.d0 == 0;
}

QuadInt reduced_form(const GmElement &u, u64 n, const QuadInt &alpha, const Fe &h) {
    const u64 q = h.q;
    if (n == 0 || (q - 1) % n != 0)
        throw NotRootOfUnity("n does not divide q-1");
    const i64 na = alpha.norm();
    if (!(na == static_cast<i64>(n) || (alpha.y == 0 && alpha.x != 0 &&
                                        static_cast<u64>(alpha.x < 0 ? -alpha.x : alpha.x) == n)))
        throw Error("reduction level does not match the modulus");
    const Fe g = h.pow(static_cast<i64>((q - 1) / n));
    const Fe r0 = u.g0.pow(static_cast<i64>((q - 1) / n));
    const Fe r1 = u.g1.pow(static_cast<i64>((q - 1) / n));
    u64 x, y;
    try {
        x = discrete_log(g, r0, n);
        y = discrete_log(g, r1, n);
    } catch (const NotInSubgroup &) {
        throw DlogFailure("reduced component outside mu_n");
    }
    const ResidueRing ring(alpha);
    return ring.reduce(QuadInt(static_cast<i64>(x), static_cast<i64>(y), alpha.ord));
}

std::string PairingValue::exponent_string(const Fe &h) const {
    const auto [e0, e1] = gm_exponents(raw, h);
    return "h^{" + QuadInt(static_cast<i64>(e0), static_cast<i64>(e1), alpha.ord).str() + "}";
}

std::string PairingValue::reduced_string() const {
    if (!reduced)
        return "-";
    return "g^{" + reduced->str() + "}";
}

bool pairing_values_equal(const PairingValue &a, const PairingValue &b, const Fe &h) {
    if (a.alpha != b.alpha)
        return false;
    if (a.alpha.is_zero())
        return a.raw == b.raw;
    return equal_mod_alpha_powers(a.raw, b.raw, a.alpha, h);
}

} // namespace sesq
