#pragma once

#include <optional>
#include <string>

#include "sesquipair/quad.hpp"

namespace sesq {

// Element g0^{(x)1} * g1^{(x)tau} of G_m^{(x)R}; both components nonzero.
struct GmElement {
    Fe g0, g1;

    GmElement() = default;
    GmElement(Fe a, Fe b) : g0(a), g1(b) {
        if (a.q != b.q)
            throw FieldMismatch("components from distinct fields");
        if (a.is_zero() || b.is_zero())
            throw Error("G_m components must be nonzero");
    }

    static GmElement one(u64 q) { return GmElement(Fe(1, q), Fe(1, q)); }

    GmElement operator*(const GmElement &o) const { return GmElement(g0 * o.g0, g1 * o.g1); }
    GmElement inv() const { return GmElement(g0.inv(), g1.inv()); }

    bool operator==(const GmElement &o) const { return g0 == o.g0 && g1 == o.g1; }
    bool operator!=(const GmElement &o) const { return !(*this == o); }
};

// Left action u -> u^beta: with (a,b,c,d) = action_matrix(beta),
// (g0, g1) -> (g0^a g1^b, g0^c g1^d).
GmElement gm_pow(const GmElement &u, const QuadInt &beta);

// conj(g0^{1} g1^{tau}) = g0^{1} g1^{conj(tau)} = (g0 g1^t, g1^{-1}).
GmElement gm_conj(const GmElement &u, const QuadOrder &ord);

// Decides u = v modulo (G_m^{(x)R})^{R alpha}: componentwise discrete logs
// of u/v base h, then membership of the exponent vector in the lattice
// spanned by the columns of action_matrix(alpha) and (q-1)*I.
bool equal_mod_alpha_powers(const GmElement &u, const GmElement &v,
                            const QuadInt &alpha, const Fe &h);

// Exponent vector (e0, e1) of u base h, i.e. u = (h^e0, h^e1).
std::pair<u64, u64> gm_exponents(const GmElement &u, const Fe &h);

// Final exponentiation by (q-1)/n, discrete log base g = h^{(q-1)/n}
// (order n), reduction of the exponent x + y*tau into R/alpha R.
// Requires n | q-1 and (N(alpha) = n or alpha = n).
QuadInt reduced_form(const GmElement &u, u64 n, const QuadInt &alpha, const Fe &h);

// A pairing output together with the modulus defining its coset group.
// alpha = 0 means the value is exact (Weil type).
struct PairingValue {
    GmElement raw;
    QuadInt alpha;
    std::optional<QuadInt> reduced;

    // display forms used by the CLI and golden tests
    std::string exponent_string(const Fe &h) const; // "h^{x+y*tau}"
    std::string reduced_string() const;             // "g^{r}"
};

bool pairing_values_equal(const PairingValue &a, const PairingValue &b, const Fe &h);

} // namespace sesq
