#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sesquipair/pairings.hpp"

using namespace sesq;

namespace {

struct F401 {
    Curve E{Fe(400, 401), Fe(0, 401)};
    CMEndo endo = CMEndo::j1728(E, Fe(20, 401));
    PairingContext ctx{E, endo, 1};
    Point P = E.point(Fe(204, 401), Fe(283, 401));
    Point Q = E.point(Fe(56, 401), Fe(137, 401));
    Point O = E.infinity();
    QuadInt alpha = QuadInt(1, -2, endo.order());
    QuadInt qi(i64 x, i64 y) const { return QuadInt(x, y, endo.order()); }

    RDivisor point_class(const Point &A) const {
        RDivisor D;
        D.add_term(A, qi(1, 0)).add_term(O, qi(-1, 0));
        return D;
    }
};

struct F421 {
    Curve E{Fe(0, 421), Fe(9, 421)};
    CMEndo endo = CMEndo::j0(E, Fe(20, 421));
    PairingContext ctx{E, endo, 1};
    Point P2 = E.point(Fe(23, 421), Fe(202, 421));
    Point S2 = E.point(Fe(2, 421), Fe(168, 421));
    QuadInt alpha2 = QuadInt(3, 1, endo.order());
    QuadInt qi(i64 x, i64 y) const { return QuadInt(x, y, endo.order()); }
};

} // namespace

TEST_CASE("classical reduced Tate values from the worked example") {
    F401 f;
    const Fe g(72, 401);
    Point P2i = apply_r(f.qi(0, 2), f.P, f.endo);
    Point Q2i = apply_r(f.qi(0, 2), f.Q, f.endo);
    CHECK(tate_classical(f.P, f.Q, 5, f.ctx).reduced == g);
    CHECK(tate_classical(P2i, f.Q, 5, f.ctx).reduced == g.pow(4));
    CHECK(tate_classical(f.P, f.P, 5, f.ctx).reduced == Fe(1, 401));
    CHECK(tate_classical(P2i, f.P, 5, f.ctx).reduced == Fe(1, 401));
    CHECK(tate_classical(f.Q, f.Q, 5, f.ctx).reduced == Fe(1, 401));
    CHECK(tate_classical(Q2i, f.Q, 5, f.ctx).reduced == Fe(1, 401));

    CHECK(tate_classical(f.P, f.O, 5, f.ctx).reduced == Fe(1, 401));
    CHECK_THROWS_AS(tate_classical(f.Q + f.E.point(Fe(0, 401), Fe(0, 401)), f.Q, 5, f.ctx), NotInKernel);
}

TEST_CASE("classical Weil pairing properties") {
    F401 f;
    CHECK(weil_classical(f.P, f.P, 5, f.ctx) == Fe(1, 401)); // alternating
    CHECK(weil_classical(f.Q, f.Q, 5, f.ctx) == Fe(1, 401));
    Fe e = weil_classical(f.P, f.Q, 5, f.ctx);
    Fe esym = weil_classical(f.Q, f.P, 5, f.ctx);
    CHECK(e * esym == Fe(1, 401)); // skew-symmetry
    CHECK(e.pow(5) == Fe(1, 401));
    CHECK(e != Fe(1, 401)); // exact order 5 on a basis

    // bilinearity spot check
    std::mt19937_64 gen(3);
    const auto &tor = f.ctx.kernel(f.qi(5, 0));
    for (int t = 0; t < 20; ++t) {
        const Point &A = tor[gen() % tor.size()];
        const Point &B = tor[gen() % tor.size()];
        const Point &C = tor[gen() % tor.size()];
        CHECK(weil_classical(A + B, C, 5, f.ctx) ==
              weil_classical(A, C, 5, f.ctx) * weil_classical(B, C, 5, f.ctx));
    }
}

TEST_CASE("t_hat reproduces both auxiliary points of the worked example") {
    F401 f;
    const Fe h(3, 401);
    Point S00 = f.E.point(Fe(0, 401), Fe(0, 401));
    PairingValue v = t_hat(f.P, f.Q, f.alpha, f.ctx, S00);
    CHECK(v.raw == GmElement(Fe(175, 401), Fe(396, 401))); // 175 * (-5)^tau
    auto [e0, e1] = gm_exponents(v.raw, h);
    CHECK(e0 == 158);
    CHECK(e1 == 248);
    REQUIRE(v.reduced.has_value());
    CHECK(*v.reduced == f.qi(2, 0));

    Point S10 = f.E.point(Fe(1, 401), Fe(0, 401));
    PairingValue w = t_hat(f.P, f.Q, f.alpha, f.ctx, S10);
    CHECK(w.raw == GmElement(Fe(186, 401), Fe(144, 401)));
    auto [w0, w1] = gm_exponents(w.raw, h);
    CHECK(w0 == 134);
    CHECK(w1 == 106);
    CHECK(*w.reduced == f.qi(2, 0));

    // same coset even though the raw values differ
    CHECK(equal_mod_alpha_powers(v.raw, w.raw, f.alpha, h));

    // identity cases and kernel misuse
    CHECK(t_hat(f.P, f.O, f.alpha, f.ctx).reduced == f.qi(0, 0));
    CHECK_THROWS_AS(t_hat(f.Q, f.P, f.alpha, f.ctx), NotInKernel); // Q not in E[conj(alpha)]
}

TEST_CASE("t_hat is independent of the auxiliary point across many draws") {
    F401 f;
    const Fe h(3, 401);
    PairingValue base = t_hat(f.P, f.Q, f.alpha, f.ctx);
    int checked = 0;
    for (const Point &S : f.ctx.group()) {
        if (S.is_infinity())
            continue;
        PairingValue v;
        try {
            v = t_hat(f.P, f.Q, f.alpha, f.ctx, S);
        } catch (const Error &) {
            continue; // support collision for this S
        }
        CHECK(equal_mod_alpha_powers(v.raw, base.raw, f.alpha, h));
        CHECK(*v.reduced == f.qi(2, 0));
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("t_hat_via_tn reproduces method 2") {
    F401 f;
    const Fe g(72, 401);
    PairingValue v = t_hat_via_tn(f.P, f.Q, 5, f.ctx);
    // T-hat_5(P,Q) = g^{2-i}: exponent vector (2,4) mod 5
    REQUIRE(v.reduced.has_value());
    CHECK(*v.reduced == f.qi(2, 4));
    // reducing the exponent 2-i modulo alpha gives 4
    CHECK(reduced_form(v.raw, 5, f.alpha, f.ctx.generator()) == f.qi(4, 0));

    CHECK(*t_hat_via_tn(f.P, f.P, 5, f.ctx).reduced == f.qi(0, 0));
    CHECK(*t_hat_via_tn(f.Q, f.Q, 5, f.ctx).reduced == f.qi(0, 0));

    // conversion: T-hat_alpha = (T-hat_5)^{conj(alpha)^{-1}}, residue 2
    ResidueRing ring(f.alpha);
    QuadInt inv_ca = inverse_mod(f.alpha.conj(), ring);
    CHECK(inv_ca == f.qi(3, 0));
    CHECK(ring.reduce(f.qi(2, -1) * inv_ca) == f.qi(2, 0));

    // Q = O with trace-zero tau: identity
    CHECK(*t_hat_via_tn(f.P, f.O, 5, f.ctx).reduced == f.qi(0, 0));
}

TEST_CASE("generator form of the worked example") {
    F401 f;
    Point S = f.P + f.Q;
    CHECK(S == f.E.point(Fe(361, 401), Fe(272, 401)));
    CHECK(apply_r(f.qi(3, 4), S, f.endo) == f.P);
    CHECK(apply_r(f.qi(3, 1), S, f.endo) == f.Q);

    CHECK(*t_hat_via_tn(S, S, 5, f.ctx).reduced == f.qi(4, 0));
    CHECK(*t_hat_via_tn(S, f.P, 5, f.ctx).reduced == f.qi(2, 1)); // g^{2-4i}
    CHECK(*t_hat_via_tn(S, f.Q, 5, f.ctx).reduced == f.qi(2, 4)); // g^{2-i}

    // sesquilinear expansion: T-hat_5([3+4i]S, [3+i]S) = T-hat_5(S,S)^{(3-4i)(3+i)}
    const Fe h = f.ctx.generator();
    GmElement lhs = t_hat_via_tn(f.P, f.Q, 5, f.ctx).raw;
    GmElement rhs = gm_pow(t_hat_via_tn(S, S, 5, f.ctx).raw, f.qi(3, 4).conj() * f.qi(3, 1));
    CHECK(equal_mod_alpha_powers(lhs, rhs, f.qi(5, 0), h));
    // and the common residue modulo alpha is g^4
    CHECK(reduced_form(lhs, 5, f.alpha, h) == f.qi(4, 0));
    CHECK(reduced_form(rhs, 5, f.alpha, h) == f.qi(4, 0));
}

TEST_CASE("t_hat and t_hat_via_tn agree for integer moduli") {
    F401 f;
    const Fe h = f.ctx.generator();
    std::mt19937_64 gen(5);
    for (i64 n : {2, 4, 5, 10, 20}) {
        const auto &tor = f.ctx.kernel(f.qi(n, 0));
        for (int t = 0; t < 15; ++t) {
            const Point &A = tor[gen() % tor.size()];
            const Point &B = tor[gen() % tor.size()];
            GmElement direct = t_hat(A, B, f.qi(n, 0), f.ctx).raw;
            GmElement via = t_hat_via_tn(A, B, n, f.ctx).raw;
            CHECK(equal_mod_alpha_powers(direct, via, f.qi(n, 0), h));
        }
    }
}

TEST_CASE("norm relation") {
    F401 f;
    CHECK(norm_relation_check(f.P, f.Q, f.alpha, f.ctx));
    CHECK(norm_relation_check(f.P, f.P, f.alpha, f.ctx));
    CHECK(norm_relation_check(f.O, f.Q, f.qi(1, 0), f.ctx)); // alpha = 1, trivial
    std::mt19937_64 gen(7);
    const auto &ker = f.ctx.kernel(f.alpha.conj());
    for (int t = 0; t < 25; ++t) {
        const Point &A = ker[gen() % ker.size()];
        const Point &B = f.ctx.group()[gen() % f.ctx.group().size()];
        CHECK(norm_relation_check(A, B, f.alpha, f.ctx));
    }
    // also for a different alpha of norm 5
    const auto &ker2 = f.ctx.kernel(f.qi(2, 1).conj());
    for (int t = 0; t < 10; ++t) {
        const Point &A = ker2[gen() % ker2.size()];
        const Point &B = f.ctx.group()[gen() % f.ctx.group().size()];
        CHECK(norm_relation_check(A, B, f.qi(2, 1), f.ctx));
    }
}

TEST_CASE("t_alpha on divisors: identities and the product formula") {
    F401 f;
    const Fe h = f.ctx.generator();
    // T_alpha(0, D_Q) is the identity coset
    RDivisor zero;
    PairingValue v = t_alpha(zero, f.point_class(f.Q), f.alpha, f.ctx);
    CHECK(equal_mod_alpha_powers(v.raw, GmElement::one(401), f.alpha.conj(), h));

    // eta(Q) lies in Pic[conj(alpha)] and pairs sesquilinearly
    RDivisor DP = eta(f.Q, f.endo); // Q in E[alpha] => eta(Q) in Pic[conj(alpha)]
    PairingValue w = t_alpha(DP, f.point_class(f.P), f.alpha, f.ctx);
    CHECK(w.alpha == f.alpha.conj());

    // misuse: eta(P) is alpha-torsion, not conj(alpha)-torsion
    CHECK_THROWS_AS(t_alpha(eta(f.P, f.endo), f.point_class(f.Q), f.alpha, f.ctx), NotInKernel);
}

TEST_CASE("w_alpha and w_hat basics") {
    F401 f;
    const u64 q = 401;
    // W_alpha(D_P, 0) = W_alpha(0, D_Q) = 1
    RDivisor zero;
    CHECK(w_alpha(zero, zero, f.alpha, f.ctx).raw == GmElement::one(q));

    PairingValue v = w_hat(f.P, f.Q, f.alpha, f.ctx);
    CHECK(gm_pow(v.raw, f.alpha) == GmElement::one(q)); // exact alpha-torsion
    CHECK(v.raw != GmElement::one(q));                  // non-degenerate on the basis

    // conjugate skew-Hermitianity
    PairingValue sym = w_hat(f.Q, f.P, f.alpha.conj(), f.ctx);
    CHECK(v.raw == gm_conj(sym.raw, f.ctx.order()).inv());

    CHECK(w_hat(f.P, f.O, f.alpha, f.ctx).raw == GmElement::one(q));
    CHECK_THROWS_AS(w_hat(f.P, f.P, f.alpha, f.ctx), NotInKernel); // P not alpha-torsion
}

TEST_CASE("w_hat matches the Weil product formula with alpha = n") {
    F401 f;
    const Fe h = f.ctx.generator();
    const u64 q = 401;
    std::mt19937_64 gen(11);
    const auto &tor = f.ctx.kernel(f.qi(5, 0));
    for (int t = 0; t < 15; ++t) {
        const Point &A = tor[gen() % tor.size()];
        const Point &B = tor[gen() % tor.size()];
        GmElement lhs = w_hat(A, B, f.qi(5, 0), f.ctx).raw;
        // e_n(A,B)^{2N(tau)} e_n([-tau]A,B)^{Tr(tau)} (e_n([tau-conj tau]A,B))^{tau}
        Fe e1 = weil_classical(A, B, 5, f.ctx);
        Fe e3 = weil_classical(apply_r(f.qi(0, 2), A, f.endo), B, 5, f.ctx);
        GmElement rhs = GmElement(e1.pow(2), Fe(1, q)) * gm_pow(GmElement(e3, Fe(1, q)), f.qi(0, 1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("nondegeneracy scan on the worked example") {
    F401 f;
    ScanReport rep = nondegeneracy_scan(f.alpha, f.ctx);
    CHECK(rep.rows.size() == 5);
    CHECK(rep.cols.size() == 5);
    CHECK(rep.passed());

    // alpha = 1: empty table, vacuous pass
    ScanReport triv = nondegeneracy_scan(f.qi(1, 0), f.ctx);
    CHECK(triv.rows.size() == 1); // only O
    CHECK(triv.passed());

    // hypothesis violations are reported
    CHECK_THROWS_AS(nondegeneracy_scan(f.qi(2, 0), f.ctx), HypothesisViolated); // gcd(4, disc) = 4
    CHECK_THROWS_AS(nondegeneracy_scan(f.qi(3, 0), f.ctx), HypothesisViolated); // mu_9 not in F_401
}

TEST_CASE("property suite passes on the worked example") {
    F401 f;
    SuiteReport rep = property_suite(f.alpha, 12, f.ctx);
    for (const auto &law : rep.laws) {
        INFO(law.name, ": ", law.first_failure);
        CHECK(law.failures == 0);
    }
    CHECK(rep.all_passed());
}

TEST_CASE("second instance: frozen goldens from the independent oracle") {
    F421 f;
    const Fe h = f.ctx.generator();
    CHECK(h.v == 2);
    const QuadInt ca2 = f.alpha2.conj();
    CHECK(ca2 == f.qi(2, -1));

    // t_hat_via_tn reduced exponent vectors (frozen)
    CHECK(*t_hat_via_tn(f.P2, f.S2, 7, f.ctx).reduced == f.qi(6, 4));
    CHECK(*t_hat_via_tn(f.P2, f.P2, 7, f.ctx).reduced == f.qi(0, 0));
    CHECK(*t_hat_via_tn(f.S2, f.S2, 21, f.ctx).reduced == f.qi(16, 8));
    CHECK(*t_hat_via_tn(f.P2, f.S2, 21, f.ctx).reduced == f.qi(18, 12));

    // direct Algorithm value reduces to the residue 3 in R/alpha2 R
    PairingValue v = t_hat(f.P2, f.S2, f.alpha2, f.ctx);
    REQUIRE(v.reduced.has_value());
    CHECK(*v.reduced == f.qi(3, 0));

    // norm relation and cross-oracle equality hold here too
    CHECK(norm_relation_check(f.P2, f.S2, f.alpha2, f.ctx));
    GmElement direct = t_hat(f.P2, f.S2, f.qi(7, 0), f.ctx).raw;
    GmElement via = t_hat_via_tn(f.P2, f.S2, 7, f.ctx).raw;
    CHECK(equal_mod_alpha_powers(direct, via, f.qi(7, 0), h));
}

TEST_CASE("second instance: scan and suite") {
    F421 f;
    ScanReport rep = nondegeneracy_scan(f.alpha2, f.ctx);
    CHECK(rep.rows.size() == 7);
    CHECK(rep.cols.size() == 7);
    CHECK(rep.passed());

    // norm 3 shares a factor with the discriminant of Z[zeta_3]
    CHECK_THROWS_AS(nondegeneracy_scan(f.qi(1, -1), f.ctx), HypothesisViolated);

    SuiteReport suite = property_suite(f.alpha2, 8, f.ctx);
    for (const auto &law : suite.laws) {
        INFO(law.name, ": ", law.first_failure);
        CHECK(law.failures == 0);
    }
}

TEST_CASE("pairing value comparison respects the modulus") {
    F401 f;
    PairingValue a = t_hat(f.P, f.Q, f.alpha, f.ctx);
    PairingValue b = t_hat(f.P, f.Q, f.qi(5, 0), f.ctx);
    CHECK(!pairing_values_equal(a, b, f.ctx.generator())); // cross-modulus
    CHECK(pairing_values_equal(a, a, f.ctx.generator()));
}
