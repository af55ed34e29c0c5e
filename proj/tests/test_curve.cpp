#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sesquipair/curve.hpp"

using namespace sesq;

namespace {

struct F401 {
    PrimeField F{401};
    Curve E{Fe(400, 401), Fe(0, 401)}; // y^2 = x^3 - x
    CMEndo endo = CMEndo::j1728(E, Fe(20, 401));
    Point P = E.point(Fe(204, 401), Fe(283, 401));
    Point Q = E.point(Fe(56, 401), Fe(137, 401));
    QuadInt qi(i64 x, i64 y) const { return QuadInt(x, y, endo.order()); }
};

} // namespace

TEST_CASE("point construction and the group law") {
    F401 f;
    CHECK_THROWS_AS(f.E.point(Fe(1, 401), Fe(1, 401)), OffCurve);
    CHECK(f.P + f.E.infinity() == f.P);
    CHECK(f.E.infinity() + f.P == f.P);
    CHECK(f.P - f.P == f.E.infinity());
    CHECK(scalar_mul(f.P, 20).is_infinity()); // E(F_q) = (Z/20)^2
    CHECK(scalar_mul(f.Q, 20).is_infinity());
    CHECK(!scalar_mul(f.P, 4).is_infinity());

    Curve other(Fe(0, 401), Fe(3, 401));
    Point R = *other.lift_x(Fe(1, 401));
    CHECK_THROWS_AS(f.P + R, CurveMismatch);
    CHECK_THROWS_AS(Curve(Fe(0, 5), Fe(0, 5)), Error); // singular
}

TEST_CASE("group law is commutative and associative on random triples") {
    F401 f;
    auto pts = enumerate_group(f.E);
    std::mt19937_64 gen(3);
    for (int t = 0; t < 300; ++t) {
        const Point &A = pts[gen() % pts.size()];
        const Point &B = pts[gen() % pts.size()];
        const Point &C = pts[gen() % pts.size()];
        CHECK(A + B == B + A);
        CHECK((A + B) + C == A + (B + C));
    }
}

TEST_CASE("CM endomorphism on the worked example") {
    F401 f;
    CHECK(f.endo.tau(f.P) == f.E.point(Fe(197, 401), Fe(46, 401)));  // [i]P
    CHECK(f.endo.tau(f.Q) == f.E.point(Fe(345, 401), Fe(334, 401))); // [i]Q

    // [2]P = [i]P since [conj(alpha)]P = O for alpha = 1-2i
    CHECK(scalar_mul(f.P, 2) == f.endo.tau(f.P));

    CHECK(apply_r(f.qi(0, 1), f.P, f.endo) == f.E.point(Fe(197, 401), Fe(46, 401)));
    CHECK(apply_r(f.qi(1, 0), f.P, f.endo) == f.P);
    CHECK(apply_r(f.qi(1, 2), f.P, f.endo).is_infinity());  // P in E[conj(alpha)]
    CHECK(apply_r(f.qi(1, -2), f.Q, f.endo).is_infinity()); // Q in E[alpha]

    // wrong root of -1 is rejected
    CHECK_THROWS_AS(CMEndo::j1728(f.E, Fe(21, 401)), Error);
    // the other root gives the conjugate endomorphism, still valid
    CHECK_NOTHROW(CMEndo::j1728(f.E, Fe(381, 401)));
}

TEST_CASE("apply_r is a module action") {
    F401 f;
    auto pts = enumerate_group(f.E);
    std::mt19937_64 gen(5);
    for (int t = 0; t < 200; ++t) {
        const Point &A = pts[gen() % pts.size()];
        QuadInt b = f.qi(static_cast<i64>(gen() % 9) - 4, static_cast<i64>(gen() % 9) - 4);
        QuadInt c = f.qi(static_cast<i64>(gen() % 9) - 4, static_cast<i64>(gen() % 9) - 4);
        CHECK(apply_r(b + c, A, f.endo) == apply_r(b, A, f.endo) + apply_r(c, A, f.endo));
        CHECK(apply_r(b * c, A, f.endo) == apply_r(b, apply_r(c, A, f.endo), f.endo));
    }
    // [i]o[i] = [-1]
    for (const Point &A : pts)
        CHECK(f.endo.tau(f.endo.tau(A)) == -A);
}

TEST_CASE("group enumeration") {
    F401 f;
    auto pts = enumerate_group(f.E);
    CHECK(pts.size() == 400);
    CHECK(pts.front().is_infinity());

    // brute-force double loop over F_5
    PrimeField F5(5);
    Curve E5(Fe(0, 5), Fe(1, 5));
    size_t count = 1;
    for (u64 x = 0; x < 5; ++x)
        for (u64 y = 0; y < 5; ++y)
            if ((y * y) % 5 == (x * x * x + 1) % 5)
                ++count;
    CHECK(enumerate_group(E5).size() == count);

    PrimeField toobig(2147483659ull);
    Curve Etoobig(Fe(1, toobig.modulus()), Fe(1, toobig.modulus()));
    CHECK_THROWS_AS(enumerate_group(Etoobig), ScaleExceeded);
}

TEST_CASE("kernels") {
    F401 f;
    auto ker = kernel_of(f.qi(1, 2), f.E, f.endo);
    CHECK(ker.size() == 5);
    bool has_P = false;
    for (const Point &A : ker)
        has_P = has_P || A == f.P;
    CHECK(has_P);

    CHECK(kernel_of(f.qi(1, 0), f.E, f.endo).size() == 1);
    CHECK(kernel_of(f.qi(1, 0), f.E, f.endo)[0].is_infinity());
    CHECK(kernel_of(f.qi(2, 0), f.E, f.endo).size() == 4); // full rational 2-torsion
    CHECK(kernel_of(f.qi(1, -2), f.E, f.endo).size() == 5);
    CHECK(kernel_of(f.qi(5, 0), f.E, f.endo).size() == 25);
}

TEST_CASE("coset representatives") {
    F401 f;
    auto reps = coset_reps_mod(f.qi(1, -2), f.E, f.endo);
    CHECK(reps.size() == 5);
    // Q generates E/[alpha]E: Q is not an [alpha]-multiple
    auto img = image_of(f.qi(1, -2), f.E, f.endo);
    CHECK(img.size() == 80);
    CHECK(!std::binary_search(img.begin(), img.end(), f.Q, PointCmp{}));

    CHECK(coset_reps_mod(f.qi(1, 0), f.E, f.endo).size() == 1);
    CHECK(coset_reps_mod(f.qi(2, 0), f.E, f.endo).size() == 4);

    // |ker| * |im| = |E| for rational kernels
    for (auto beta : {f.qi(1, -2), f.qi(2, 0), f.qi(5, 0), f.qi(2, 1)}) {
        CHECK(kernel_of(beta, f.E, f.endo).size() * image_of(beta, f.E, f.endo).size() == 400);
    }
}

TEST_CASE("minimal polynomial spot checks reject a bogus endomorphism") {
    F401 f;
    auto bogus = [](const Point &P) -> Point {
        if (P.is_infinity())
            return P;
        return scalar_mul(P, 3);
    };
    CHECK_THROWS_AS(CMEndo::custom(f.E, QuadOrder(0, 1), bogus), Error);
    // the same map as the builtin, presented as a custom table, passes
    auto good = [&](const Point &P) -> Point {
        if (P.is_infinity())
            return P;
        return P.E.point(-P.x, Fe(20, 401) * P.y);
    };
    CHECK_NOTHROW(CMEndo::custom(f.E, QuadOrder(0, 1), good));
}

TEST_CASE("j0 endomorphism on the second instance") {
    PrimeField F(421);
    Curve E(Fe(0, 421), Fe(9, 421));
    CMEndo endo = CMEndo::j0(E, Fe(20, 421));
    CHECK(enumerate_group(E).size() == 441);
    CHECK(kernel_of(QuadInt(21, 0, endo.order()), E, endo).size() == 441); // (Z/21)^2
    CHECK(kernel_of(QuadInt(2, -1, endo.order()), E, endo).size() == 7);
    CHECK(kernel_of(QuadInt(3, 1, endo.order()), E, endo).size() == 7);
    CHECK(coset_reps_mod(QuadInt(3, 1, endo.order()), E, endo).size() == 7);
    CHECK_THROWS_AS(CMEndo::j0(E, Fe(19, 421)), Error);
    // zeta = 1 rejected even though 1^3 = 1
    CHECK_THROWS_AS(CMEndo::j0(E, Fe(1, 421)), Error);
}
