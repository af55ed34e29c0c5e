#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sesquipair/field.hpp"

using namespace sesq;

TEST_CASE("field arithmetic basics") {
    PrimeField F(401);
    CHECK((F(3) * F(3)).v == 9);
    CHECK(F(3).pow(80).v == 72);      // g = 72 = h^80
    CHECK((F(20) * F(20)).v == 400);  // i^2 = -1 with i = 20
    CHECK((F(20) * F(20)) == -F(1));
    CHECK(F(-1).v == 400);
    CHECK((F(7) / F(7)).v == 1);
    CHECK(F(5).pow(-1) == F(5).inv());
}

TEST_CASE("inverse properties") {
    PrimeField F(401);
    for (u64 v = 1; v < 401; ++v) {
        Fe x = F(static_cast<i64>(v));
        CHECK((x * x.inv()).v == 1);
        CHECK(x.inv().inv() == x);
    }
    CHECK_THROWS_AS(F(0).inv(), DivisionByZero);
    CHECK_THROWS_AS(F(1) / F(0), DivisionByZero);
}

TEST_CASE("cross-field arithmetic is rejected") {
    PrimeField F(401), G(5);
    CHECK_THROWS_AS(F(1) + G(1), FieldMismatch);
    CHECK_THROWS_AS(F(2) * G(3), FieldMismatch);
    CHECK(F(1) != G(1));
}

TEST_CASE("prime field construction") {
    CHECK_THROWS_AS(PrimeField(400), Error);
    CHECK_THROWS_AS(PrimeField(2), Error); // even
    CHECK_NOTHROW(PrimeField(401));
    CHECK_NOTHROW(PrimeField((1ull << 61) - 1));
    CHECK_THROWS_AS(PrimeField((1ull << 61) - 3), Error);
}

TEST_CASE("multiplicative generators") {
    CHECK(multiplicative_generator(PrimeField(401)).v == 3);
    CHECK(multiplicative_generator(PrimeField(5)).v == 2);
    CHECK(multiplicative_generator(PrimeField(7)).v == 3); // 2 has order 3 mod 7
    CHECK(multiplicative_generator(PrimeField(421)).v == 2);

    // generator order checks against the factorization of q-1
    for (u64 q : {401ull, 421ull, 13ull}) {
        PrimeField F(q);
        Fe g = multiplicative_generator(F);
        CHECK(g.pow(static_cast<i64>(q - 1)).v == 1);
        for (u64 ell : prime_factors(q - 1))
            CHECK(g.pow(static_cast<i64>((q - 1) / ell)).v != 1);
    }
}

TEST_CASE("discrete logs") {
    PrimeField F(401);
    Fe g72 = F(72);
    CHECK(discrete_log(g72, F(1), 5) == 0);
    CHECK(discrete_log(F(3), F(72), 400) == 80);
    CHECK(discrete_log(g72, g72.pow(3), 5) == 3);

    // left inverse of exponentiation on <g>
    for (u64 e = 0; e < 5; ++e)
        CHECK(discrete_log(g72, g72.pow(static_cast<i64>(e)), 5) == e);
    for (u64 e = 0; e < 400; e += 7)
        CHECK(discrete_log(F(3), F(3).pow(static_cast<i64>(e)), 400) == e);

    // 2 is a QR mod 401? order of 20: 20^2=-1 so order 4; 3 not in <72>
    CHECK_THROWS_AS(discrete_log(g72, F(3), 5), NotInSubgroup);
}

TEST_CASE("sqrt mod p") {
    PrimeField F(401);
    for (u64 v = 0; v < 401; ++v) {
        Fe x = F(static_cast<i64>(v));
        Fe sq = x * x;
        Fe r;
        REQUIRE(sqrt_mod(sq, r));
        CHECK(r * r == sq);
    }
    Fe r;
    int residues = 0;
    for (u64 v = 1; v < 401; ++v)
        if (sqrt_mod(F(static_cast<i64>(v)), r))
            ++residues;
    CHECK(residues == 200);
}

TEST_CASE("factorization") {
    CHECK(prime_factors(400) == std::vector<u64>{2, 5});
    CHECK(prime_factors(420) == std::vector<u64>{2, 3, 5, 7});
}
