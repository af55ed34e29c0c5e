#pragma once

#include <cstdint>
#include <vector>

#include "sesquipair/errors.hpp"

namespace sesq {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

bool is_prime(u64 n);

// Prime factorization by trial division; throws FactorizationFailure if a
// composite cofactor survives the trial bound.
std::vector<u64> prime_factors(u64 n);

u64 mulmod(u64 a, u64 b, u64 q);
u64 powmod(u64 a, u64 e, u64 q);

// Element of F_q.  Carries its modulus so cross-field arithmetic is rejected.
struct Fe {
    u64 v = 0;
    u64 q = 0;

    Fe() = default;
    Fe(u64 value, u64 modulus) : v(value % modulus), q(modulus) {}

    bool is_zero() const { return v == 0; }

    Fe operator+(const Fe &o) const { check(o); return Fe(v + o.v >= q ? v + o.v - q : v + o.v, q, raw{}); }
    Fe operator-(const Fe &o) const { check(o); return Fe(v >= o.v ? v - o.v : v + q - o.v, q, raw{}); }
    Fe operator-() const { return Fe(v == 0 ? 0 : q - v, q, raw{}); }
    Fe operator*(const Fe &o) const { check(o); return Fe(mulmod(v, o.v, q), q, raw{}); }
    Fe operator/(const Fe &o) const { return *this * o.inv(); }

    Fe &operator+=(const Fe &o) { return *this = *this + o; }
    Fe &operator-=(const Fe &o) { return *this = *this - o; }
    Fe &operator*=(const Fe &o) { return *this = *this * o; }
    Fe &operator/=(const Fe &o) { return *this = *this / o; }

    Fe inv() const;
    Fe pow(i64 e) const;

    bool operator==(const Fe &o) const { return v == o.v && q == o.q; }
    bool operator!=(const Fe &o) const { return !(*this == o); }

private:
    struct raw {};
    Fe(u64 value, u64 modulus, raw) : v(value), q(modulus) {}
    void check(const Fe &o) const {
        if (q != o.q)
            throw FieldMismatch("elements of distinct fields");
    }
};

// F_q for odd prime q (primality checked at construction).
class PrimeField {
public:
    explicit PrimeField(u64 q);

    u64 modulus() const { return q_; }
    Fe operator()(i64 x) const {
        i64 r = x % static_cast<i64>(q_);
        if (r < 0)
            r += static_cast<i64>(q_);
        return Fe(static_cast<u64>(r), q_);
    }
    Fe zero() const { return Fe(0, q_); }
    Fe one() const { return Fe(1, q_); }

    bool operator==(const PrimeField &o) const { return q_ == o.q_; }

private:
    u64 q_;
};

// Smallest positive integer generating F_q^*, verified against the
// factorization of q-1.
Fe multiplicative_generator(const PrimeField &F);

// e in [0,n) with g^e = x, where g has exact multiplicative order n.
// Baby-step/giant-step.  Throws NotInSubgroup if no exponent exists.
u64 discrete_log(const Fe &g, const Fe &x, u64 n);

// Square root mod q (Tonelli-Shanks); empty if x is a non-residue.
bool sqrt_mod(const Fe &x, Fe &out);

} // namespace sesq
