#include "sesquipair/field.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace sesq {

u64 mulmod(u64 a, u64 b, u64 q) {
    return static_cast<u64>((u128)a * b % q);
}

u64 powmod(u64 a, u64 e, u64 q) {
    u64 r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    constexpr u64 kTrialBound = 10'000'000;
    std::vector<u64> out;
    for (u64 p = 2; p <= kTrialBound && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1) {
        if (!is_prime(n))
            throw FactorizationFailure("composite cofactor beyond trial division bound");
        out.push_back(n);
    }
    return out;
}

Fe Fe::inv() const {
    if (v == 0)
        throw DivisionByZero("inverse of zero");
    return Fe(powmod(v, q - 2, q), q);
}

Fe Fe::pow(i64 e) const {
    if (e < 0)
        return inv().pow(-e);
    return Fe(powmod(v, static_cast<u64>(e), q), q);
}

PrimeField::PrimeField(u64 q) : q_(q) {
    if (!is_prime(q))
        throw Error("modulus is not prime");
    if (q % 2 == 0)
        throw Error("modulus must be odd");
}

Fe multiplicative_generator(const PrimeField &F) {
    const u64 q = F.modulus();
    const auto ells = prime_factors(q - 1);
    for (u64 g = 2; g < q; ++g) {
        bool ok = true;
        for (u64 ell : ells) {
            if (powmod(g, (q - 1) / ell, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return Fe(g, q);
    }
    throw Error("no generator found"); // unreachable for prime q
}

u64 discrete_log(const Fe &g, const Fe &x, u64 n) {
    if (g.q != x.q)
        throw FieldMismatch("dlog across fields");
    const u64 q = g.q;
    if (powmod(g.v, n, q) != 1)
        throw DlogFailure("base does not have the stated order");
    const u64 m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(n))));
    std::unordered_map<u64, u64> baby;
    baby.reserve(m);
    u64 cur = 1;
    for (u64 j = 0; j < m; ++j) {
        baby.emplace(cur, j);
        cur = mulmod(cur, g.v, q);
    }
    const u64 giant = powmod(g.inv().v, m, q); // g^{-m}
    u64 y = x.v;
    for (u64 i = 0; i <= m; ++i) {
        auto it = baby.find(y);
        if (it != baby.end()) {
            u64 e = (i * m + it->second) % n;
            if (powmod(g.v, e, q) == x.v)
                return e;
        }
        y = mulmod(y, giant, q);
    }
    throw NotInSubgroup("element not in the subgroup generated by base");
}

bool sqrt_mod(const Fe &x, Fe &out) {
    const u64 q = x.q;
    if (x.v == 0) {
        out = Fe(0, q);
        return true;
    }
    if (powmod(x.v, (q - 1) / 2, q) != 1)
        return false;
    if (q % 4 == 3) {
        out = Fe(powmod(x.v, (q + 1) / 4, q), q);
        return true;
    }
    // Tonelli-Shanks
    u64 s = 0, d = q - 1;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (q - 1) / 2, q) == 1)
        ++z;
    u64 m = s;
    u64 c = powmod(z, d, q);
    u64 t = powmod(x.v, d, q);
    u64 r = powmod(x.v, (d + 1) / 2, q);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, q);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j)
            b = mulmod(b, b, q);
        m = i;
        c = mulmod(b, b, q);
        t = mulmod(t, c, q);
        r = mulmod(r, b, q);
    }
    out = Fe(r, q);
    return true;
}

} // namespace sesq
