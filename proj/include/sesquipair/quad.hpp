#pragma once

#include <string>
#include <vector>

#include "sesquipair/field.hpp"

namespace sesq {

// Imaginary quadratic order R = Z[tau] with tau^2 = t*tau - n.
struct QuadOrder {
    i64 t = 0; // trace of tau
    i64 n = 0; // norm of tau

    QuadOrder() = default;
    QuadOrder(i64 trace_tau, i64 norm_tau) : t(trace_tau), n(norm_tau) {
        if (discriminant() >= 0)
            throw Error("order is not imaginary quadratic");
    }

    i64 discriminant() const { return t * t - 4 * n; }

    bool operator==(const QuadOrder &o) const { return t == o.t && n == o.n; }
    bool operator!=(const QuadOrder &o) const { return !(*this == o); }
};

// x + y*tau in R.
struct QuadInt {
    i64 x = 0;
    i64 y = 0;
    QuadOrder ord;

    QuadInt() = default;
    QuadInt(i64 xx, i64 yy, QuadOrder o) : x(xx), y(yy), ord(o) {}

    bool is_zero() const { return x == 0 && y == 0; }

    QuadInt operator+(const QuadInt &o) const { check(o); return QuadInt(x + o.x, y + o.y, ord); }
    QuadInt operator-(const QuadInt &o) const { check(o); return QuadInt(x - o.x, y - o.y, ord); }
    QuadInt operator-() const { return QuadInt(-x, -y, ord); }
    QuadInt operator*(const QuadInt &o) const {
        check(o);
        // (x + y tau)(x' + y' tau), tau^2 = t tau - n
        return QuadInt(x * o.x - ord.n * y * o.y, x * o.y + y * o.x + ord.t * y * o.y, ord);
    }
    QuadInt operator*(i64 k) const { return QuadInt(x * k, y * k, ord); }

    QuadInt conj() const { return QuadInt(x + ord.t * y, -y, ord); }
    i64 norm() const { return x * x + ord.t * x * y + ord.n * y * y; }
    i64 trace() const { return 2 * x + ord.t * y; }

    bool operator==(const QuadInt &o) const { return x == o.x && y == o.y && ord == o.ord; }
    bool operator!=(const QuadInt &o) const { return !(*this == o); }

    std::string str() const; // "x+y*tau"

private:
    void check(const QuadInt &o) const {
        if (ord != o.ord)
            throw OrderMismatch("elements of distinct orders");
    }
};

// Matrix of multiplication by beta on the basis {1, tau}:
// beta*1 = a + c*tau, beta*tau = b + d*tau.
struct ActionMatrix {
    i64 a, b, c, d;
    i64 det() const { return a * d - b * c; }
    i64 tr() const { return a + d; }
};

ActionMatrix action_matrix(const QuadInt &beta);

// Column Hermite normal form of the lattice spanned by the given column
// vectors: basis (d0, 0), (c01, d1) with d0, d1 > 0 and 0 <= c01 < d0.
// Throws ZeroModulus if the lattice has rank < 2.
struct Hnf2 {
    i64 d0, c01, d1;
};
Hnf2 hnf_of_columns(const std::vector<std::pair<i64, i64>> &cols);

// The finite residue ring R/alpha R with canonical (box-reduced)
// representatives.
class ResidueRing {
public:
    explicit ResidueRing(const QuadInt &alpha);

    const QuadInt &modulus() const { return alpha_; }
    i64 size() const { return hnf_.d0 * hnf_.d1; }

    // unique canonical representative congruent to beta mod alpha R
    QuadInt reduce(const QuadInt &beta) const;

    std::vector<QuadInt> representatives() const;

private:
    QuadInt alpha_;
    Hnf2 hnf_;
};

// gamma with gamma*beta = 1 mod alpha R, canonically reduced.
// Exhaustive over representatives at desk scale, linear solve above it.
QuadInt inverse_mod(const QuadInt &beta, const ResidueRing &ring);

} // namespace sesq
