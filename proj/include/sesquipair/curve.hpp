#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sesquipair/quad.hpp"

namespace sesq {

struct Point;

// Short Weierstrass curve y^2 = x^3 + A x + B over F_q.
struct Curve {
    Fe A, B;

    Curve() = default;
    Curve(Fe a, Fe b);

    u64 q() const { return A.q; }
    Point infinity() const;
    Point point(Fe x, Fe y) const;          // validates; throws OffCurve
    std::optional<Point> lift_x(Fe x) const; // smaller-y root first

    bool operator==(const Curve &o) const { return A == o.A && B == o.B; }
    bool operator!=(const Curve &o) const { return !(*this == o); }
};

struct Point {
    bool inf = true;
    Fe x, y;
    Curve E;

    Point() = default;

    bool is_infinity() const { return inf; }

    Point operator+(const Point &o) const;
    Point operator-() const;
    Point operator-(const Point &o) const { return *this + (-o); }

    bool operator==(const Point &o) const {
        if (E != o.E)
            return false;
        if (inf || o.inf)
            return inf == o.inf;
        return x == o.x && y == o.y;
    }
    bool operator!=(const Point &o) const { return !(*this == o); }

    std::string str() const;
};

struct PointCmp {
    bool operator()(const Point &p, const Point &q) const {
        if (p.inf != q.inf)
            return p.inf > q.inf; // infinity sorts first
        if (p.inf)
            return false;
        if (p.x.v != q.x.v)
            return p.x.v < q.x.v;
        return p.y.v < q.y.v;
    }
};

Point scalar_mul(const Point &P, i64 k);
inline Point operator*(i64 k, const Point &P) { return scalar_mul(P, k); }

// Explicit realization of [tau] on a curve with CM by Z[tau].
// Validated at construction: homomorphism and minimal-polynomial
// spot checks on sampled points.
class CMEndo {
public:
    enum class Kind { J1728, J0, Custom };

    // y^2 = x^3 + Ax, [i]: (x,y) -> (-x, i*y), i a chosen root of -1.
    static CMEndo j1728(const Curve &E, Fe i_root);
    // y^2 = x^3 + B, [zeta]: (x,y) -> (zeta*x, y), zeta a chosen
    // primitive cube root of unity; tau = zeta_3 with t=-1, n=1.
    static CMEndo j0(const Curve &E, Fe zeta);
    static CMEndo custom(const Curve &E, const QuadOrder &ord,
                         std::function<Point(const Point &)> tau_map);

    Point tau(const Point &P) const { return tau_(P); }
    const QuadOrder &order() const { return ord_; }
    Kind kind() const { return kind_; }

private:
    CMEndo(const Curve &E, QuadOrder ord, std::function<Point(const Point &)> f, Kind k);
    void validate(const Curve &E) const;

    QuadOrder ord_;
    std::function<Point(const Point &)> tau_;
    Kind kind_;
};

// [beta]P = [x]P + [y]([tau]P) for beta = x + y*tau.
Point apply_r(const QuadInt &beta, const Point &P, const CMEndo &endo);

// All rational points (x-sweep); infinity first, then by (x, y).
// Throws ScaleExceeded for q > 2^20.
std::vector<Point> enumerate_group(const Curve &E);

// { P in E(F_q) : [beta]P = O }
std::vector<Point> kernel_of(const QuadInt &beta, const Curve &E, const CMEndo &endo);

// Transversal of E(F_q)/[beta]E(F_q), deterministic order.
std::vector<Point> coset_reps_mod(const QuadInt &beta, const Curve &E, const CMEndo &endo);

// Image subgroup [beta]E(F_q) as a deterministic sorted list.
std::vector<Point> image_of(const QuadInt &beta, const Curve &E, const CMEndo &endo);

} // namespace sesq
