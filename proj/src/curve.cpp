#include "sesquipair/curve.hpp"

#include <algorithm>
#include <set>

namespace sesq {

Curve::Curve(Fe a, Fe b) : A(a), B(b) {
    Fe four(4, a.q), twentyseven(27, a.q);
    if ((four * A * A * A + twentyseven * B * B).is_zero())
        throw Error("curve is singular");
}

Point Curve::infinity() const {
    Point P;
    P.inf = true;
    P.x = Fe(0, q());
    P.y = Fe(0, q());
    P.E = *this;
    return P;
}

Point Curve::point(Fe x, Fe y) const {
    if (x.q != q() || y.q != q())
        throw FieldMismatch("coordinates from the wrong field");
    if (y * y != x * x * x + A * x + B)
        throw OffCurve("point does not satisfy the curve equation");
    Point P;
    P.inf = false;
    P.x = x;
    P.y = y;
    P.E = *this;
    return P;
}

std::optional<Point> Curve::lift_x(Fe x) const {
    Fe rhs = x * x * x + A * x + B;
    Fe y;
    if (!sqrt_mod(rhs, y))
        return std::nullopt;
    Fe y2 = -y;
    if (y2.v < y.v)
        y = y2;
    return point(x, y);
}

std::string Point::str() const {
    if (inf)
        return "O";
    return "(" + std::to_string(x.v) + "," + std::to_string(y.v) + ")";
}

Point Point::operator+(const Point &o) const {
    if (!inf && !o.inf && E != o.E)
        throw CurveMismatch("points on distinct curves");
    if (inf)
        return o;
    if (o.inf)
        return *this;
    if (x == o.x && (y + o.y).is_zero())
        return E.infinity();
    Fe lam(0, x.q);
    if (x == o.x && y == o.y) {
        Fe three(3, x.q), two(2, x.q);
        lam = (three * x * x + E.A) / (two * y);
    } else {
        lam = (o.y - y) / (o.x - x);
    }
    Fe x3 = lam * lam - x - o.x;
    Fe y3 = lam * (x - x3) - y;
    Point R;
    R.inf = false;
    R.x = x3;
    R.y = y3;
    R.E = E;
    return R;
}

Point Point::operator-() const {
    if (inf)
        return *this;
    Point R = *this;
    R.y = -R.y;
    return R;
}

Point scalar_mul(const Point &P, i64 k) {
    if (k < 0)
        return scalar_mul(-P, -k);
    Point R = P.E.infinity();
    Point Q = P;
    while (k) {
        if (k & 1)
            R = R + Q;
        Q = Q + Q;
        k >>= 1;
    }
    return R;
}

CMEndo::CMEndo(const Curve &E, QuadOrder ord, std::function<Point(const Point &)> f, Kind k)
    : ord_(ord), tau_(std::move(f)), kind_(k) {
    validate(E);
}

void CMEndo::validate(const Curve &E) const {
    // sample a few points and spot-check the homomorphism property and
    // the minimal polynomial tau^2 - t*tau + n = 0
    std::vector<Point> sample;
    for (u64 xv = 0; xv < E.q() && sample.size() < 8; ++xv) {
        if (auto P = E.lift_x(Fe(xv, E.q())))
            sample.push_back(*P);
    }
    for (const Point &P : sample) {
        Point tP = tau_(P);
        if (!tP.is_infinity())
            E.point(tP.x, tP.y); // OffCurve if the map leaves the curve
        Point lhs = tau_(tP) - scalar_mul(tP, ord_.t) + scalar_mul(P, ord_.n);
        if (!lhs.is_infinity())
            throw Error("endomorphism fails its minimal polynomial");
    }
    for (size_t i = 0; i + 1 < sample.size(); i += 2) {
        const Point &P = sample[i], &Q = sample[i + 1];
        if (tau_(P + Q) != tau_(P) + tau_(Q))
            throw Error("endomorphism is not a homomorphism");
    }
}

CMEndo CMEndo::j1728(const Curve &E, Fe i_root) {
    if (!E.B.is_zero())
        throw Error("j=1728 form requires B = 0");
    if (i_root * i_root != -Fe(1, E.q()))
        throw Error("chosen root does not square to -1");
    auto f = [i_root](const Point &P) -> Point {
        if (P.is_infinity())
            return P;
        return P.E.point(-P.x, i_root * P.y);
    };
    return CMEndo(E, QuadOrder(0, 1), f, Kind::J1728);
}

CMEndo CMEndo::j0(const Curve &E, Fe zeta) {
    if (!E.A.is_zero())
        throw Error("j=0 form requires A = 0");
    Fe one(1, E.q());
    if (zeta == one || zeta * zeta * zeta != one)
        throw Error("chosen value is not a primitive cube root of unity");
    auto f = [zeta](const Point &P) -> Point {
        if (P.is_infinity())
            return P;
        return P.E.point(zeta * P.x, P.y);
    };
    return CMEndo(E, QuadOrder(-1, 1), f, Kind::J0);
}

CMEndo CMEndo::custom(const Curve &E, const QuadOrder &ord,
                      std::function<Point(const Point &)> tau_map) {
    return CMEndo(E, ord, std::move(tau_map), Kind::Custom);
}

Point apply_r(const QuadInt &beta, const Point &P, const CMEndo &endo) {
    if (beta.ord != endo.order())
        throw OrderMismatch("coefficient from a different order");
    return scalar_mul(P, beta.x) + scalar_mul(endo.tau(P), beta.y);
}

std::vector<Point> enumerate_group(const Curve &E) {
    const u64 q = E.q();
    if (q > (1ull << 20))
        throw ScaleExceeded("group enumeration capped at q <= 2^20");
    std::vector<Point> pts;
    pts.push_back(E.infinity());
    for (u64 xv = 0; xv < q; ++xv) {
        Fe x(xv, q);
        Fe rhs = x * x * x + E.A * x + E.B;
        Fe y;
        if (!sqrt_mod(rhs, y))
            continue;
        pts.push_back(E.point(x, y));
        if (!y.is_zero())
            pts.push_back(E.point(x, -y));
    }
    std::sort(pts.begin(), pts.end(), [](const Point &a, const Point &b) { return PointCmp{}(a, b); });
    return pts;
}

std::vector<Point> kernel_of(const QuadInt &beta, const Curve &E, const CMEndo &endo) {
    std::vector<Point> out;
    for (const Point &P : enumerate_group(E)) {
        if (apply_r(beta, P, endo).is_infinity())
            out.push_back(P);
    }
    return out;
}

std::vector<Point> image_of(const QuadInt &beta, const Curve &E, const CMEndo &endo) {
    std::set<Point, PointCmp> img;
    for (const Point &P : enumerate_group(E))
        img.insert(apply_r(beta, P, endo));
    return std::vector<Point>(img.begin(), img.end());
}

std::vector<Point> coset_reps_mod(const QuadInt &beta, const Curve &E, const CMEndo &endo) {
    const auto pts = enumerate_group(E);
    const auto img = image_of(beta, E, endo);
    std::set<Point, PointCmp> covered;
    std::vector<Point> reps;
    for (const Point &P : pts) {
        if (covered.count(P))
            continue;
        reps.push_back(P);
        for (const Point &H : img)
            covered.insert(P + H);
    }
    return reps;
}

} // namespace sesq
