#include "sesquipair/miller.hpp"

namespace sesq {

namespace {

// A chord/tangent/vertical in evaluated form; one inversion per line,
// shared across all divisor points.
struct Line {
    enum class Kind { One, Vertical, Slope } kind;
    Fe x0;     // vertical: x - x0
    Fe lam;    // slope form: (Y - y0) - lam*(X - x0)
    Fe y0;

    Fe at(const Point &p) const {
        if (p.is_infinity())
            throw SupportCollision("evaluation at infinity");
        switch (kind) {
        case Kind::One:
            return Fe(1, p.x.q);
        case Kind::Vertical:
            return p.x - x0;
        default:
            return (p.y - y0) - lam * (p.x - x0);
        }
    }
};

Line line_through(const Point &T, const Point &U) {
    if (T.is_infinity() && U.is_infinity())
        return Line{Line::Kind::One, {}, {}, {}};
    if (T.is_infinity())
        return Line{Line::Kind::Vertical, U.x, {}, {}};
    if (U.is_infinity())
        return Line{Line::Kind::Vertical, T.x, {}, {}};
    if (T.x == U.x && (T.y + U.y).is_zero())
        return Line{Line::Kind::Vertical, T.x, {}, {}};
    Fe lam(0, T.x.q);
    if (T == U) {
        Fe three(3, T.x.q), two(2, T.x.q);
        lam = (three * T.x * T.x + T.E.A) / (two * T.y);
    } else {
        lam = (U.y - T.y) / (U.x - T.x);
    }
    return Line{Line::Kind::Slope, T.x, lam, T.y};
}

// running value as numerator/denominator; single inversion at the end
struct Frac {
    Fe num, den;
    explicit Frac(u64 q) : num(1, q), den(1, q) {}
    void square() {
        num = num * num;
        den = den * den;
    }
    Fe value() const { return num / den; }
};

void mul_line_at(Frac &f, const Line &l, const IntDivisor &D, bool inverted) {
    for (const auto &[P, m] : D) {
        if (m == 0)
            continue;
        Fe v = l.at(P);
        if (v.is_zero())
            throw ZeroEvaluation("line vanishes on the evaluation divisor");
        const bool to_num = (m > 0) != inverted;
        Fe p = v.pow(m > 0 ? m : -m);
        if (to_num)
            f.num = f.num * p;
        else
            f.den = f.den * p;
    }
}

} // namespace

IntDivisor normalize_divisor(const IntDivisor &D) {
    IntDivisor out;
    for (const auto &[P, m] : D) {
        if (m == 0)
            continue;
        bool merged = false;
        for (auto &[Q, k] : out) {
            if (P == Q) {
                k += m;
                merged = true;
                break;
            }
        }
        if (!merged)
            out.emplace_back(P, m);
    }
    IntDivisor trimmed;
    for (const auto &t : out)
        if (t.second != 0)
            trimmed.push_back(t);
    return trimmed;
}

Fe eval_line(const Point &T, const Point &U, const Point &at) {
    Fe v = line_through(T, U).at(at);
    if (v.is_zero())
        throw ZeroEvaluation("evaluation point lies on the line");
    return v;
}

Fe miller_h(const Point &P, i64 n, const IntDivisor &D_in) {
    if (n < 0)
        throw Error("miller_h requires n >= 0");
    const u64 q = P.x.q;
    const IntDivisor D = normalize_divisor(D_in);
    for (const auto &[X, m] : D) {
        if (X.is_infinity())
            throw SupportCollision("evaluation divisor touches O");
    }
    if (P.is_infinity() || n == 0 || n == 1 || D.empty())
        return Fe(1, q);
    const Point nP = scalar_mul(P, n);
    for (const auto &[X, m] : D) {
        if (X == P || X == nP)
            throw SupportCollision("evaluation divisor touches the function's divisor");
    }
    Frac f(q);
    Point T = P;
    bool started = false;
    for (int bit = 62; bit >= 0; --bit) {
        if (!started) {
            if ((n >> bit) & 1)
                started = true;
            continue;
        }
        f.square();
        mul_line_at(f, line_through(T, T), D, false);
        T = T + T;
        mul_line_at(f, line_through(T, -T), D, true);
        if ((n >> bit) & 1) {
            mul_line_at(f, line_through(T, P), D, false);
            T = T + P;
            mul_line_at(f, line_through(T, -T), D, true);
        }
    }
    return f.value();
}

Fe miller_signed(const Point &P, i64 n, const IntDivisor &D) {
    if (n >= 0)
        return miller_h(P, n, D);
    Fe v = miller_h(P, -n, D);
    const Point nP = scalar_mul(P, -n);
    Frac f(P.x.q);
    mul_line_at(f, line_through(nP, -nP), D, false);
    return (v * f.value()).inv();
}

Fe eval_anchored(const Point &u0, const Point &u1, i64 a, i64 b,
                 const Point &z, const IntDivisor &D_in) {
    const IntDivisor D = normalize_divisor(D_in);
    const Point A = scalar_mul(u0, a);
    const Point B = scalar_mul(u1, b);
    const Point C = scalar_mul(z, a + b);
    if (A + B != C)
        throw NonPrincipalDivisor("plan divisor is not principal");
    if (D.empty())
        return Fe(1, u0.x.q);
    // f = h_{U0,a} h_{U1,b} L(A,B) / (h_{Z,a+b} V(C))
    Fe v = miller_signed(u0, a, D) * miller_signed(u1, b, D);
    Frac lines(u0.x.q);
    mul_line_at(lines, line_through(A, B), D, false);
    v = v * lines.value();
    if (!z.is_infinity()) {
        Fe w = miller_signed(z, a + b, D);
        Frac vert(u0.x.q);
        mul_line_at(vert, line_through(C, -C), D, false);
        v = v / (w * vert.value());
    }
    return v;
}

Fe eval_two_point(const EvalPlan &plan, const IntDivisor &D) {
    return eval_anchored(plan.p0, plan.p1, plan.a, plan.b,
                         plan.p0.E.infinity(), D);
}

} // namespace sesq
