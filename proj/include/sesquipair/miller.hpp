#pragma once

#include <vector>

#include "sesquipair/rdivisor.hpp"

namespace sesq {

// Integer-coefficient divisor used as an evaluation target.  All points
// must be affine at evaluation time (functions have zeros/poles at O).
using IntDivisor = std::vector<std::pair<Point, i64>>;

// Drop zero coefficients, merge duplicates.
IntDivisor normalize_divisor(const IntDivisor &D);

// The line function with divisor (T) + (U) + (-(T+U)) - 3(O): the chord
// through T and U, the tangent when T = U, a vertical when T + U = O or
// either point is O, the constant 1 when both are O.  Evaluated at an
// affine point; throws ZeroEvaluation on a zero of the line and
// SupportCollision when `at` is O.
Fe eval_line(const Point &T, const Point &U, const Point &at);

// Value at D of h_{P,n} with divisor n(P) - ([n]P) - (n-1)(O), n >= 0,
// by double-and-add, evaluating the running lines at D each step.
Fe miller_h(const Point &P, i64 n, const IntDivisor &D);

// h_{P,-n}(D) := (h_{P,n}(D) * V_{[n]P}(D))^{-1}
Fe miller_signed(const Point &P, i64 n, const IntDivisor &D);

// Target divisor a(P0) + b(P1) - (a+b)(O), derived from an action-matrix
// row; must be principal: [a]P0 + [b]P1 = O.
struct EvalPlan {
    Point p0, p1;
    i64 a = 0, b = 0;
};

// f(D) for the plan's function f = h_{P0,a} h_{P1,b} g, where g is the
// correction line through [a]P0 and [b]P1.
Fe eval_two_point(const EvalPlan &plan, const IntDivisor &D);

// Same with the divisor anchored at Z instead of O:
// a(U0) + b(U1) - (a+b)(Z), principal when [a]U0 + [b]U1 = [a+b]Z.
Fe eval_anchored(const Point &u0, const Point &u1, i64 a, i64 b,
                 const Point &z, const IntDivisor &D);

} // namespace sesq
