#pragma once

#include <stdexcept>
#include <string>

namespace sesq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field
struct DivisionByZero : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct FactorizationFailure : Error { using Error::Error; };
struct NotInSubgroup : Error { using Error::Error; };

// quadratic order
struct OrderMismatch : Error { using Error::Error; };
struct ZeroModulus : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };

// curve
struct CurveMismatch : Error { using Error::Error; };
struct OffCurve : Error { using Error::Error; };
struct ScaleExceeded : Error { using Error::Error; };

// divisors
struct NonzeroDegree : Error { using Error::Error; };

// G_m module
struct DlogFailure : Error { using Error::Error; };
struct NotRootOfUnity : Error { using Error::Error; };

// miller / pairings
struct ZeroEvaluation : Error { using Error::Error; };
struct SupportCollision : Error { using Error::Error; };
struct NonPrincipalDivisor : Error { using Error::Error; };
struct NotInKernel : Error { using Error::Error; };
struct RetriesExhausted : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };

} // namespace sesq
