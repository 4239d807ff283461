#pragma once

#include <functional>

#include "padic_solve/ints.hpp"
#include "padic_solve/padic.hpp"

namespace padic_solve {

// A congruence-root lifting problem. The evaluators take a candidate and
// a precision j and return the value mod p^j; f(seed) must vanish mod p
// and df(seed) must be a unit mod p.
struct LiftProblem {
    u64 p;
    u32 target_precision;
    u64 seed; // root of f mod p, in [0, p)
    std::function<u64(u64 candidate, u32 precision)> f;
    std::function<u64(u64 candidate, u32 precision)> df;
};

// Newton iteration with one digit of precision per step. Every step checks
// that the residual's valuation grew; a stalled residual means a broken
// evaluator and raises InternalError.
PadicApprox hensel_lift(const LiftProblem& problem);

// The unique x mod p^e with x = a (mod p) solving
// omega(g)^{x0^n} * <g>^{x^n} = x^k, for p not dividing k.
PadicApprox lift_pair(u64 g, u64 n, u64 k, u64 x0, u64 a, u64 p, u32 e);

} // namespace padic_solve
