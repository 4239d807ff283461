#pragma once

#include <limits>

#include "padic_solve/ints.hpp"
#include "padic_solve/modmath.hpp"

namespace padic_solve {

// Marker for v_p(0); larger than any finite valuation we can represent.
inline constexpr u32 kInfiniteValuation = std::numeric_limits<u32>::max();

// Exponent of p in x; kInfiniteValuation for x = 0.
u32 valuation(i64 x, u64 p);

// An element of Z_p known modulo p^precision.
class PadicApprox {
public:
    PadicApprox(u64 p, u32 precision, u64 residue);

    u64 prime() const { return p_; }
    u32 precision() const { return precision_; }
    u64 residue() const { return residue_; }
    u64 modulus() const { return modulus_; }

    // v_p of the residue; returns precision when the residue is 0 (only
    // the lower bound "at least precision" is knowable at this precision).
    u32 valuation() const;

    PadicApprox reduced(u32 new_precision) const;

    bool is_zero() const { return residue_ == 0; }

    bool operator==(const PadicApprox&) const = default;

private:
    u64 p_;
    u32 precision_;
    u64 residue_;
    u64 modulus_; // p^precision, cached
};

// Mixed-precision arithmetic: operands must share p; the result carries
// the smaller precision.
PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);

// x = omega * one_unit with omega^(p-1) = 1 and one_unit = 1 (mod p).
struct UnitDecomposition {
    PadicApprox omega;
    PadicApprox one_unit;
};

// The (p-1)-st root of unity congruent to x mod p, via the Frobenius
// iteration y -> y^p (fixed point asserted).
PadicApprox teichmuller(u64 x, u64 p, u32 e);

UnitDecomposition unit_decompose(u64 x, u64 p, u32 e);

// Truncated log series on 1 + pZ_p; exact mod p^e.
PadicApprox log_one_unit(const PadicApprox& u);

// Truncated exp series; requires v_p(t) >= 1 (convergence disk for odd p).
PadicApprox exp_small(const PadicApprox& t);

// F_{x0}(x) = omega(g)^{x0^n} * <g>^{x^n}, the continuous interpolation of
// x -> g^{x^n} on the class x = x0 (mod m); agrees with g^{x^n} there.
PadicApprox interp_F(u64 g, u64 n, u64 x0, const PadicApprox& x);

} // namespace padic_solve
