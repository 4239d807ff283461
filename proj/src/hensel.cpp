#include "padic_solve/hensel.hpp"

#include "padic_solve/errors.hpp"
#include "padic_solve/modmath.hpp"

namespace padic_solve {

PadicApprox hensel_lift(const LiftProblem& problem) {
    const u64 p = problem.p;
    const u32 e = problem.target_precision;
    if (!is_odd_prime(p))
        throw DomainError("hensel_lift: p must be an odd prime");
    if (e < 1)
        throw DomainError("hensel_lift: target precision must be >= 1");
    const u64 seed = problem.seed % p;

    if (problem.f(seed, 1) % p != 0)
        throw DomainError("hensel_lift: seed is not a root mod p");
    if (problem.df(seed, 1) % p == 0)
        throw DomainError("hensel_lift: derivative is not a unit at the seed");

    // One digit per step: before step j the candidate solves f = 0 mod p^j;
    // the Newton update makes it solve mod p^(j+1). A residual that is not
    // divisible by p^j contradicts that invariant and means the evaluators
    // are inconsistent.
    u64 x = seed;
    u64 pj = p; // p^j
    for (u32 j = 1; j < e; ++j) {
        const u64 pj1 = checked_pow(p, j + 1);
        const u64 r = problem.f(x, j + 1);
        if (r % pj != 0)
            throw InternalError("hensel_lift: residual valuation did not grow");
        const u64 df = problem.df(x, j + 1);
        const u64 step = mul_mod(r, inv_mod(df, pj1), pj1);
        x = (x + pj1 - step) % pj1;
        pj = pj1;
    }

    if (problem.f(x, e) != 0)
        throw InternalError("hensel_lift: lifted value is not a root");
    if (x % p != seed)
        throw InternalError("hensel_lift: lift left the seed's class");
    return PadicApprox(p, e, x);
}

PadicApprox lift_pair(u64 g, u64 n, u64 k, u64 x0, u64 a, u64 p, u32 e) {
    if (!is_odd_prime(p))
        throw DomainError("lift_pair: p must be an odd prime");
    if (k % p == 0)
        throw UnsupportedCaseError(
            "lift_pair: p divides k; use the k = p counting pathway");
    if (g % p == 0)
        throw DomainError("lift_pair: g must be a unit mod p");
    if (n < 1 || k < 1)
        throw DomainError("lift_pair: n and k must be positive");

    const u64 pe = checked_pow(p, e);
    const u64 gr = g % pe;
    const u64 m = multiplicative_order(gr % p, p);
    x0 %= m;
    a %= p;

    // Mod p the equation reads omega(g)^{x0^n} = a^k; anything else means
    // (x0, a) is not a solution pair.
    if (pow_mod(gr % p, pow_mod(x0, n, p - 1), p) != pow_mod(a, k, p))
        throw DomainError("lift_pair: (x0, a) is not a solution pair mod p");

    const UnitDecomposition dec = unit_decompose(gr, p, e);
    const PadicApprox lg = log_one_unit(dec.one_unit);
    const u64 om_exp = pow_mod(x0, n, p - 1);

    // f(x) = omega(g)^{x0^n} exp(x^n log<g>) - x^k evaluated mod p^j, with
    // the series derivative f'(x) = omega-part * exp(x^n log<g>) n x^(n-1)
    // log<g> - k x^(k-1) (termwise differentiation of the power series).
    auto one_unit_pow = [&](u64 x, u32 prec) -> u64 {
        const u64 pj = checked_pow(p, prec);
        const u64 xn = prec == 1 ? 0 : pow_mod(x, n, pj / p);
        const PadicApprox arg(p, prec,
                              mul_mod(xn, lg.residue() % pj, pj));
        return exp_small(arg).residue();
    };
    auto f = [&](u64 x, u32 prec) -> u64 {
        const u64 pj = checked_pow(p, prec);
        const u64 om = pow_mod(dec.omega.residue() % pj, om_exp, pj);
        const u64 lhs = mul_mod(om, one_unit_pow(x, prec), pj);
        return (lhs + pj - pow_mod(x, k, pj)) % pj;
    };
    auto df = [&](u64 x, u32 prec) -> u64 {
        const u64 pj = checked_pow(p, prec);
        const u64 om = pow_mod(dec.omega.residue() % pj, om_exp, pj);
        u64 lhs = mul_mod(om, one_unit_pow(x, prec), pj);
        lhs = mul_mod(lhs, n % pj, pj);
        lhs = mul_mod(lhs, pow_mod(x, n - 1, pj), pj);
        lhs = mul_mod(lhs, lg.residue() % pj, pj);
        const u64 rhs = mul_mod(k % pj, pow_mod(x, k - 1, pj), pj);
        return (lhs + pj - rhs) % pj;
    };

    const PadicApprox lifted =
        hensel_lift({.p = p, .target_precision = e, .seed = a, .f = f, .df = df});

    if (interp_F(gr, n, x0, lifted).residue() != pow_mod(lifted.residue(), k, pe))
        throw InternalError("lift_pair: lifted root fails the congruence");
    return lifted;
}

} // namespace padic_solve
