#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padic_solve/errors.hpp"
#include "padic_solve/hensel.hpp"
#include "padic_solve/modmath.hpp"
#include "padic_solve/padic.hpp"

using namespace padic_solve;

namespace {

LiftProblem square_minus_two(u64 p, u32 e) {
    return {
        .p = p,
        .target_precision = e,
        .seed = 3,
        .f = [p](u64 x, u32 prec) {
            const u64 m = checked_pow(p, prec);
            return (mul_mod(x, x, m) + m - 2 % m) % m;
        },
        .df = [p](u64 x, u32 prec) {
            const u64 m = checked_pow(p, prec);
            return mul_mod(2, x, m);
        },
    };
}

} // namespace

TEST_CASE("hensel_lift examples") {
    // Brute-force reference: the root of x^2 = 2 mod 49 in the class of 3.
    u64 expected = 0;
    for (u64 x = 3; x < 49; x += 7)
        if (x * x % 49 == 2)
            expected = x;
    CHECK(expected == 10);
    CHECK(hensel_lift(square_minus_two(7, 2)).residue() == 10);

    // Identity lift: f(x) = x - c.
    for (u32 e = 1; e <= 4; ++e) {
        const u64 c = 123;
        const LiftProblem ident{
            .p = 5,
            .target_precision = e,
            .seed = c % 5,
            .f = [](u64 x, u32 prec) {
                const u64 m = checked_pow(5, prec);
                return (x + m - 123 % m) % m;
            },
            .df = [](u64, u32) { return u64{1}; },
        };
        CHECK(hensel_lift(ident).residue() == 123 % checked_pow(5, e));
    }

    // An exact root persists: x^3 = 1, seed 1, p = 5.
    const LiftProblem cube{
        .p = 5,
        .target_precision = 3,
        .seed = 1,
        .f = [](u64 x, u32 prec) {
            const u64 m = checked_pow(5, prec);
            return (pow_mod(x, 3, m) + m - 1) % m;
        },
        .df = [](u64 x, u32 prec) {
            const u64 m = checked_pow(5, prec);
            return mul_mod(3, mul_mod(x, x, m), m);
        },
    };
    CHECK(hensel_lift(cube).residue() == 1);
}

TEST_CASE("hensel_lift rejects bad hypotheses and broken evaluators") {
    // Seed not a root mod p.
    LiftProblem bad_seed = square_minus_two(7, 2);
    bad_seed.seed = 1;
    CHECK_THROWS_AS(hensel_lift(bad_seed), DomainError);

    // Derivative vanishes at the seed: f(x) = x^2 at seed 0... use x^2 - 0
    const LiftProblem singular{
        .p = 5,
        .target_precision = 2,
        .seed = 0,
        .f = [](u64 x, u32 prec) { return mul_mod(x, x, checked_pow(5, prec)); },
        .df = [](u64 x, u32 prec) { return mul_mod(2, x, checked_pow(5, prec)); },
    };
    CHECK_THROWS_AS(hensel_lift(singular), DomainError);

    // Evaluator inconsistent across precisions: residual cannot improve.
    const LiftProblem broken{
        .p = 7,
        .target_precision = 3,
        .seed = 2,
        .f = [](u64, u32 prec) { return prec == 1 ? u64{0} : u64{3}; },
        .df = [](u64, u32) { return u64{1}; },
    };
    CHECK_THROWS_AS(hensel_lift(broken), InternalError);
}

TEST_CASE("hensel_lift uniqueness per seed class, exhaustive") {
    for (u64 p : {5ULL, 7ULL}) {
        for (u32 e = 1; e <= 3; ++e) {
            const u64 pe = checked_pow(p, e);
            const u64 pm1 = p - 1;
            for (u64 g = 2; g < p; ++g) {
                const u64 m = multiplicative_order(g, p);
                for (u64 n = 1; n <= 2; ++n) {
                    for (u64 k = 1; k <= 3; ++k) {
                        for (u64 x0 = 0; x0 < m; ++x0) {
                            const u64 target =
                                pow_mod(g, pow_mod(x0, n, pm1), p);
                            for (u64 a = 1; a < p; ++a) {
                                if (pow_mod(a, k, p) != target)
                                    continue;
                                const u64 lifted =
                                    lift_pair(g, n, k, x0, a, p, e).residue();
                                // Scan the whole class of a for roots.
                                u64 roots = 0;
                                for (u64 x = a; x < pe; x += p) {
                                    if (interp_F(g, n, x0, PadicApprox(p, e, x))
                                            .residue() ==
                                        pow_mod(x, k, pe))
                                        ++roots;
                                }
                                CHECK(roots == 1);
                                CHECK(interp_F(g, n, x0,
                                               PadicApprox(p, e, lifted))
                                          .residue() ==
                                      pow_mod(lifted, k, pe));
                                CHECK(lifted % p == a);
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("lift_pair examples") {
    // g = 8 = 1 mod 7, so m = 1: the fixed-point equation 8^x = x mod 49.
    u64 expected = 0;
    for (u64 x = 1; x < 49; x += 7)
        if (pow_mod(8, x % 42, 49) == x) // ord_49(8) divides 42
            expected = x;
    CHECK(expected == 8);
    CHECK(lift_pair(8, 1, 1, 0, 1, 7, 2).residue() == 8);

    // Degenerate g = 1: the equation is 1 = x.
    CHECK(lift_pair(1, 1, 1, 0, 1, 7, 2).residue() == 1);

    // All six mod-7 pairs for g = 3, k = 1 lift to mod-49 roots.
    u64 lifted_count = 0;
    for (u64 x0 = 0; x0 < 6; ++x0) {
        const u64 target = pow_mod(3, x0, 7);
        for (u64 a = 1; a < 7; ++a) {
            if (a % 7 != target)
                continue;
            const u64 x = lift_pair(3, 1, 1, x0, a, 7, 2).residue();
            CHECK(interp_F(3, 1, x0, PadicApprox(7, 2, x)).residue() ==
                  pow_mod(x, 1, 49));
            ++lifted_count;
        }
    }
    CHECK(lifted_count == 6);

    CHECK_THROWS_AS(lift_pair(3, 1, 7, 0, 1, 7, 2), UnsupportedCaseError);
    CHECK_THROWS_AS(lift_pair(3, 1, 2, 0, 5, 7, 2), DomainError);
}

TEST_CASE("lifting commutes with precision reduction") {
    for (u32 e = 2; e <= 4; ++e)
        CHECK(hensel_lift(square_minus_two(7, e)).reduced(e - 1) ==
              hensel_lift(square_minus_two(7, e - 1)));

    for (u32 e = 2; e <= 3; ++e) {
        for (u64 x0 = 0; x0 < 6; ++x0) {
            const u64 a = pow_mod(3, x0, 7); // k = 1 pairs directly
            CHECK(lift_pair(3, 1, 1, x0, a, 7, e).reduced(e - 1) ==
                  lift_pair(3, 1, 1, x0, a, 7, e - 1));
        }
    }
}

TEST_CASE("lift_pair bridges to integer solutions of the congruence") {
    // Gluing x' mod p^e with x0 mod m yields an integer solution.
    for (u64 p : {5ULL, 7ULL}) {
        const u32 e = 3;
        const u64 pe = checked_pow(p, e);
        for (u64 g = 2; g < p; ++g) {
            const u64 m = multiplicative_order(g, p);
            const u64 period = m * (pe / p);
            for (u64 n = 1; n <= 2; ++n) {
                for (u64 x0 = 0; x0 < m; ++x0) {
                    const u64 target = pow_mod(g, pow_mod(x0, n, p - 1), p);
                    for (u64 a = 1; a < p; ++a) {
                        if (pow_mod(a, 2, p) != target)
                            continue;
                        const u64 lifted = lift_pair(g, n, 2, x0, a, p, e).residue();
                        const u64 X =
                            crt_combine(Residue(x0, m), Residue(lifted, pe))
                                .value();
                        CHECK(pow_mod(g, pow_mod(X, n, period), pe) ==
                              pow_mod(X, 2, pe));
                    }
                }
            }
        }
    }
}
