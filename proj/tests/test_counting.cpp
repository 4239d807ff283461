#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "padic_solve/counting.hpp"
#include "padic_solve/errors.hpp"
#include "padic_solve/oracle.hpp"

using namespace padic_solve;

namespace {

// Independent mod-p pair scan: count (x0, x1) with g^(x0^n) = x1^k (mod p).
u64 scan_pairs(u64 g, u64 n, u64 k, u64 p) {
    const u64 m = multiplicative_order(g % p, p);
    u64 count = 0;
    for (u64 x0 = 0; x0 < m; ++x0) {
        const u64 lhs = pow_mod(g, pow_mod(x0, n, p - 1), p);
        for (u64 x1 = 0; x1 < p; ++x1)
            if (lhs == pow_mod(x1, k, p))
                ++count;
    }
    return count;
}

} // namespace

TEST_CASE("ProblemInstance validation and case tagging") {
    const ProblemInstance inst(10, 2, 3, 7, 2);
    CHECK(inst.g() == 10);
    CHECK(inst.m() == 6); // ord_7(10) = ord_7(3)
    CHECK(inst.prime_power() == 49);
    CHECK(inst.window() == 294);
    CHECK(inst.case_tag() == ProblemInstance::Case::p_ndivides_k);
    CHECK(inst.unsupported_reason().empty());

    CHECK(ProblemInstance(2, 1, 7, 7, 2).case_tag() ==
          ProblemInstance::Case::k_equals_p_n1);
    CHECK(ProblemInstance(2, 2, 7, 7, 2).case_tag() ==
          ProblemInstance::Case::unsupported);
    CHECK(ProblemInstance(2, 2, 7, 7, 2).unsupported_reason() ==
          "k_equals_p_requires_n_equal_1");
    CHECK(ProblemInstance(2, 1, 14, 7, 2).case_tag() ==
          ProblemInstance::Case::unsupported);
    CHECK(ProblemInstance(2, 1, 14, 7, 2).unsupported_reason() ==
          "p_divides_k_with_k_ne_p");

    // g is reduced mod p^e at intake; m comes from the reduced value.
    CHECK(ProblemInstance(3 + 5 * 49, 1, 1, 7, 2).g() == 3);

    CHECK_THROWS_AS(ProblemInstance(14, 1, 1, 7, 2), DomainError);
    CHECK_THROWS_AS(ProblemInstance(2, 0, 1, 7, 2), DomainError);
    CHECK_THROWS_AS(ProblemInstance(2, 1, 0, 7, 2), DomainError);
    CHECK_THROWS_AS(ProblemInstance(2, 1, 1, 9, 2), DomainError);
    CHECK_THROWS_AS(ProblemInstance(1, 1, 1, 2, 2), DomainError);
    CHECK_THROWS_AS(ProblemInstance(3, 1, 1, 7, 2, /*ceiling=*/100),
                    ResourceLimitError);
}

TEST_CASE("count_mod_p examples") {
    CHECK(count_mod_p(ProblemInstance(2, 1, 1, 7, 1)).N == 3);
    CHECK(count_mod_p(ProblemInstance(6, 1, 4, 7, 1)).N == 2);
    CHECK(count_mod_p(ProblemInstance(1, 1, 1, 7, 1)).N == 1);

    const ModPCount mp = count_mod_p(ProblemInstance(3, 2, 2, 11, 1));
    CHECK(mp.N == scan_pairs(3, 2, 2, 11));
    CHECK(mp.pairs.size() == mp.N);
}

TEST_CASE("count_mod_p pairs match the double scan") {
    for (u64 p : {3ULL, 5ULL, 7ULL, 11ULL}) {
        for (u64 g = 1; g < p; ++g) {
            for (u64 n = 1; n <= 3; ++n) {
                for (u64 k = 1; k <= 13; ++k) {
                    const ProblemInstance inst(g, n, k, p, 1);
                    const ModPCount mp = count_mod_p(inst);
                    CHECK(mp.N == scan_pairs(g, n, k, p));
                    // Every reported pair really solves the mod-p equation.
                    for (const auto& [x0, x1] : mp.pairs)
                        CHECK(pow_mod(g, pow_mod(x0, n, p - 1), p) ==
                              pow_mod(x1, k, p));
                    CHECK(std::is_sorted(mp.pairs.begin(), mp.pairs.end()));
                    CHECK(std::adjacent_find(mp.pairs.begin(), mp.pairs.end()) ==
                          mp.pairs.end());
                }
            }
        }
    }
}

TEST_CASE("count_solutions examples") {
    CHECK(count_solutions(ProblemInstance(3, 1, 1, 7, 3)).total == 6);
    CHECK(count_solutions(ProblemInstance(3, 1, 11, 11, 2)).total == 55);
    CHECK(count_solutions(ProblemInstance(4, 1, 11, 11, 4)).total == 0);
    CHECK(count_solutions(ProblemInstance(1, 1, 11, 11, 3)).total == 11);

    CHECK(count_solutions(ProblemInstance(3, 1, 11, 11, 2)).wieferich ==
          std::optional<bool>(true));
    CHECK(count_solutions(ProblemInstance(3, 1, 1, 7, 3)).wieferich ==
          std::nullopt);

    CHECK_THROWS_AS(count_solutions(ProblemInstance(2, 1, 14, 7, 2)),
                    UnsupportedCaseError);
    CHECK_THROWS_AS(count_solutions(ProblemInstance(2, 2, 7, 7, 2)),
                    UnsupportedCaseError);
}

TEST_CASE("is_wieferich_base examples") {
    CHECK(is_wieferich_base(3, 11));
    CHECK_FALSE(is_wieferich_base(4, 11));
    for (u64 p : {3ULL, 7ULL, 11ULL, 101ULL})
        CHECK(is_wieferich_base(1, p));
    CHECK(is_wieferich_base(1 + 121, 11)); // one-unit in 1 + p^2 Z_p
    CHECK_THROWS_AS(is_wieferich_base(11, 11), DomainError);
    CHECK_THROWS_AS(is_wieferich_base(2, 9), DomainError);
}

TEST_CASE("enumerate_pnmidk examples") {
    const SolutionSet one = enumerate_pnmidk(ProblemInstance(1, 1, 1, 7, 1));
    CHECK(one.window == 7);
    CHECK(one.solutions == std::vector<u64>{1});

    const SolutionSet six = enumerate_pnmidk(ProblemInstance(3, 1, 1, 7, 2));
    CHECK(six.window == 294);
    CHECK(six.solutions.size() == 6);
    CHECK(six.solutions ==
          brute_force(ProblemInstance(3, 1, 1, 7, 2)).solutions);

    const SolutionSet two = enumerate_pnmidk(ProblemInstance(6, 1, 4, 7, 2));
    CHECK(two.window == 98);
    CHECK(two.solutions.size() == 2);
    CHECK(two.solutions ==
          brute_force(ProblemInstance(6, 1, 4, 7, 2)).solutions);

    CHECK_THROWS_AS(enumerate_pnmidk(ProblemInstance(2, 1, 7, 7, 2)),
                    UnsupportedCaseError);
}

TEST_CASE("enumerate_k_eq_p examples") {
    const SolutionSet eleven = enumerate_k_eq_p(ProblemInstance(1, 1, 11, 11, 2));
    CHECK(eleven.solutions.size() == 11);

    const SolutionSet none = enumerate_k_eq_p(ProblemInstance(10, 1, 11, 11, 2));
    CHECK(none.solutions.empty());

    const SolutionSet fives = enumerate_k_eq_p(ProblemInstance(3, 1, 11, 11, 2));
    CHECK(fives.solutions.size() == 55);
    CHECK(fives.solutions ==
          brute_force(ProblemInstance(3, 1, 11, 11, 2)).solutions);

    CHECK_THROWS_AS(enumerate_k_eq_p(ProblemInstance(2, 1, 3, 7, 2)),
                    UnsupportedCaseError);
}

TEST_CASE("formula, enumeration, and oracle agree") {
    for (u64 p : {3ULL, 5ULL, 7ULL}) {
        for (u64 g = 1; g < p; ++g) {
            for (u64 n = 1; n <= 2; ++n) {
                for (u64 k = 1; k <= 13; ++k) {
                    for (u32 e = 1; e <= 2; ++e) {
                        const ProblemInstance inst(g, n, k, p, e);
                        if (!inst.supported())
                            continue;
                        const CountReport report = count_solutions(inst);
                        const SolutionSet lifted = enumerate_solutions(inst);
                        const ScanResult scanned = brute_force(inst);
                        CHECK(lifted.solutions.size() == report.total);
                        CHECK(lifted.solutions == scanned.solutions);
                    }
                }
            }
        }
    }
}

TEST_CASE("N does not depend on n when every exponent in d is 1") {
    for (u64 g = 1; g <= 6; ++g) {
        for (u64 k = 1; k <= 4; ++k) {
            const CountReport base =
                count_solutions(ProblemInstance(g, 1, k, 7, 1));
            for (const auto& f : base.d_factors)
                CHECK(f.multiplicity == 1);
            for (u64 n = 2; n <= 3; ++n)
                CHECK(count_solutions(ProblemInstance(g, n, k, 7, 1)).N ==
                      base.N);
        }
    }
}

TEST_CASE("Wieferich trichotomy governs lifting for k = p") {
    for (u64 p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        for (u64 g = 1; g < p * p; ++g) {
            if (g % p == 0)
                continue;
            for (u32 e = 2; e <= 3; ++e) {
                const ProblemInstance inst(g, 1, p, p, e);
                const CountReport report = count_solutions(inst);
                CHECK((report.total > 0) == is_wieferich_base(g, p));
                CHECK(report.total ==
                      (is_wieferich_base(g, p) ? report.N * p : 0));
            }
        }
    }
}

TEST_CASE("solutions persist one period later") {
    for (u64 p : {5ULL, 7ULL, 11ULL}) {
        const ProblemInstance inst(3, 2, 3, p, 2);
        const u64 pe = inst.prime_power();
        const u64 period = inst.m() * (pe / p);
        for (u64 x : enumerate_solutions(inst).solutions) {
            const u64 shifted = x + inst.window();
            CHECK(pow_mod(inst.g(), pow_mod(shifted, inst.n(), period), pe) ==
                  pow_mod(shifted, inst.k(), pe));
        }
    }
}
