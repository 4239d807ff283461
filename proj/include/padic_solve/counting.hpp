#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic_solve/ints.hpp"
#include "padic_solve/modmath.hpp"

namespace padic_solve {

// Instances with m * p^e beyond this are rejected at construction rather
// than risking 64-bit wraparound.
inline constexpr u64 kDefaultWindowCeiling = u64{1} << 62;

// The congruence g^(x^n) = x^k (mod p^e) with its derived data. g is
// reduced mod p^e at intake; m is always recomputed from g mod p.
class ProblemInstance {
public:
    enum class Case {
        p_ndivides_k,  // p does not divide k: Hensel lifting applies
        k_equals_p_n1, // k = p, n = 1: Wieferich-governed lifting
        unsupported,   // open cases: p | k with k != p, or k = p with n > 1
    };

    ProblemInstance(u64 g, u64 n, u64 k, u64 p, u32 e,
                    u64 window_ceiling = kDefaultWindowCeiling);

    u64 g() const { return g_; }
    u64 n() const { return n_; }
    u64 k() const { return k_; }
    u64 p() const { return p_; }
    u32 e() const { return e_; }
    u64 m() const { return m_; }

    u64 prime_power() const { return prime_power_; } // p^e
    u64 window() const { return window_; }           // m * p^e

    Case case_tag() const { return case_; }
    bool supported() const { return case_ != Case::unsupported; }

    // Short token naming the open case; empty when supported.
    std::string unsupported_reason() const;

private:
    u64 g_, n_, k_, p_;
    u32 e_;
    u64 m_, prime_power_, window_;
    Case case_;
};

// Mod-p solution pairs (x0 mod m, x1 mod p) of g^(x0^n) = x1^k (mod p),
// with the closed-form pair count N.
struct ModPCount {
    u64 N;
    std::vector<std::pair<u64, u64>> pairs;
};

struct CountReport {
    u64 N;   // mod-p pair count from the closed formula
    u64 d;   // gcd(k, p-1) / gcd(k, (p-1)/m)
    FactorList d_factors;
    u64 total; // count in the window [0, m*p^e)
    std::optional<bool> wieferich; // set only in the k = p case
    ProblemInstance::Case case_tag;
};

struct SolutionSet {
    u64 window; // solutions live in [0, window)
    std::vector<u64> solutions;
};

// Count at the mod-p level; valid for every k >= 1, supported case or not.
ModPCount count_mod_p(const ProblemInstance& inst);

// Closed-form count in [0, m*p^e); pure formula plus the Wieferich test,
// no enumeration. Throws UnsupportedCaseError outside the analyzed cases.
CountReport count_solutions(const ProblemInstance& inst);

// g^(p-1) = 1 (mod p^2)?
bool is_wieferich_base(u64 g, u64 p);

// Explicit solutions for p not dividing k: one Hensel lift per mod-p pair,
// glued by CRT. Every emitted x is re-verified by direct evaluation.
SolutionSet enumerate_pnmidk(const ProblemInstance& inst);

// Explicit solutions for k = p, n = 1: breadth-first lifting one p-digit
// at a time; the final cardinality must match count_solutions.
SolutionSet enumerate_k_eq_p(const ProblemInstance& inst);

// Dispatch to the enumerator for the instance's case.
SolutionSet enumerate_solutions(const ProblemInstance& inst);

} // namespace padic_solve
