#include "padic_solve/counting.hpp"

#include <algorithm>

#include "padic_solve/errors.hpp"
#include "padic_solve/hensel.hpp"
#include "padic_solve/padic.hpp"

namespace padic_solve {

ProblemInstance::ProblemInstance(u64 g, u64 n, u64 k, u64 p, u32 e,
                                 u64 window_ceiling)
    : n_(n), k_(k), p_(p), e_(e) {
    if (!is_odd_prime(p))
        throw DomainError("ProblemInstance: p must be an odd prime");
    if (e < 1)
        throw DomainError("ProblemInstance: e must be at least 1");
    if (n < 1 || k < 1)
        throw DomainError("ProblemInstance: n and k must be positive");
    if (g % p == 0)
        throw DomainError("ProblemInstance: g must be a unit mod p");

    prime_power_ = checked_pow(p, e);
    g_ = g % prime_power_;
    m_ = multiplicative_order(g_ % p, p);
    if (m_ > window_ceiling / prime_power_)
        throw ResourceLimitError(
            "ProblemInstance: window m*p^e exceeds the configured ceiling");
    window_ = m_ * prime_power_;

    if (k % p != 0)
        case_ = Case::p_ndivides_k;
    else if (k == p && n == 1)
        case_ = Case::k_equals_p_n1;
    else
        case_ = Case::unsupported;
}

std::string ProblemInstance::unsupported_reason() const {
    if (case_ != Case::unsupported)
        return "";
    if (k_ % p_ == 0 && k_ != p_)
        return "p_divides_k_with_k_ne_p";
    return "k_equals_p_requires_n_equal_1";
}

bool is_wieferich_base(u64 g, u64 p) {
    if (!is_odd_prime(p))
        throw DomainError("is_wieferich_base: p must be an odd prime");
    if (g % p == 0)
        throw DomainError("is_wieferich_base: g must be a unit mod p");
    const u64 p2 = checked_pow(p, 2);
    return pow_mod(g % p2, p - 1, p2) == 1;
}

namespace {

// Closed formula: d = gcd(k,p-1)/gcd(k,(p-1)/m), and N divides out one
// ceil(alpha/n)-th power of each prime in d.
u64 formula_pair_count(const ProblemInstance& inst, u64& d, FactorList& df) {
    const u64 p = inst.p(), m = inst.m(), k = inst.k(), n = inst.n();
    const u64 gk = gcd_u64(k, p - 1);
    d = gk / gcd_u64(k, (p - 1) / m);
    df = factorize(d);
    u64 divisor = 1;
    for (const auto& f : df)
        divisor *= checked_pow(f.prime, (f.multiplicity + n - 1) / n);
    if ((m * gk) % divisor != 0)
        throw InternalError("formula_pair_count: divisor does not divide");
    return m * gk / divisor;
}

} // namespace

ModPCount count_mod_p(const ProblemInstance& inst) {
    const u64 p = inst.p(), m = inst.m(), k = inst.k(), n = inst.n();

    u64 d = 0;
    FactorList df;
    const u64 N = formula_pair_count(inst, d, df);

    // Constructive route from the proof: write g = h^a for a primitive
    // root h and solve k*b = a*x0^n (mod p-1) for each class x0.
    const u64 h = primitive_root(p).value();
    const u64 a = discrete_log(h, inst.g() % p, p);
    std::vector<std::pair<u64, u64>> pairs;
    for (u64 x0 = 0; x0 < m; ++x0) {
        const u64 rhs = mul_mod(a, pow_mod(x0, n, p - 1), p - 1);
        for (u64 b : linear_congruence_solutions(static_cast<i64>(k % (p - 1)),
                                                 static_cast<i64>(rhs), p - 1))
            pairs.emplace_back(x0, pow_mod(h, b, p));
    }
    std::sort(pairs.begin(), pairs.end());

    if (pairs.size() != N)
        throw InternalError("count_mod_p: formula and construction disagree");
    return {N, std::move(pairs)};
}

CountReport count_solutions(const ProblemInstance& inst) {
    if (!inst.supported())
        throw UnsupportedCaseError("count_solutions: open case (" +
                                   inst.unsupported_reason() + ")");
    const u64 p = inst.p();

    CountReport report;
    report.N = formula_pair_count(inst, report.d, report.d_factors);
    report.case_tag = inst.case_tag();

    if (inst.case_tag() == ProblemInstance::Case::p_ndivides_k) {
        report.total = report.N;
        report.wieferich = std::nullopt;
    } else {
        const bool wf = is_wieferich_base(inst.g(), p);
        report.wieferich = wf;
        if (inst.e() == 1)
            report.total = report.N;
        else
            report.total = wf ? report.N * p : 0;
    }
    return report;
}

namespace {

// Direct modular check of g^(x^n) = x^k (mod p^j), exponent reduced mod
// m*p^(j-1) as periodicity allows.
bool satisfies(u64 g, u64 n, u64 k, u64 m, u64 p, u64 pj, u64 x) {
    const u64 period = m * (pj / p);
    const u64 t = period == 1 ? 0 : pow_mod(x, n, period);
    return pow_mod(g % pj, t, pj) == pow_mod(x, k, pj);
}

} // namespace

SolutionSet enumerate_pnmidk(const ProblemInstance& inst) {
    if (inst.case_tag() != ProblemInstance::Case::p_ndivides_k)
        throw UnsupportedCaseError("enumerate_pnmidk: requires p not dividing k");
    const u64 p = inst.p(), m = inst.m(), pe = inst.prime_power();

    const ModPCount mod_p = count_mod_p(inst);
    std::vector<u64> solutions;
    solutions.reserve(mod_p.pairs.size());
    for (const auto& [x0, x1] : mod_p.pairs) {
        const PadicApprox lifted =
            lift_pair(inst.g(), inst.n(), inst.k(), x0, x1, p, inst.e());
        const Residue x = crt_combine(Residue(x0, m),
                                      Residue(lifted.residue(), pe));
        if (!satisfies(inst.g(), inst.n(), inst.k(), m, p, pe, x.value()))
            throw InternalError("enumerate_pnmidk: candidate fails the congruence");
        solutions.push_back(x.value());
    }
    std::sort(solutions.begin(), solutions.end());

    if (solutions.size() != count_solutions(inst).total)
        throw InternalError("enumerate_pnmidk: cardinality mismatch vs formula");
    return {inst.window(), std::move(solutions)};
}

SolutionSet enumerate_k_eq_p(const ProblemInstance& inst) {
    if (inst.case_tag() != ProblemInstance::Case::k_equals_p_n1)
        throw UnsupportedCaseError("enumerate_k_eq_p: requires k = p, n = 1");
    const u64 p = inst.p(), m = inst.m();

    // Level 1: the mod-p solution pairs glued into [0, m*p).
    std::vector<u64> level;
    for (const auto& [x0, x1] : count_mod_p(inst).pairs)
        level.push_back(crt_combine(Residue(x0, m), Residue(x1, p)).value());

    // Each further level keeps the children a + t*m*p^j that satisfy the
    // congruence one power higher; the formula bounds the growth.
    u64 mpj = m * p;
    for (u32 j = 1; j < inst.e(); ++j) {
        const u64 pj1 = checked_pow(p, j + 1);
        std::vector<u64> next;
        for (u64 parent : level) {
            for (u64 t = 0; t < p; ++t) {
                const u64 x = parent + t * mpj;
                if (satisfies(inst.g(), 1, p, m, p, pj1, x))
                    next.push_back(x);
            }
        }
        level = std::move(next);
        mpj *= p;
        if (level.empty())
            break;
    }
    std::sort(level.begin(), level.end());

    for (u64 x : level) {
        if (!satisfies(inst.g(), 1, p, m, p, inst.prime_power(), x))
            throw InternalError("enumerate_k_eq_p: candidate fails the congruence");
    }
    if (level.size() != count_solutions(inst).total)
        throw InternalError("enumerate_k_eq_p: cardinality mismatch vs formula");
    return {inst.window(), std::move(level)};
}

SolutionSet enumerate_solutions(const ProblemInstance& inst) {
    switch (inst.case_tag()) {
    case ProblemInstance::Case::p_ndivides_k:
        return enumerate_pnmidk(inst);
    case ProblemInstance::Case::k_equals_p_n1:
        return enumerate_k_eq_p(inst);
    default:
        throw UnsupportedCaseError("enumerate_solutions: open case (" +
                                   inst.unsupported_reason() + ")");
    }
}

} // namespace padic_solve
