#include "padic_solve/oracle.hpp"

#include <algorithm>
#include <thread>

#include "padic_solve/errors.hpp"

namespace padic_solve {

namespace {

void scan_range(const ProblemInstance& inst, u64 begin, u64 end,
                std::vector<u64>& out) {
    const u64 pe = inst.prime_power();
    const u64 period = inst.m() * (pe / inst.p());
    for (u64 x = begin; x < end; ++x) {
        const u64 t = period == 1 ? 0 : pow_mod(x, inst.n(), period);
        if (pow_mod(inst.g(), t, pe) == pow_mod(x, inst.k(), pe))
            out.push_back(x);
    }
}

u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Exact x^n as a 128-bit integer; throws if it cannot be represented,
// since the periodicity check is only meaningful with unreduced exponents.
u128 exact_pow_u128(u64 x, u64 n) {
    u128 r = 1;
    for (u64 i = 0; i < n; ++i) {
        if (x != 0 && r > static_cast<u128>(-1) / x)
            throw ResourceLimitError("check_periodicity: x^n exceeds 128 bits");
        r *= x;
    }
    return r;
}

} // namespace

ScanResult brute_force(const ProblemInstance& inst, u64 ceiling,
                       unsigned threads) {
    const u64 window = inst.window();
    if (window > ceiling)
        throw ResourceLimitError("brute_force: window exceeds the scan ceiling");

    const auto start = std::chrono::steady_clock::now();
    std::vector<u64> solutions;
    if (threads <= 1) {
        scan_range(inst, 0, window, solutions);
    } else {
        const u64 chunks = std::min<u64>(threads, window == 0 ? 1 : window);
        std::vector<std::vector<u64>> partial(chunks);
        std::vector<std::thread> workers;
        workers.reserve(chunks);
        for (u64 c = 0; c < chunks; ++c) {
            const u64 begin = window / chunks * c + std::min(c, window % chunks);
            const u64 end =
                window / chunks * (c + 1) + std::min(c + 1, window % chunks);
            workers.emplace_back(scan_range, std::cref(inst), begin, end,
                                 std::ref(partial[c]));
        }
        for (auto& w : workers)
            w.join();
        for (auto& part : partial)
            solutions.insert(solutions.end(), part.begin(), part.end());
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    return {inst, std::move(solutions),
            std::chrono::duration<double>(elapsed), window};
}

bool check_periodicity(const ProblemInstance& inst, u64 samples) {
    const u64 pe = inst.prime_power();
    const u64 window = inst.window();

    // f(x) = g^(x^n) - x^k mod p^e with the exponent x^n computed exactly;
    // no reduction, so this validates the reduction the scanner relies on.
    auto f = [&](u64 x) -> u64 {
        const u64 lhs = pow_mod(inst.g(), exact_pow_u128(x, inst.n()), pe);
        const u64 rhs = pow_mod(x, inst.k(), pe);
        return (lhs + pe - rhs) % pe;
    };

    u64 state = 0x70a71c5eed5eed00ULL ^ (inst.g() * 0x10001 + inst.n());
    state = state * 31 + inst.k();
    state = state * 31 + inst.p();
    state = state * 31 + inst.e();

    for (u64 i = 0; i < samples; ++i) {
        const u64 x = splitmix64(state) % window;
        if (f(x) != f(x + window))
            return false;
    }
    return true;
}

} // namespace padic_solve
