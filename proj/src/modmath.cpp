#include "padic_solve/modmath.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "padic_solve/errors.hpp"

namespace padic_solve {

Residue::Residue(u64 value, u64 modulus) {
    if (modulus == 0)
        throw DomainError("Residue: modulus must be positive");
    modulus_ = modulus;
    value_ = value % modulus;
}

u64 mul_mod(u64 a, u64 b, u64 modulus) {
    return static_cast<u64>(static_cast<u128>(a) * b % modulus);
}

u64 pow_mod(u64 base, u128 exponent, u64 modulus) {
    if (modulus == 0)
        throw DomainError("pow_mod: modulus must be positive");
    if (modulus == 1)
        return 0;
    u64 result = 1;
    u64 b = base % modulus;
    while (exponent != 0) {
        if (static_cast<u64>(exponent) & 1)
            result = mul_mod(result, b, modulus);
        b = mul_mod(b, b, modulus);
        exponent >>= 1;
    }
    return result;
}

Residue mod_pow(i64 base, u128 exponent, u64 modulus) {
    if (modulus < 2)
        throw DomainError("mod_pow: modulus must be at least 2");
    u64 b = base >= 0 ? static_cast<u64>(base) % modulus
                      : modulus - (static_cast<u64>(-base) % modulus);
    if (b == modulus)
        b = 0;
    return Residue(pow_mod(b, exponent, modulus), modulus);
}

u64 gcd_u64(u64 a, u64 b) {
    return std::gcd(a, b);
}

u64 checked_pow(u64 base, u32 exponent) {
    u64 result = 1;
    for (u32 i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(result, base, &result))
            throw DomainError("checked_pow: power exceeds 64 bits");
    }
    return result;
}

u64 inv_mod(u64 a, u64 modulus) {
    if (modulus == 0)
        throw DomainError("inv_mod: modulus must be positive");
    if (modulus == 1)
        return 0;
    i64 t = 0, nt = 1;
    i64 r = static_cast<i64>(modulus), nr = static_cast<i64>(a % modulus);
    while (nr != 0) {
        i64 q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1)
        throw DomainError("inv_mod: argument is not a unit");
    return t < 0 ? static_cast<u64>(t + static_cast<i64>(modulus))
                 : static_cast<u64>(t);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, u32 r) {
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (u32 i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true; // a witnesses compositeness
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    u64 d = n - 1;
    u32 r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set is deterministic for all 64-bit n.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        if (miller_rabin_witness(n, a, d, r))
            return false;
    }
    return true;
}

bool is_odd_prime(u64 n) {
    return n > 2 && is_prime(n);
}

FactorList factorize(u64 x) {
    if (x < 1)
        throw DomainError("factorize: argument must be at least 1");
    FactorList factors;
    auto strip = [&](u64 q) {
        if (x % q != 0)
            return;
        u32 mult = 0;
        while (x % q == 0) {
            x /= q;
            ++mult;
        }
        factors.push_back({q, mult});
    };
    strip(2);
    strip(3);
    for (u64 q = 5; q <= x / q; q += 6) {
        strip(q);
        strip(q + 2);
    }
    if (x > 1)
        factors.push_back({x, 1});
    return factors;
}

u64 factor_product(const FactorList& factors) {
    u64 product = 1;
    for (const auto& f : factors)
        for (u32 i = 0; i < f.multiplicity; ++i)
            product *= f.prime;
    return product;
}

namespace {

u64 euler_phi(u64 n) {
    u64 phi = 1;
    for (const auto& f : factorize(n)) {
        phi *= f.prime - 1;
        for (u32 i = 1; i < f.multiplicity; ++i)
            phi *= f.prime;
    }
    return phi;
}

} // namespace

u64 multiplicative_order(u64 g, u64 modulus) {
    if (modulus < 2)
        throw DomainError("multiplicative_order: modulus must be at least 2");
    if (std::gcd(g % modulus, modulus) != 1)
        throw DomainError("multiplicative_order: base is not a unit");
    // Start from the group order and strip prime factors while the power
    // stays 1; never a linear scan.
    u64 order = euler_phi(modulus);
    for (const auto& f : factorize(order)) {
        for (u32 i = 0; i < f.multiplicity; ++i) {
            if (order % f.prime == 0 &&
                pow_mod(g % modulus, order / f.prime, modulus) == 1)
                order /= f.prime;
            else
                break;
        }
    }
    return order;
}

Residue primitive_root(u64 p) {
    if (!is_odd_prime(p))
        throw DomainError("primitive_root: p must be an odd prime");
    const FactorList phi_factors = factorize(p - 1);
    for (u64 h = 2; h < p; ++h) {
        bool primitive = true;
        for (const auto& f : phi_factors) {
            if (pow_mod(h, (p - 1) / f.prime, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            return Residue(h, p);
    }
    throw InternalError("primitive_root: no generator found"); // unreachable
}

u64 discrete_log(u64 h, u64 y, u64 p) {
    if (!is_odd_prime(p))
        throw DomainError("discrete_log: p must be an odd prime");
    h %= p;
    y %= p;
    if (y == 0)
        throw DomainError("discrete_log: target is not a unit");
    if (h == 0)
        throw DomainError("discrete_log: base is not a unit");

    // Baby-step giant-step over the full group of order p-1.
    const u64 order = p - 1;
    u64 steps = 1;
    while (steps * steps < order)
        ++steps;
    std::unordered_map<u64, u64> baby;
    baby.reserve(steps);
    u64 cur = 1;
    for (u64 j = 0; j < steps; ++j) {
        baby.emplace(cur, j);
        cur = mul_mod(cur, h, p);
    }
    const u64 giant = pow_mod(h, order - steps % order, p); // h^(-steps)
    cur = y;
    for (u64 i = 0; i * steps <= order; ++i) {
        auto it = baby.find(cur);
        if (it != baby.end()) {
            u64 a = (i * steps + it->second) % order;
            return a;
        }
        cur = mul_mod(cur, giant, p);
    }
    throw DomainError("discrete_log: no exponent found (base not primitive?)");
}

Residue crt_combine(const Residue& r1, const Residue& r2) {
    const u64 m1 = r1.modulus(), m2 = r2.modulus();
    if (std::gcd(m1, m2) != 1)
        throw DomainError("crt_combine: moduli are not coprime");
    if (m2 != 0 && m1 > std::numeric_limits<u64>::max() / m2)
        throw DomainError("crt_combine: combined modulus overflows");
    const u64 modulus = m1 * m2;
    if (m1 == 1)
        return Residue(r2.value(), modulus);
    if (m2 == 1)
        return Residue(r1.value(), modulus);
    // x = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
    u64 diff = (r2.value() + m2 - r1.value() % m2) % m2;
    u64 t = mul_mod(diff, inv_mod(m1 % m2, m2), m2);
    return Residue(r1.value() + m1 * t, modulus);
}

std::vector<u64> linear_congruence_solutions(i64 a, i64 b, u64 modulus) {
    if (modulus < 2)
        throw DomainError(
            "linear_congruence_solutions: modulus must be at least 2");
    const i64 m = static_cast<i64>(modulus);
    u64 ar = static_cast<u64>(((a % m) + m) % m);
    u64 br = static_cast<u64>(((b % m) + m) % m);
    const u64 g = std::gcd(ar, modulus);
    if (br % g != 0)
        return {};
    const u64 m_red = modulus / g;
    // One solution mod m_red, then g translates of it mod modulus.
    u64 x0 = m_red == 1
                 ? 0
                 : mul_mod((br / g) % m_red, inv_mod((ar / g) % m_red, m_red),
                           m_red);
    std::vector<u64> solutions;
    solutions.reserve(g);
    for (u64 t = 0; t < g; ++t)
        solutions.push_back(x0 + t * m_red);
    return solutions;
}

} // namespace padic_solve
