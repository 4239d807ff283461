#pragma once

#include <vector>

#include "padic_solve/ints.hpp"

namespace padic_solve {

// A canonical residue: value in [0, modulus). Modulus 1 is allowed (the
// zero ring); it shows up as the CRT factor "x0 mod m" when g = 1 mod p.
class Residue {
public:
    Residue(u64 value, u64 modulus);

    u64 value() const { return value_; }
    u64 modulus() const { return modulus_; }

    bool operator==(const Residue&) const = default;

private:
    u64 value_;
    u64 modulus_;
};

struct Factor {
    u64 prime;
    u32 multiplicity;

    bool operator==(const Factor&) const = default;
};

// Factors in strictly increasing prime order; empty for x = 1.
using FactorList = std::vector<Factor>;

u64 mul_mod(u64 a, u64 b, u64 modulus);

// Core power ladder; modulus >= 1. The 128-bit exponent lets callers pass
// unreduced exponents like (x + m*p^e)^n.
u64 pow_mod(u64 base, u128 exponent, u64 modulus);

// Strict variant: modulus >= 2 enforced, negative bases reduced first.
Residue mod_pow(i64 base, u128 exponent, u64 modulus);

u64 gcd_u64(u64 a, u64 b);
u64 inv_mod(u64 a, u64 modulus);

// base^exponent as a plain integer; throws DomainError on 64-bit overflow.
u64 checked_pow(u64 base, u32 exponent);

bool is_prime(u64 n);
bool is_odd_prime(u64 n);

// Least m >= 1 with g^m = 1 (mod modulus); throws unless gcd(g, modulus) = 1.
u64 multiplicative_order(u64 g, u64 modulus);

// Smallest h >= 2 of order p-1 modulo the odd prime p.
Residue primitive_root(u64 p);

// The unique a in [0, p-1) with h^a = y (mod p), h a primitive root.
u64 discrete_log(u64 h, u64 y, u64 p);

FactorList factorize(u64 x);
u64 factor_product(const FactorList& factors);

// The unique x mod m1*m2 matching both residues; moduli must be coprime.
Residue crt_combine(const Residue& r1, const Residue& r2);

// All x in [0, modulus) with a*x = b (mod modulus), ascending. Empty when
// gcd(a, modulus) does not divide b.
std::vector<u64> linear_congruence_solutions(i64 a, i64 b, u64 modulus);

} // namespace padic_solve
