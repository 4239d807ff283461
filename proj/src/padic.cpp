#include "padic_solve/padic.hpp"

#include <algorithm>
#include <utility>

#include "padic_solve/errors.hpp"

namespace padic_solve {

u32 valuation(i64 x, u64 p) {
    if (p < 2 || !is_prime(p))
        throw DomainError("valuation: p must be prime");
    if (x == 0)
        return kInfiniteValuation;
    u64 ax = x < 0 ? static_cast<u64>(-x) : static_cast<u64>(x);
    u32 v = 0;
    while (ax % p == 0) {
        ax /= p;
        ++v;
    }
    return v;
}

PadicApprox::PadicApprox(u64 p, u32 precision, u64 residue) : p_(p) {
    if (p < 3 || p % 2 == 0)
        throw DomainError("PadicApprox: p must be an odd prime");
    if (precision < 1)
        throw DomainError("PadicApprox: precision must be at least 1");
    precision_ = precision;
    modulus_ = checked_pow(p, precision);
    residue_ = residue % modulus_;
}

u32 PadicApprox::valuation() const {
    if (residue_ == 0)
        return precision_;
    u64 r = residue_;
    u32 v = 0;
    while (r % p_ == 0) {
        r /= p_;
        ++v;
    }
    return v;
}

PadicApprox PadicApprox::reduced(u32 new_precision) const {
    if (new_precision > precision_)
        throw DomainError("PadicApprox::reduced: cannot raise precision");
    return PadicApprox(p_, new_precision, residue_);
}

namespace {

std::pair<u64, u32> align(const PadicApprox& a, const PadicApprox& b) {
    if (a.prime() != b.prime())
        throw DomainError("PadicApprox: mixed primes");
    u32 prec = std::min(a.precision(), b.precision());
    u64 modulus = checked_pow(a.prime(), prec);
    return {modulus, prec};
}

} // namespace

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
    auto [modulus, prec] = align(a, b);
    u64 r = (a.residue() % modulus + b.residue() % modulus) % modulus;
    return PadicApprox(a.prime(), prec, r);
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) {
    auto [modulus, prec] = align(a, b);
    u64 r = (a.residue() % modulus + modulus - b.residue() % modulus) % modulus;
    return PadicApprox(a.prime(), prec, r);
}

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
    auto [modulus, prec] = align(a, b);
    u64 r = mul_mod(a.residue() % modulus, b.residue() % modulus, modulus);
    return PadicApprox(a.prime(), prec, r);
}

PadicApprox teichmuller(u64 x, u64 p, u32 e) {
    if (!is_odd_prime(p))
        throw DomainError("teichmuller: p must be an odd prime");
    if (e < 1)
        throw DomainError("teichmuller: precision must be at least 1");
    if (x % p == 0)
        throw DomainError("teichmuller: omega is undefined on non-units");
    const u64 pe = checked_pow(p, e);
    // y -> y^p converges to the root of unity in at most e-1 steps.
    u64 y = x % pe;
    for (u32 i = 0; i < e; ++i)
        y = pow_mod(y, p, pe);
    if (pow_mod(y, p, pe) != y)
        throw InternalError("teichmuller: Frobenius iteration did not settle");
    return PadicApprox(p, e, y);
}

UnitDecomposition unit_decompose(u64 x, u64 p, u32 e) {
    PadicApprox omega = teichmuller(x, p, e);
    const u64 pe = omega.modulus();
    u64 one_unit = mul_mod(x % pe, inv_mod(omega.residue(), pe), pe);
    if (pow_mod(omega.residue(), p - 1, pe) != 1 || one_unit % p != 1 ||
        mul_mod(omega.residue(), one_unit, pe) != x % pe)
        throw InternalError("unit_decompose: decomposition check failed");
    return {omega, PadicApprox(p, e, one_unit)};
}

namespace {

u32 floor_log(u64 x, u64 base) {
    u32 l = 0;
    while (x >= base) {
        x /= base;
        ++l;
    }
    return l;
}

u32 strip_p(u64& x, u64 p) {
    u32 v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

} // namespace

PadicApprox log_one_unit(const PadicApprox& u) {
    const u64 p = u.prime(), pe = u.modulus();
    const u32 e = u.precision();
    if (u.residue() % p != 1)
        throw DomainError("log_one_unit: argument must be 1 mod p");

    u64 t = (u.residue() + pe - 1) % pe; // u - 1
    if (t == 0)
        return PadicApprox(p, e, 0);
    u64 t0 = t;
    const u32 w = strip_p(t0, p); // t = p^w * t0, 1 <= w < e

    // Term i is (-1)^(i+1) t^i / i = +- p^(i*w - v_p(i)) * t0^i / unit(i);
    // its valuation is at least i*w - log_p(i), which grows without bound,
    // so the sum below is the exact residue of the series mod p^e.
    u64 acc = 0;
    for (u64 i = 1;; ++i) {
        if (i * w >= static_cast<u64>(e) + floor_log(i, p))
            break;
        u64 iu = i;
        const u32 s = strip_p(iu, p);
        const u64 sh = i * w - s;
        if (sh >= e)
            continue;
        u64 term = mul_mod(pow_mod(t0, i, pe), inv_mod(iu % pe, pe), pe);
        term = mul_mod(term, checked_pow(p, static_cast<u32>(sh)), pe);
        acc = (i % 2 == 1) ? (acc + term) % pe : (acc + pe - term) % pe;
    }
    return PadicApprox(p, e, acc);
}

PadicApprox exp_small(const PadicApprox& t) {
    const u64 p = t.prime(), pe = t.modulus();
    const u32 e = t.precision();
    if (t.residue() == 0)
        return PadicApprox(p, e, 1);
    if (t.residue() % p != 0)
        throw DomainError("exp_small: argument must have valuation >= 1");

    u64 t0 = t.residue();
    const u32 w = strip_p(t0, p);

    // Term i is t^i / i! = p^(i*w - v_p(i!)) * t0^i / unit(i!); Legendre's
    // formula bounds v_p(i!) by (i-1)/(p-1), so term valuations are at
    // least i*w - (i-1)/(p-1), non-decreasing and unbounded for odd p.
    u64 acc = 1;
    u64 fact_unit = 1; // unit part of i! mod p^e
    u64 fact_val = 0;  // v_p(i!)
    for (u64 i = 1;; ++i) {
        if (i * w >= static_cast<u64>(e) + (i - 1) / (p - 1))
            break;
        u64 iu = i;
        fact_val += strip_p(iu, p);
        fact_unit = mul_mod(fact_unit, iu % pe, pe);
        const u64 sh = i * w - fact_val;
        if (sh >= e)
            continue;
        u64 term = mul_mod(pow_mod(t0, i, pe), inv_mod(fact_unit, pe), pe);
        term = mul_mod(term, checked_pow(p, static_cast<u32>(sh)), pe);
        acc = (acc + term) % pe;
    }
    return PadicApprox(p, e, acc);
}

PadicApprox interp_F(u64 g, u64 n, u64 x0, const PadicApprox& x) {
    const u64 p = x.prime(), pe = x.modulus();
    const u32 e = x.precision();
    if (g % p == 0)
        throw DomainError("interp_F: g must be a unit mod p");
    if (n < 1)
        throw DomainError("interp_F: n must be positive");

    const u64 gr = g % pe;
    const u64 m = multiplicative_order(gr % p, p);
    const UnitDecomposition dec = unit_decompose(gr, p, e);
    const PadicApprox lg = log_one_unit(dec.one_unit);

    // omega(g) has order dividing p-1, so x0^n only matters mod p-1.
    const u64 om_exp = pow_mod(x0 % m, n, p - 1);
    const u64 om_part = pow_mod(dec.omega.residue(), om_exp, pe);

    // <g>^(p^(e-1)) = 1 mod p^e, so the exponent x^n reduces mod p^(e-1).
    const u64 xn = e == 1 ? 0 : pow_mod(x.residue(), n, pe / p);
    const PadicApprox arg(p, e, mul_mod(xn, lg.residue(), pe));
    const PadicApprox one_unit_part = exp_small(arg);

    return PadicApprox(p, e, mul_mod(om_part, one_unit_part.residue(), pe));
}

} // namespace padic_solve
