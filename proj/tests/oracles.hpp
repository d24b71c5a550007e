#pragma once

// Reference computations for the tests, written against plain integers and
// gmpxx only so they share no code paths with the library.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

// Inverse mod p by the extended Euclidean algorithm.
inline long inverse_mod(long a, long p)
{
    long r0 = p, r1 = ((a % p) + p) % p;
    long s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long q = r0 / r1;
        const long r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        const long s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    return ((s0 % p) + p) % p;
}

inline long mod(long a, long p) { return ((a % p) + p) % p; }

// Dense coefficient vectors, index = exponent.
inline std::vector<long> convolve_mod(const std::vector<long>& a, const std::vector<long>& b, long p)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod(out[i + j] + a[i] * b[j], p);
    return out;
}

// Sparse rational series keyed by exponent.
using Sparse = std::map<mpq_class, mpq_class>;

inline Sparse multiply(const Sparse& a, const Sparse& b)
{
    Sparse out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            out[ea + eb] += ca * cb;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// First n coefficients of 1/a for a power series with a[0] != 0, by long
// division.
inline std::vector<mpq_class> power_series_inverse(const std::vector<mpq_class>& a, std::size_t n)
{
    std::vector<mpq_class> h(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        mpq_class rhs = k == 0 ? 1 : 0;
        for (std::size_t i = 1; i <= k && i < a.size(); ++i)
            rhs -= a[i] * h[k - i];
        h[k] = rhs / a[0];
    }
    return h;
}

// 1/(c t^s (1 + e)) = c^-1 t^-s sum_k (-e)^k, with e's exponents all positive;
// terms of the partial Neumann sum below bound, computed by repeated
// multiplication.
inline Sparse neumann_inverse(const Sparse& f, const mpq_class& bound)
{
    const mpq_class s = f.begin()->first;
    const mpq_class c = f.begin()->second;
    Sparse minus_e;
    for (const auto& [ex, co] : f)
        if (ex != s)
            minus_e[ex - s] = -co / c;
    mpq_class gmin = minus_e.empty() ? mpq_class(1) : minus_e.begin()->first;

    Sparse sum{{mpq_class(0), mpq_class(1)}};
    Sparse power{{mpq_class(0), mpq_class(1)}};
    const mpq_class limit = bound + s;
    for (mpq_class reach = 0; !minus_e.empty() && reach < limit; reach += gmin) {
        power = multiply(power, minus_e);
        std::erase_if(power, [&](const auto& kv) { return kv.first >= limit; });
        for (const auto& [ex, co] : power)
            sum[ex] += co;
    }
    Sparse out;
    for (const auto& [ex, co] : sum)
        if (co != 0 && ex - s < bound)
            out[ex - s] = co / c;
    return out;
}

} // namespace oracle
