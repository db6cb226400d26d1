#pragma once

#include <tqeuler/error.hpp>
#include <tqeuler/rational.hpp>

#include <string>

namespace tqeuler {

// How [m]_{t,q} is read inside the double-sum formula.
enum class zeng_reading {
    pochhammer_ratio, // (1 - t q^m) / (1 - q)
    shifted_q_int,    // t q^m + [m]_q
};

namespace detail {

inline big_rational q_int_at(int m, const big_rational& q0)
{
    big_rational r = 0;
    big_rational p = 1;
    for (int i = 0; i < m; ++i) {
        r += p;
        p *= q0;
    }
    return r;
}

inline big_rational tq_int_at(int m, const big_rational& t0, const big_rational& q0, zeng_reading reading)
{
    if (reading == zeng_reading::shifted_q_int)
        return t0 * rational_pow(q0, m) + q_int_at(m, q0);
    if (q0 == 1)
        throw error(errc::zero_denominator, "q = 1");
    return (1 - t0 * rational_pow(q0, m)) / (1 - q0);
}

inline const big_rational& nonzero(const big_rational& v, const char* what)
{
    if (v == 0)
        throw error(errc::zero_denominator, std::string(what) + " vanishes");
    return v;
}

} // namespace detail

/*
 * E_n(t0, q0) = t^{-n} sum_{m=0}^{n} sum_{i=0}^{m} (-1)^{n-i} q^{2m-2in+i^2-n-i}
 *   [2m]_{t,q}! [2i+1]_{t,q}^{2n} / ([2i]_q!! [2m-2i]_q!! prod_{k=0, k!=i}^{m} [2k+2i+2]_{t^2,q})
 * evaluated exactly. This is E_n itself, not the (1-q)^{2n} normalized form.
 */
inline big_rational e_zeng_numeric(int n, const big_rational& t0, const big_rational& q0,
                                   zeng_reading reading = zeng_reading::pochhammer_ratio)
{
    if (n < 0)
        throw error(errc::out_of_range, "n = " + std::to_string(n));
    detail::nonzero(t0, "t");
    detail::nonzero(q0, "q");
    auto tq = [&](int m) { return detail::tq_int_at(m, t0, q0, reading); };
    auto t2q = [&](int m) { return detail::tq_int_at(m, t0 * t0, q0, reading); };
    auto double_factorial = [&](int i) {
        big_rational r = 1;
        for (int k = 1; k <= i; ++k)
            r *= detail::q_int_at(2 * k, q0);
        return r;
    };

    big_rational sum = 0;
    for (int m = 0; m <= n; ++m) {
        big_rational tq_fact = 1;
        for (int j = 1; j <= 2 * m; ++j)
            tq_fact *= tq(j);
        for (int i = 0; i <= m; ++i) {
            big_rational denom = double_factorial(i) * double_factorial(m - i);
            for (int k = 0; k <= m; ++k)
                if (k != i)
                    denom *= t2q(2 * k + 2 * i + 2);
            detail::nonzero(denom, "a denominator factor");
            const big_rational sign = (n - i) % 2 == 0 ? 1 : -1;
            sum += sign * rational_pow(q0, 2 * m - 2 * i * n + i * i - n - i) * tq_fact *
                   rational_pow(tq(2 * i + 1), 2 * n) / denom;
        }
    }
    return sum / rational_pow(t0, n);
}

} // namespace tqeuler
