#pragma once

#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>
#include <tqeuler/qkit.hpp>
#include <tqeuler/series.hpp>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace tqeuler {

// Level h >= 1 -> c_h of 1/(1 - c_1 x/(1 - c_2 x/(1 - ...))).
using coeff_rule = std::function<laurent_poly(int)>;

struct sfraction_spec {
    coeff_rule coeff;
    int order = 0;
};

/*
 * Moments of an S-fraction: the coefficient of x^n is the sum over Dyck paths
 * of length 2n of the product of c_h over all down steps from height h.
 * Dynamic program over (step, height); only c_1 .. c_order are evaluated.
 */
inline series sfrac_expand(const sfraction_spec& spec)
{
    if (spec.order < 0)
        throw error(errc::out_of_range, "sfrac order " + std::to_string(spec.order));
    const int n_max = spec.order;

    std::vector<laurent_poly> c(static_cast<std::size_t>(n_max) + 1);
    for (int h = 1; h <= n_max; ++h)
        c[h] = spec.coeff(h);

    series out(static_cast<std::size_t>(n_max));
    out[0] = 1;

    // paths[h]: weighted prefixes of the current length ending at height h
    std::vector<laurent_poly> paths(static_cast<std::size_t>(n_max) + 2);
    paths[0] = 1;
    for (int step = 1; step <= 2 * n_max; ++step) {
        const int top = std::min(step, 2 * n_max - step);
        std::vector<laurent_poly> next(paths.size());
        for (int h = (step % 2); h <= top; h += 2) {
            laurent_poly v;
            if (h >= 1)
                v += paths[h - 1];
            if (h + 1 <= n_max && !paths[h + 1].is_zero())
                v += paths[h + 1] * c[h + 1];
            next[h] = std::move(v);
        }
        paths = std::move(next);
        if (step % 2 == 0)
            out[step / 2] = paths[0];
    }
    return out;
}

// c_k = (1 - q^k)(1 - t q^k): numerators of [k]_q [k]_{t,q}.
inline laurent_poly euler_level(int k)
{
    return (laurent_poly(1) - q_pow(k)) * tq_factor(k);
}

inline series euler_hat_series(int order)
{
    return sfrac_expand({euler_level, order});
}

// (1-q)^{2n} E_n(t,q)
inline laurent_poly euler_hat(int n)
{
    if (n < 0)
        throw error(errc::out_of_range, "euler_hat(" + std::to_string(n) + ")");
    return euler_hat_series(n)[static_cast<std::size_t>(n)];
}

// (1-q)^n d_n
inline laurent_poly dn_hat(int n)
{
    if (n < 0)
        throw error(errc::out_of_range, "dn_hat(" + std::to_string(n) + ")");
    return sfrac_expand({[](int k) { return laurent_poly(1) - q_pow(k); }, n})[static_cast<std::size_t>(n)];
}

inline laurent_poly one_minus_q_pow(int e)
{
    return (laurent_poly(1) - q_pow(1)).pow(static_cast<unsigned>(e));
}

// d_n itself.
inline laurent_poly dn_poly(int n)
{
    return div_exact(dn_hat(n), one_minus_q_pow(n));
}

// E_{2n}(q) = E_n(1, q).
inline laurent_poly en_even_q(int n)
{
    return div_exact(euler_hat(n).substitute_t(1, 0), one_minus_q_pow(2 * n));
}

// E_{2n+1}(q) = E_n(q, q).
inline laurent_poly en_odd_q(int n)
{
    return div_exact(euler_hat(n).substitute_t(1, 1), one_minus_q_pow(2 * n));
}

// E_m(q) for either parity.
inline laurent_poly q_euler(int m)
{
    return m % 2 == 0 ? en_even_q(m / 2) : en_odd_q(m / 2);
}

} // namespace tqeuler
