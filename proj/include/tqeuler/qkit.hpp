#pragma once

#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>

#include <string>
#include <vector>

namespace tqeuler {

// 1 + q + ... + q^{n-1}; [0]_q = 0.
inline laurent_poly q_int(int n)
{
    if (n < 0)
        throw error(errc::out_of_range, "q_int(" + std::to_string(n) + ")");
    laurent_poly r;
    for (int i = 0; i < n; ++i)
        r.add_term(exponent{0, i}, 1);
    return r;
}

// Numerator of [n]_{t,q}: 1 - t q^n.
inline laurent_poly tq_factor(int n)
{
    if (n < 1)
        throw error(errc::out_of_range, "tq_factor(" + std::to_string(n) + ")");
    return laurent_poly(1) - laurent_poly::monomial(1, 1, n);
}

// (a; q)_length with a = base_sign * q^base_power.
struct qsymbol_spec {
    int base_sign = 1;
    int base_power = 1;
    int length = 0;
};

inline laurent_poly pochhammer(const qsymbol_spec& spec)
{
    if (spec.length < 0)
        throw error(errc::out_of_range, "pochhammer length " + std::to_string(spec.length));
    laurent_poly r = 1;
    for (int i = 0; i < spec.length; ++i)
        r *= laurent_poly(1) - laurent_poly::monomial(spec.base_sign, 0, spec.base_power + i);
    return r;
}

// (q; q)_n
inline laurent_poly q_factorial_poch(int n) { return pochhammer({1, 1, n}); }

// (q; q^2)_i = (1-q)(1-q^3)...(1-q^{2i-1})
inline laurent_poly odd_pochhammer(int i)
{
    if (i < 0)
        throw error(errc::out_of_range, "odd_pochhammer(" + std::to_string(i) + ")");
    laurent_poly r = 1;
    for (int j = 0; j < i; ++j)
        r *= laurent_poly(1) - q_pow(2 * j + 1);
    return r;
}

/*
 * Gaussian binomial [n choose k]_q, or [n choose k]_{q^2} when squared is set.
 * Out-of-range arguments (k < 0, k > n, n < 0) give 0.
 */
inline laurent_poly gauss_binom(int n, int k, bool squared = false)
{
    if (n < 0 || k < 0 || k > n)
        return {};
    if (k > n - k)
        k = n - k;
    // q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j], one row at a time.
    std::vector<laurent_poly> row(static_cast<std::size_t>(k) + 1);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j)
            row[j] = row[j - 1] + row[j].shifted(0, j);
    }
    return squared ? row[k].q_to_power(2) : row[k];
}

inline big_int binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    big_int r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// C(2n, n-k) - C(2n, n-k-1).
inline big_int ballot(int n, int k)
{
    if (n < 0)
        throw error(errc::out_of_range, "ballot n=" + std::to_string(n));
    return binomial(2 * n, n - k) - binomial(2 * n, n - k - 1);
}

// C(m, n-k) - C(m, n-k-1) for an arbitrary top row m; ballot(n, k) is m = 2n.
inline big_int ballot_row(int m, int n, int k)
{
    return binomial(m, n - k) - binomial(m, n - k - 1);
}

// sum_{i=-k}^{k} (-q)^{i^2}
inline laurent_poly theta_sum(int k)
{
    laurent_poly r;
    for (int i = -k; i <= k; ++i)
        r += neg_q_pow(i * i);
    return r;
}

// sum_{i=-k}^{k} (-q)^{-i^2}
inline laurent_poly theta_sum_inverse(int k) { return theta_sum(k).invert_variables(); }

/*
 * (1-q) A_k(q); the cleared form stays in the polynomial ring.
 * A_k(q) = (sum_{|i|<=k} (-q)^{i^2} + q^{2k+1} sum_{|i|<=k-1} (-q)^{i^2}) / (1-q).
 */
inline laurent_poly a_k_poly(int k)
{
    if (k < 0)
        throw error(errc::out_of_range, "a_k_poly(" + std::to_string(k) + ")");
    if (k == 0)
        return laurent_poly(1) - q_pow(1);
    return theta_sum(k) + theta_sum(k - 1).shifted(0, 2 * k + 1);
}

} // namespace tqeuler
