#pragma once

#include <tqeuler/error.hpp>
#include <tqeuler/formulas/tk.hpp>
#include <tqeuler/laurent_poly.hpp>
#include <tqeuler/qkit.hpp>

#include <string>

// All E_n forms below are normalized: they return (1-q)^{2n} E_n.
namespace tqeuler {

namespace detail {

inline void require_n(int n)
{
    if (n < 0)
        throw error(errc::out_of_range, "n = " + std::to_string(n));
}

inline laurent_poly ballot_poly(int n, int k) { return laurent_poly(ballot(n, k)); }

} // namespace detail

// sum_k ballot(n,k) t^k q^{k(k+1)} T_k(1/t, 1/q)
inline laurent_poly e_main2(int n)
{
    detail::require_n(n);
    const auto tab = t_rec_table(n);
    laurent_poly sum;
    for (int k = 0; k <= n; ++k)
        sum += detail::ballot_poly(n, k) * laurent_poly::monomial(1, k, k * (k + 1)) *
               tab[static_cast<std::size_t>(k)].invert_variables();
    return sum;
}

// sum_k ballot(n,k) sum_{i,j>=0} (-1)^{k+i} q^{C(j+1,2)} (qt)^{k-j} [2k-j, j] [2k-2j, i]
inline laurent_poly e_jv_mu(int n)
{
    detail::require_n(n);
    laurent_poly sum;
    for (int k = 0; k <= n; ++k) {
        laurent_poly inner;
        // j > k or i > 2k-2j leave a vanishing binomial
        for (int j = 0; j <= 2 * k; ++j) {
            const laurent_poly bj = gauss_binom(2 * k - j, j);
            if (bj.is_zero())
                continue;
            for (int i = 0; i <= 2 * k; ++i) {
                const laurent_poly bi = gauss_binom(2 * k - 2 * j, i);
                if (bi.is_zero())
                    continue;
                const int sign = (k + i) % 2 == 0 ? 1 : -1;
                inner += laurent_poly::monomial(sign, k - j, j * (j + 1) / 2 + (k - j)) * bj * bi;
            }
        }
        sum += detail::ballot_poly(n, k) * inner;
    }
    return sum;
}

namespace detail {

// shift_exponent corrupts one transcribed exponent: C(k-i, 2) becomes C(k-i+1, 2).
inline laurent_poly e_ks_impl(int n, bool shift_exponent)
{
    require_n(n);
    laurent_poly sum;
    for (int k = 0; k <= n; ++k) {
        laurent_poly inner;
        for (int i = 0; i <= k; ++i) {
            const int d = shift_exponent ? k - i + 1 : k - i;
            inner += laurent_poly::monomial(1, i, d * (d - 1) / 2) * odd_pochhammer(i) * gauss_binom(k + i, k - i);
        }
        sum += ballot_poly(n, k) * neg_q_pow(k) * inner;
    }
    return sum;
}

} // namespace detail

// sum_k ballot(n,k) (-q)^k sum_{i=0}^{k} t^i q^{C(k-i,2)} (q;q^2)_i [k+i, k-i]
inline laurent_poly e_ks(int n) { return detail::e_ks_impl(n, false); }

// (1-q)^{2n} E_{2n}(q) = sum_k ballot(n,k) q^{k(k+1)} sum_{i=-k}^{k} (-q)^{-i^2}
inline laurent_poly e_seq(int n)
{
    detail::require_n(n);
    laurent_poly sum;
    for (int k = 0; k <= n; ++k)
        sum += detail::ballot_poly(n, k) * q_pow(k * (k + 1)) * theta_sum_inverse(k);
    return sum;
}

// (1-q)^{2n} E_{2n+1}(q) = sum_k ballot(n,k) q^{k(k+2)} A_k(1/q)
inline laurent_poly e_tan(int n)
{
    detail::require_n(n);
    // A_k(1/q) = a_k_poly(k)(1/q) / (1 - 1/q); the common denominator is divided out once.
    laurent_poly numer;
    for (int k = 0; k <= n; ++k)
        numer += detail::ballot_poly(n, k) * q_pow(k * (k + 2)) * a_k_poly(k).invert_variables();
    return div_exact(numer, laurent_poly(1) - q_pow(-1));
}

// (1-q)^n d_n = sum_k ballot(n,k) (-1)^k q^{k(k+1)/2}
inline laurent_poly dn_tr(int n)
{
    detail::require_n(n);
    laurent_poly sum;
    for (int k = 0; k <= n; ++k)
        sum += detail::ballot_poly(n, k) * laurent_poly::monomial(k % 2 == 0 ? 1 : -1, 0, k * (k + 1) / 2);
    return sum;
}

// (1-q)^{2n} E_{2n}(q) = sum_k ballot(n,k) sum_{i=0}^{2k} (-1)^{i+k} q^{i(2k-i)+k}
inline laurent_poly e_jv_original_even(int n)
{
    detail::require_n(n);
    laurent_poly sum;
    for (int k = 0; k <= n; ++k) {
        laurent_poly inner;
        for (int i = 0; i <= 2 * k; ++i)
            inner += laurent_poly::monomial((i + k) % 2 == 0 ? 1 : -1, 0, i * (2 * k - i) + k);
        sum += detail::ballot_poly(n, k) * inner;
    }
    return sum;
}

/*
 * (1-q)^{2n+1} E_{2n+1}(q) = sum_k (C(2n+1,n-k) - C(2n+1,n-k-1)) sum_{i=0}^{2k+1} (-1)^{i+k} q^{i(2k+2-i)}
 * One more factor of (1-q) than e_tan(n).
 */
inline laurent_poly e_jv_original_odd(int n)
{
    detail::require_n(n);
    laurent_poly sum;
    for (int k = 0; k <= n; ++k) {
        laurent_poly inner;
        for (int i = 0; i <= 2 * k + 1; ++i)
            inner += laurent_poly::monomial((i + k) % 2 == 0 ? 1 : -1, 0, i * (2 * k + 2 - i));
        sum += laurent_poly(ballot_row(2 * n + 1, n, k)) * inner;
    }
    return sum;
}

// (1-q)^{2n} E_n(-q, q) = sum_k ballot(n,k) (-1)^k q^{k^2} (1 + q^{2k+1}) / (1 + q)
inline laurent_poly e_minus_q(int n)
{
    detail::require_n(n);
    const laurent_poly one_plus_q = laurent_poly(1) + q_pow(1);
    laurent_poly sum;
    for (int k = 0; k <= n; ++k) {
        const laurent_poly pair = laurent_poly::monomial(k % 2 == 0 ? 1 : -1, 0, k * k) *
                                  (laurent_poly(1) + q_pow(2 * k + 1));
        sum += detail::ballot_poly(n, k) * div_exact(pair, one_plus_q);
    }
    return sum;
}

// (1-q)^{2n} E_n(-1/q, q) = sum_k ballot(n,k) sum_{i=-k}^{k} (-q)^{i^2}
inline laurent_poly e_minus_inv_q(int n)
{
    detail::require_n(n);
    laurent_poly sum;
    for (int k = 0; k <= n; ++k)
        sum += detail::ballot_poly(n, k) * theta_sum(k);
    return sum;
}

} // namespace tqeuler
