#pragma once

#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>
#include <tqeuler/qkit.hpp>

namespace tqeuler {

// sum_{i=0}^{m} q^{C(i+1,2)} [n, i] [n+m-i, m-i] (x-1)^i with x in the t slot.
inline laurent_poly dist_box_closed(int m, int n)
{
    if (m < 0 || n < 0)
        throw error(errc::out_of_range, "box dimensions must be nonnegative");
    const laurent_poly x_minus_1 = t_pow(1) - laurent_poly(1);
    laurent_poly sum;
    for (int i = 0; i <= m; ++i)
        sum += q_pow(i * (i + 1) / 2) * gauss_binom(n, i) * gauss_binom(n + m - i, m - i) *
               x_minus_1.pow(static_cast<unsigned>(i));
    return sum;
}

/*
 * Closed forms of the weighted L- and L'-path sums. The L forms are given in the
 * same cleared convention as l_path_weight_sum, i.e. multiplied by
 * prod_{i=m+1}^{b} (1 - eps q^i); they do not depend on eps.
 */

// endpoint (0, n), n >= 1: q^{(k-n)(2k+1)} [b, k-n]_{q^2}
inline laurent_poly l_lemma_axis_y(int b, int k, int n)
{
    return q_pow((k - n) * (2 * k + 1)) * gauss_binom(b, k - n, true);
}

// endpoint (m, 0), k >= 1: q^{k(2k+2m+1)} [b-m-1, k-1]_{q^2}
inline laurent_poly l_lemma_axis_x(int b, int k, int m)
{
    return q_pow(k * (2 * k + 2 * m + 1)) * gauss_binom(b - m - 1, k - 1, true);
}

// endpoint (0, n), n >= 1: (eps q^{1-b}; q)_b (-q)^{(k-n)(k+n-2b+2)} [b+k-n-1, k-n]_{q^2}
inline laurent_poly lprime_lemma_axis_y(int b, int k, int n, int eps)
{
    return pochhammer({eps, 1 - b, b}) * neg_q_pow((k - n) * (k + n - 2 * b + 2)) *
           gauss_binom(b + k - n - 1, k - n, true);
}

// endpoint (m, 0), m >= 1: (eps q^{1-b}; q)_{b-m} (-q)^{k(k-2b+2)+2(b-m)} [k+b-m-1, b-m]_{q^2}
inline laurent_poly lprime_lemma_axis_x(int b, int k, int m, int eps)
{
    if (m > b)
        return {};
    return pochhammer({eps, 1 - b, b - m}) * neg_q_pow(k * (k - 2 * b + 2) + 2 * (b - m)) *
           gauss_binom(k + b - m - 1, b - m, true);
}

} // namespace tqeuler
