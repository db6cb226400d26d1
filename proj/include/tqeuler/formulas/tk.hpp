#pragma once

#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>
#include <tqeuler/qkit.hpp>

#include <string>
#include <vector>

namespace tqeuler {

struct tk_value {
    int k = 0;
    laurent_poly poly;
};

// T_0, ..., T_k from the recurrence
//   T_k = T_{k-1} + (1+t)(-q)^{k^2} + (1-t^2) sum_{i=1}^{k-1} (-q)^{k^2-i^2} T_{i-1}.
inline std::vector<laurent_poly> t_rec_table(int k)
{
    if (k < 0)
        throw error(errc::out_of_range, "k = " + std::to_string(k));
    const laurent_poly one_plus_t = laurent_poly(1) + t_pow(1);
    const laurent_poly one_minus_t2 = laurent_poly(1) - t_pow(2);
    std::vector<laurent_poly> tab{laurent_poly(1)};
    for (int m = 1; m <= k; ++m) {
        laurent_poly inner;
        for (int i = 1; i <= m - 1; ++i)
            inner += neg_q_pow(m * m - i * i) * tab[static_cast<std::size_t>(i - 1)];
        tab.push_back(tab.back() + one_plus_t * neg_q_pow(m * m) + one_minus_t2 * inner);
    }
    return tab;
}

inline laurent_poly t_rec(int k) { return t_rec_table(k).back(); }

inline tk_value tk(int k) { return {k, t_rec(k)}; }

namespace detail {

// flip_sign corrupts one transcribed sign (the t-term inside the bracket).
inline laurent_poly t_closed_impl(int k, bool flip_sign)
{
    if (k < 0)
        throw error(errc::out_of_range, "k = " + std::to_string(k));
    laurent_poly sum;
    for (int j = 0; j <= k; ++j) {
        for (int i = 0; i <= j; ++i) {
            const int sign = (j + i) % 2 == 0 ? 1 : -1;
            const laurent_poly head = laurent_poly::monomial(sign, 2 * i, j * j + i * i + i) *
                                      gauss_binom(k - j, i, true);
            const laurent_poly t_term = t_pow(1) * gauss_binom(k - i - 1, j - i - 1, true);
            const laurent_poly bracket = flip_sign ? gauss_binom(k - i, j - i, true) - t_term
                                                   : gauss_binom(k - i, j - i, true) + t_term;
            sum += head * bracket;
        }
    }
    return sum;
}

} // namespace detail

/*
 * T_k = sum_{j=0}^{k} sum_{i=0}^{j} (-1)^{j+i} t^{2i} q^{j^2+i^2+i} [k-j, i]_{q^2}
 *       ([k-i, j-i]_{q^2} + t [k-i-1, j-i-1]_{q^2})
 */
inline laurent_poly t_closed(int k) { return detail::t_closed_impl(k, false); }

// (1 - tq) T_k(tq, q) == T_k(t, q) + t^2 q^{2k+1} T_{k-1}(t, q)
inline bool t_functional_holds(int k, const laurent_poly& tk_poly, const laurent_poly& tk_prev)
{
    const laurent_poly lhs = (laurent_poly(1) - laurent_poly::monomial(1, 1, 1)) * tk_poly.t_times_q();
    const laurent_poly rhs = tk_poly + laurent_poly::monomial(1, 2, 2 * k + 1) * tk_prev;
    return lhs == rhs;
}

inline bool t_functional_check(int k)
{
    if (k < 1)
        throw error(errc::out_of_range, "functional equation needs k >= 1");
    const auto tab = t_rec_table(k);
    return t_functional_holds(k, tab[static_cast<std::size_t>(k)], tab[static_cast<std::size_t>(k - 1)]);
}

// t = eps * q^b, with b of either sign.
struct specialization {
    int eps = 1;
    int b = 0;
};

enum class special_branch { by_definition, pos_pos, neg_pos, pos_neg, neg_neg };

inline std::string to_string(special_branch br)
{
    switch (br) {
    case special_branch::by_definition:
        return "by-definition";
    case special_branch::pos_pos:
        return "++b";
    case special_branch::neg_pos:
        return "-+b";
    case special_branch::pos_neg:
        return "+-b";
    case special_branch::neg_neg:
        return "--b";
    }
    return "?";
}

struct special_result {
    laurent_poly value;
    special_branch branch = special_branch::by_definition;
};

inline laurent_poly substitute_special(const laurent_poly& p, specialization key)
{
    return p.substitute_t(key.eps, key.b);
}

namespace detail {

// t = q^b (eps = +1) or t = -q^b (eps = -1), b >= 0, k >= 1
inline laurent_poly t_special_nonneg(int eps, int b, int k)
{
    const laurent_poly denom = pochhammer({eps, 1, b});
    laurent_poly numer;
    for (int i = 0; i <= k - 1; ++i) {
        laurent_poly term = q_pow(i * (2 * k + 1)) * gauss_binom(b, i, true);
        if (eps == 1)
            term *= theta_sum(k - i);
        numer += term;
    }
    for (int i = 0; i <= b - 1; ++i)
        numer += pochhammer({eps, 1, i}) * q_pow(k * (2 * k + 2 * i + 1)) * gauss_binom(b - i - 1, k - 1, true);
    return div_exact(numer, denom);
}

// t = q^{-b}, b >= 1
inline laurent_poly t_special_pos_neg(int b, int k)
{
    laurent_poly sum;
    for (int i = 0; i <= b - 1; ++i)
        sum += pochhammer({1, 1 - b, i}) * neg_q_pow(k * (k - 2 * b + 2) + 2 * i) * gauss_binom(k + i - 1, i, true);
    return sum;
}

// t = -q^{-b}, b >= 1
inline laurent_poly t_special_neg_neg(int b, int k)
{
    const laurent_poly poch_b = pochhammer({-1, 1 - b, b});
    laurent_poly first;
    for (int i = 0; i <= k - 1; ++i)
        first += poch_b * neg_q_pow(i * (2 * k - 2 * b - i + 2)) * gauss_binom(b + i - 1, i, true);
    laurent_poly second;
    for (int i = 0; i <= b - 1; ++i)
        second += pochhammer({-1, 1 - b, i}) * q_pow(2 * i) * gauss_binom(k + i - 1, i, true);
    return first + neg_q_pow(k * k + 2 * k - 2 * k * b) * second;
}

} // namespace detail

/*
 * T_k(eps q^b, q) by the closed forms for the four sign quadrants. k = 0 is
 * answered as T_0 = 1 directly: the b >= 0 formulas are only stated for k >= 1,
 * and at k = 0 the b < 0 formulas meet [-1, 0] which is 0 under the
 * out-of-range convention used here.
 */
inline special_result t_special(specialization key, int k)
{
    if (k < 0)
        throw error(errc::out_of_range, "k = " + std::to_string(k));
    if (key.eps != 1 && key.eps != -1)
        throw error(errc::out_of_range, "eps must be +1 or -1");
    if (k == 0)
        return {laurent_poly(1), special_branch::by_definition};
    if (key.b >= 0)
        return {detail::t_special_nonneg(key.eps, key.b, k),
                key.eps == 1 ? special_branch::pos_pos : special_branch::neg_pos};
    if (key.eps == 1)
        return {detail::t_special_pos_neg(-key.b, k), special_branch::pos_neg};
    return {detail::t_special_neg_neg(-key.b, k), special_branch::neg_neg};
}

// The b < 0 formulas exactly as written, including at k = 0.
inline laurent_poly t_special_negative_literal(int eps, int b, int k)
{
    if (b < 1 || k < 0)
        throw error(errc::out_of_range, "needs b >= 1 and k >= 0");
    return eps == 1 ? detail::t_special_pos_neg(b, k) : detail::t_special_neg_neg(b, k);
}

// T_k(-q, q) = (1 + q^{2k+1}) / (1 + q)
inline laurent_poly t_minus_q(int k)
{
    if (k < 0)
        throw error(errc::out_of_range, "k = " + std::to_string(k));
    return div_exact(laurent_poly(1) + q_pow(2 * k + 1), laurent_poly(1) + q_pow(1));
}

// T_k(-1/q, q) = (-q)^{k^2} sum_{i=-k}^{k} (-q)^{-i^2}
inline laurent_poly t_minus_inv_q(int k)
{
    if (k < 0)
        throw error(errc::out_of_range, "k = " + std::to_string(k));
    return neg_q_pow(k * k) * theta_sum_inverse(k);
}

// T_k(q^b, q) = sum_i q^{C(i+1,2)} [b, i] sum_{j=-k}^{k-i} (-1)^j q^{j^2 + i(k+j)} [k+j+b, b]
inline laurent_poly t_prodinger(int b, int k)
{
    if (b < 1 || k < 0)
        throw error(errc::out_of_range, "needs b >= 1 and k >= 0");
    laurent_poly sum;
    for (int i = 0; i <= b; ++i) {
        laurent_poly inner;
        for (int j = -k; j <= k - i; ++j)
            inner += laurent_poly::monomial(j % 2 == 0 ? 1 : -1, 0, j * j + i * (k + j)) * gauss_binom(k + j + b, b);
        sum += q_pow(i * (i + 1) / 2) * gauss_binom(b, i) * inner;
    }
    return sum;
}

// alpha(b,k) = T_k(eps q^b, q):  alpha(b,k)(1 - eps q^b) = alpha(b-1,k) + q^{2k+2b-1} alpha(b-1,k-1)
inline bool alpha_recurrence_holds(int eps, int b, int k)
{
    const auto tab = t_rec_table(k);
    auto alpha = [&](int bb, int kk) { return tab[static_cast<std::size_t>(kk)].substitute_t(eps, bb); };
    const laurent_poly lhs = alpha(b, k) * (laurent_poly(1) - laurent_poly::monomial(eps, 0, b));
    const laurent_poly rhs = alpha(b - 1, k) + q_pow(2 * k + 2 * b - 1) * alpha(b - 1, k - 1);
    return lhs == rhs;
}

// beta(b,k) = T_k(eps q^{-b}, q):  beta(b,k) = (1 - eps q^{1-b}) beta(b-1,k) - q^{2k-2b+1} beta(b,k-1)
inline bool beta_recurrence_holds(int eps, int b, int k)
{
    const auto tab = t_rec_table(k);
    auto beta = [&](int bb, int kk) { return tab[static_cast<std::size_t>(kk)].substitute_t(eps, -bb); };
    const laurent_poly rhs = (laurent_poly(1) - laurent_poly::monomial(eps, 0, 1 - b)) * beta(b - 1, k) -
                             q_pow(2 * k - 2 * b + 1) * beta(b, k - 1);
    return beta(b, k) == rhs;
}

} // namespace tqeuler
