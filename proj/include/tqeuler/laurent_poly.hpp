#pragma once

#include <tqeuler/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace tqeuler {

using big_int = boost::multiprecision::cpp_int;

// Exponent pair of a monomial t^t q^q. Ordering is lexicographic (t first),
// which is also the canonical serialization order.
struct exponent {
    int t = 0;
    int q = 0;

    friend auto operator<=>(const exponent&, const exponent&) = default;
};

/*
 * Sparse Laurent polynomial in t and q with arbitrary-precision integer
 * coefficients. The term map never stores a zero coefficient, so two values
 * are equal exactly when their maps are equal.
 */
class laurent_poly {
public:
    using term_map = std::map<exponent, big_int>;

    laurent_poly() = default;

    laurent_poly(long long constant) // NOLINT: implicit constants read naturally in formulas
    {
        if (constant != 0)
            terms_.emplace(exponent{}, big_int(constant));
    }

    laurent_poly(const big_int& constant)
    {
        if (constant != 0)
            terms_.emplace(exponent{}, constant);
    }

    static laurent_poly monomial(const big_int& coeff, int et, int eq)
    {
        laurent_poly p;
        if (coeff != 0)
            p.terms_.emplace(exponent{et, eq}, coeff);
        return p;
    }

    static laurent_poly from_terms(std::initializer_list<std::pair<exponent, long long>> terms)
    {
        laurent_poly p;
        for (const auto& [e, c] : terms)
            p.add_term(e, big_int(c));
        return p;
    }

    static laurent_poly t() { return monomial(1, 1, 0); }
    static laurent_poly q() { return monomial(1, 0, 1); }

    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    big_int coeff(int et, int eq) const
    {
        auto it = terms_.find(exponent{et, eq});
        return it == terms_.end() ? big_int(0) : it->second;
    }

    void add_term(exponent e, const big_int& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    laurent_poly& operator+=(const laurent_poly& other)
    {
        for (const auto& [e, c] : other.terms_)
            add_term(e, c);
        return *this;
    }

    laurent_poly& operator-=(const laurent_poly& other)
    {
        for (const auto& [e, c] : other.terms_)
            add_term(e, -c);
        return *this;
    }

    laurent_poly& operator*=(const laurent_poly& other)
    {
        *this = *this * other;
        return *this;
    }

    friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
    friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }

    friend laurent_poly operator-(laurent_poly a)
    {
        for (auto& [e, c] : a.terms_)
            c = -c;
        return a;
    }

    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b)
    {
        laurent_poly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(exponent{ea.t + eb.t, ea.q + eb.q}, ca * cb);
        return r;
    }

    friend bool operator==(const laurent_poly&, const laurent_poly&) = default;

    laurent_poly pow(unsigned n) const
    {
        laurent_poly result = 1;
        laurent_poly base = *this;
        while (n != 0) {
            if (n & 1u)
                result *= base;
            n >>= 1;
            if (n != 0)
                base *= base;
        }
        return result;
    }

    // Multiply by t^dt q^dq.
    laurent_poly shifted(int dt, int dq) const
    {
        laurent_poly r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace_hint(r.terms_.end(), exponent{e.t + dt, e.q + dq}, c);
        return r;
    }

    laurent_poly scaled(const big_int& factor) const
    {
        if (factor == 0)
            return {};
        laurent_poly r = *this;
        for (auto& [e, c] : r.terms_)
            c *= factor;
        return r;
    }

    // t -> sign * q^power.
    laurent_poly substitute_t(int sign, int power) const
    {
        laurent_poly r;
        for (const auto& [e, c] : terms_) {
            const bool flip = sign < 0 && (e.t % 2 != 0);
            r.add_term(exponent{0, e.q + e.t * power}, flip ? big_int(-c) : c);
        }
        return r;
    }

    // t -> 0; undefined (and rejected) when negative t-powers are present.
    laurent_poly t_at_zero() const
    {
        laurent_poly r;
        for (const auto& [e, c] : terms_) {
            if (e.t < 0)
                throw error(errc::zero_denominator, "t -> 0 with a negative power of t");
            if (e.t == 0)
                r.terms_.emplace(e, c);
        }
        return r;
    }

    // t -> t*q.
    laurent_poly t_times_q() const
    {
        laurent_poly r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(exponent{e.t, e.q + e.t}, c);
        return r;
    }

    // q -> q^m (m != 0).
    laurent_poly q_to_power(int m) const
    {
        laurent_poly r;
        for (const auto& [e, c] : terms_)
            r.add_term(exponent{e.t, e.q * m}, c);
        return r;
    }

    // (e_t, e_q) -> (-e_t, -e_q), i.e. t -> 1/t and q -> 1/q.
    laurent_poly invert_variables() const
    {
        laurent_poly r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(exponent{-e.t, -e.q}, c);
        return r;
    }

    std::optional<exponent> min_exponents() const
    {
        if (terms_.empty())
            return std::nullopt;
        exponent m = terms_.begin()->first;
        for (const auto& [e, c] : terms_) {
            m.t = std::min(m.t, e.t);
            m.q = std::min(m.q, e.q);
        }
        return m;
    }

    std::optional<exponent> max_exponents() const
    {
        if (terms_.empty())
            return std::nullopt;
        exponent m = terms_.begin()->first;
        for (const auto& [e, c] : terms_) {
            m.t = std::max(m.t, e.t);
            m.q = std::max(m.q, e.q);
        }
        return m;
    }

    // Canonical text: terms in (e_t, e_q) order, e.g. "1 - q - t*q".
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool negative = c < 0;
            const big_int mag = negative ? big_int(-c) : c;
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;

            std::string mono;
            auto append_var = [&](char var, int power) {
                if (power == 0)
                    return;
                if (!mono.empty())
                    mono += '*';
                mono += var;
                if (power != 1)
                    mono += '^' + std::to_string(power);
            };
            append_var('t', e.t);
            append_var('q', e.q);

            if (mono.empty())
                out += mag.str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.str() + '*' + mono;
        }
        return out;
    }

private:
    term_map terms_;
};

inline laurent_poly t_pow(int e) { return laurent_poly::monomial(1, e, 0); }
inline laurent_poly q_pow(int e) { return laurent_poly::monomial(1, 0, e); }

// (-q)^e for e >= 0.
inline laurent_poly neg_q_pow(int e)
{
    return laurent_poly::monomial(e % 2 == 0 ? 1 : -1, 0, e);
}

inline laurent_poly add(const laurent_poly& a, const laurent_poly& b) { return a + b; }
inline laurent_poly mul(const laurent_poly& a, const laurent_poly& b) { return a * b; }

inline laurent_poly substitute_monomial(const laurent_poly& p, int sign, int power)
{
    return p.substitute_t(sign, power);
}

inline laurent_poly invert_variables(const laurent_poly& p) { return p.invert_variables(); }

namespace detail {

inline big_int floor_div_exact(const big_int& a, const big_int& b, bool& ok)
{
    ok = (a % b) == 0;
    return ok ? big_int(a / b) : big_int(0);
}

} // namespace detail

/*
 * Exact quotient a / b in Z[t, 1/t, q, 1/q]. Both operands are shifted so that
 * their minimal t- and q-exponents are zero; the quotient of the shifted
 * polynomials is then a genuine polynomial and lex-order long division either
 * reaches remainder zero or proves non-divisibility.
 */
inline laurent_poly div_exact(const laurent_poly& a, const laurent_poly& b)
{
    if (b.is_zero())
        throw error(errc::non_divisible, "division by the zero polynomial");
    if (a.is_zero())
        return {};

    const exponent amin = *a.min_exponents();
    const exponent bmin = *b.min_exponents();
    laurent_poly rem = a.shifted(-amin.t, -amin.q);
    const laurent_poly divisor = b.shifted(-bmin.t, -bmin.q);
    const auto& [lead_e, lead_c] = *divisor.terms().rbegin();

    laurent_poly quotient;
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().rbegin();
        const int dt = re.t - lead_e.t;
        const int dq = re.q - lead_e.q;
        bool ok = false;
        const big_int c = detail::floor_div_exact(rc, lead_c, ok);
        if (dt < 0 || dq < 0 || !ok)
            throw error(errc::non_divisible, "(" + a.to_string() + ") / (" + b.to_string() + ")");
        const laurent_poly term = laurent_poly::monomial(c, dt, dq);
        quotient += term;
        rem -= term * divisor;
    }
    return quotient.shifted(amin.t - bmin.t, amin.q - bmin.q);
}

inline laurent_poly div_exact(const laurent_poly& a, const big_int& d)
{
    if (d == 0)
        throw error(errc::non_divisible, "division by zero");
    laurent_poly r;
    for (const auto& [e, c] : a.terms()) {
        if (c % d != 0)
            throw error(errc::non_divisible, "(" + a.to_string() + ") / " + d.str());
        r.add_term(e, c / d);
    }
    return r;
}

} // namespace tqeuler
