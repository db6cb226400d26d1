#pragma once

#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>

#include <algorithm>
#include <cstddef>
#include <vector>

namespace tqeuler {

// Truncated power series in x with laurent_poly coefficients: x^0 .. x^order.
class series {
public:
    explicit series(std::size_t order)
        : coeffs_(order + 1)
    {
    }

    series(std::vector<laurent_poly> coeffs)
        : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            coeffs_.resize(1);
    }

    static series one(std::size_t order)
    {
        series s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const laurent_poly& operator[](std::size_t i) const { return coeffs_.at(i); }
    laurent_poly& operator[](std::size_t i) { return coeffs_.at(i); }
    const std::vector<laurent_poly>& coeffs() const noexcept { return coeffs_; }

    friend series operator+(const series& a, const series& b)
    {
        series r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i)
            r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend series operator-(const series& a, const series& b)
    {
        series r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i)
            r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }

    friend series operator*(const series& a, const series& b)
    {
        series r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= r.order(); ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::size_t j = 0; i + j <= r.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend bool operator==(const series&, const series&) = default;

    // Requires a constant term of exactly 1.
    series recip() const
    {
        if (coeffs_[0] != laurent_poly(1))
            throw error(errc::not_invertible, "constant term " + coeffs_[0].to_string());
        series r(order());
        r.coeffs_[0] = 1;
        for (std::size_t n = 1; n <= order(); ++n) {
            laurent_poly acc;
            for (std::size_t i = 1; i <= n; ++i)
                acc += coeffs_[i] * r.coeffs_[n - i];
            r.coeffs_[n] = -acc;
        }
        return r;
    }

private:
    std::vector<laurent_poly> coeffs_;
};

inline series series_add(const series& a, const series& b) { return a + b; }
inline series series_mul(const series& a, const series& b) { return a * b; }
inline series series_recip(const series& s) { return s.recip(); }

} // namespace tqeuler
