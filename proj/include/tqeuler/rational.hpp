#pragma once

#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tqeuler {

// Always stored reduced with a positive denominator.
using big_rational = boost::multiprecision::cpp_rational;

inline big_rational make_rational(long long num, long long den = 1)
{
    if (den == 0)
        throw error(errc::zero_denominator, std::to_string(num) + "/0");
    if (den < 0) // the two-argument constructor rejects a negative denominator
        return big_rational(-big_int(num), -big_int(den));
    return big_rational(big_int(num), big_int(den));
}

inline std::string to_string(const big_rational& r)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline big_rational rational_pow(const big_rational& base, int e)
{
    if (e < 0) {
        if (base == 0)
            throw error(errc::zero_denominator, "0^" + std::to_string(e));
        return rational_pow(big_rational(1) / base, -e);
    }
    big_rational result = 1;
    big_rational b = base;
    unsigned n = static_cast<unsigned>(e);
    while (n != 0) {
        if (n & 1u)
            result *= b;
        n >>= 1;
        if (n != 0)
            b *= b;
    }
    return result;
}

inline big_rational rational_eval(const laurent_poly& p, const big_rational& t0, const big_rational& q0)
{
    big_rational sum = 0;
    for (const auto& [e, c] : p.terms())
        sum += big_rational(c) * rational_pow(t0, e.t) * rational_pow(q0, e.q);
    return sum;
}

} // namespace tqeuler
