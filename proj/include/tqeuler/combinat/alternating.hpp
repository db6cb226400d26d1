#pragma once

#include <tqeuler/combinat/caps.hpp>
#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tqeuler {

using permutation = std::vector<int>;

namespace detail {

inline void visit_up_down(int n, permutation& prefix, std::vector<bool>& used,
                          const std::function<void(const permutation&)>& fn)
{
    const int len = static_cast<int>(prefix.size());
    if (len == n) {
        fn(prefix);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[v])
            continue;
        // position len+1 (1-based) must be a peak when even, a valley when odd
        if (len > 0) {
            const bool rise = (len % 2 == 1);
            if (rise ? v < prefix.back() : v > prefix.back())
                continue;
        }
        used[v] = true;
        prefix.push_back(v);
        visit_up_down(n, prefix, used, fn);
        prefix.pop_back();
        used[v] = false;
    }
}

} // namespace detail

// pi_1 < pi_2 > pi_3 < ...
inline void for_each_alternating(int n, const std::function<void(const permutation&)>& fn,
                                 const enumeration_caps& caps = enumeration_caps::from_env())
{
    require_within(n, caps.alternating, "alternating n");
    if (n < 0)
        throw error(errc::out_of_range, "n < 0");
    permutation prefix;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    detail::visit_up_down(n, prefix, used, fn);
}

inline std::vector<permutation> enum_alternating(int n, const enumeration_caps& caps = enumeration_caps::from_env())
{
    std::vector<permutation> out;
    for_each_alternating(n, [&](const permutation& p) { out.push_back(p); }, caps);
    return out;
}

using permutation_statistic = std::function<int(const permutation&)>;

// Occurrences of 13-2: pi_i < pi_k < pi_{i+1} with k > i+1.
inline int pattern_13_2(const permutation& p)
{
    int c = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        for (std::size_t k = i + 2; k < p.size(); ++k)
            c += p[i] < p[k] && p[k] < p[i + 1];
    return c;
}

// Occurrences of 31-2: pi_{i+1} < pi_k < pi_i with k > i+1.
inline int pattern_31_2(const permutation& p)
{
    int c = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        for (std::size_t k = i + 2; k < p.size(); ++k)
            c += p[i + 1] < p[k] && p[k] < p[i];
    return c;
}

inline permutation_statistic statistic_by_name(std::string_view name)
{
    if (name == "13-2")
        return pattern_13_2;
    if (name == "31-2")
        return pattern_31_2;
    throw error(errc::out_of_range, "unknown statistic " + std::string(name));
}

// sum over up-down permutations of q^{stat(pi)}
inline laurent_poly alt_statistic_polynomial(int n, const permutation_statistic& stat = pattern_13_2,
                                             const enumeration_caps& caps = enumeration_caps::from_env())
{
    laurent_poly r;
    for_each_alternating(n, [&](const permutation& p) { r.add_term({0, stat(p)}, 1); }, caps);
    return r;
}

} // namespace tqeuler
