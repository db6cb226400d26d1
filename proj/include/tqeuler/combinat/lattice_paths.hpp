#pragma once

#include <tqeuler/combinat/caps.hpp>
#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>
#include <tqeuler/qkit.hpp>

#include <functional>
#include <string>
#include <vector>

namespace tqeuler {

enum class lattice_step { west, southwest, south };

// Path on Z^2 from (start_x, start_y); areas below use unit squares of area 2.
struct lattice_path {
    int start_x = 0;
    int start_y = 0;
    std::vector<lattice_step> steps;

    std::pair<int, int> end() const
    {
        int x = start_x;
        int y = start_y;
        for (auto s : steps) {
            if (s != lattice_step::south)
                --x;
            if (s != lattice_step::west)
                --y;
        }
        return {x, y};
    }

    int count(lattice_step kind) const
    {
        int c = 0;
        for (auto s : steps)
            c += s == kind;
        return c;
    }
};

// ---- M-paths: (k, 0) -> (0, -j) by west and southwest steps ----------------

inline std::vector<lattice_path> enum_m_paths(int k, const enumeration_caps& caps = enumeration_caps::from_env())
{
    require_within(k, caps.m_path, "m-path k");
    if (k < 0)
        throw error(errc::out_of_range, "k < 0");
    std::vector<lattice_path> out;
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        lattice_path p{k, 0, {}};
        for (int i = 0; i < k; ++i)
            p.steps.push_back(((mask >> i) & 1ul) ? lattice_step::southwest : lattice_step::west);
        out.push_back(std::move(p));
    }
    return out;
}

/*
 * (-1)^j q^{A(R)} (1-t^2)^s V. R lies between the path and the x-axis; s counts
 * southwest steps immediately followed by a west step; V = 1+t when the last
 * step is southwest.
 */
inline laurent_poly m_path_weight(const lattice_path& p)
{
    int depth = 0; // current -y
    int area = 0;
    int s = 0;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i] == lattice_step::west) {
            area += 2 * depth;
        } else {
            area += 2 * depth + 1;
            ++depth;
            if (i + 1 < p.steps.size() && p.steps[i + 1] == lattice_step::west)
                ++s;
        }
    }
    const int j = depth;
    laurent_poly w = laurent_poly::monomial(j % 2 == 0 ? 1 : -1, 0, area);
    w *= (laurent_poly(1) - t_pow(2)).pow(static_cast<unsigned>(s));
    if (!p.steps.empty() && p.steps.back() == lattice_step::southwest)
        w *= laurent_poly(1) + t_pow(1);
    return w;
}

inline laurent_poly m_path_weight_sum(int k, const enumeration_caps& caps = enumeration_caps::from_env())
{
    laurent_poly sum;
    for (const auto& p : enum_m_paths(k, caps))
        sum += m_path_weight(p);
    return sum;
}

// ---- L- and L'-paths: (b, k) -> (m, n) with m*n = 0 --------------------------

namespace detail {

inline void check_endpoint(int b, int k, int m, int n)
{
    if (m * n != 0 || m < 0 || n < 0)
        throw error(errc::invalid_endpoint,
                    "(" + std::to_string(m) + "," + std::to_string(n) + ") is not on an axis");
    if (b < 0 || k < 0)
        throw error(errc::out_of_range, "start point must be in the first quadrant");
}

inline void visit_axis_paths(bool prime, int x, int y, int m, int n, lattice_path& p,
                             const std::function<void(const lattice_path&)>& fn)
{
    if (x == m && y == n) {
        fn(p);
        return;
    }
    // west: not on the x-axis
    if (x - 1 >= m && y > 0) {
        p.steps.push_back(lattice_step::west);
        visit_axis_paths(prime, x - 1, y, m, n, p, fn);
        p.steps.pop_back();
    }
    if (!prime) {
        if (x - 1 >= m && y - 1 >= n) {
            p.steps.push_back(lattice_step::southwest);
            visit_axis_paths(prime, x - 1, y - 1, m, n, p, fn);
            p.steps.pop_back();
        }
    } else if (y - 1 >= n && x > 0) { // south: not on the y-axis
        p.steps.push_back(lattice_step::south);
        visit_axis_paths(prime, x, y - 1, m, n, p, fn);
        p.steps.pop_back();
    }
}

/*
 * Area (in half-squares) of the part of [0,b]x[0,k] above the path, where the
 * path is continued along the x-axis to the origin when it ends at (m, 0).
 */
inline int area_above(const lattice_path& p, int k)
{
    int y = p.start_y;
    int area = 0;
    for (auto s : p.steps) {
        if (s == lattice_step::west) {
            area += 2 * (k - y);
        } else if (s == lattice_step::southwest) {
            area += 2 * (k - y) + 1;
            --y;
        } else {
            --y;
        }
    }
    const auto [ex, ey] = p.end();
    if (ey == 0)
        area += 2 * k * ex;
    return area;
}

} // namespace detail

// L[(b,k) -> (m,n)]: west and southwest steps, no west step on the x-axis.
inline std::vector<lattice_path> enum_l_paths(int b, int k, int m, int n,
                                              const enumeration_caps& caps = enumeration_caps::from_env())
{
    detail::check_endpoint(b, k, m, n);
    require_within(std::max(b, k), caps.l_path, "l-path start");
    std::vector<lattice_path> out;
    lattice_path p{b, k, {}};
    detail::visit_axis_paths(false, b, k, m, n, p, [&](const lattice_path& path) { out.push_back(path); });
    return out;
}

// L'[(b,k) -> (m,n)]: west and south steps, no west step on the x-axis, no
// south step on the y-axis.
inline std::vector<lattice_path> enum_lprime_paths(int b, int k, int m, int n,
                                                   const enumeration_caps& caps = enumeration_caps::from_env())
{
    detail::check_endpoint(b, k, m, n);
    require_within(std::max(b, k), caps.l_path, "l'-path start");
    std::vector<lattice_path> out;
    lattice_path p{b, k, {}};
    detail::visit_axis_paths(true, b, k, m, n, p, [&](const lattice_path& path) { out.push_back(path); });
    return out;
}

/*
 * Weighted L-path sum, returned multiplied through by prod_{i=m+1}^{b} (1 - eps q^i)
 * so that it is a Laurent polynomial: each path contributes
 * q^{A(R)} prod_{i=n+1}^{k} q^{2i}.
 */
inline laurent_poly l_path_weight_sum(int b, int k, int m, int n, int eps,
                                      const enumeration_caps& caps = enumeration_caps::from_env())
{
    int prefactor = 0;
    for (int i = n + 1; i <= k; ++i)
        prefactor += 2 * i;
    laurent_poly sum;
    for (const auto& p : enum_l_paths(b, k, m, n, caps))
        sum += q_pow(detail::area_above(p, k) + prefactor);
    (void)eps; // the eps-dependence lives entirely in the cleared denominator
    return sum;
}

// The denominator cleared by l_path_weight_sum: prod_{i=m+1}^{b} (1 - eps q^i).
inline laurent_poly l_path_clearing_factor(int b, int m, int eps)
{
    return pochhammer({eps, m + 1, b - m});
}

// q^{-A(R)} prod_{i=m+1}^{b} (1 - eps q^{1-i}) prod_{i=n+1}^{k} (-q^{2i+1}); no clearing needed.
inline laurent_poly lprime_path_weight_sum(int b, int k, int m, int n, int eps,
                                           const enumeration_caps& caps = enumeration_caps::from_env())
{
    laurent_poly factor = 1;
    for (int i = m + 1; i <= b; ++i)
        factor *= laurent_poly(1) - laurent_poly::monomial(eps, 0, 1 - i);
    for (int i = n + 1; i <= k; ++i)
        factor *= laurent_poly::monomial(-1, 0, 2 * i + 1);
    laurent_poly sum;
    for (const auto& p : enum_lprime_paths(b, k, m, n, caps))
        sum += q_pow(-detail::area_above(p, k));
    return sum * factor;
}

} // namespace tqeuler
