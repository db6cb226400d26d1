#pragma once

#include <tqeuler/combinat/caps.hpp>
#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace tqeuler {

struct marked_step {
    bool up = true;
    bool marked = false;

    friend bool operator==(const marked_step&, const marked_step&) = default;
};

class marked_dyck_path {
public:
    marked_dyck_path() = default;

    explicit marked_dyck_path(std::vector<marked_step> steps)
        : steps_(std::move(steps))
    {
        int h = 0;
        for (const auto& s : steps_) {
            h += s.up ? 1 : -1;
            if (h < 0)
                throw error(errc::out_of_range, "path dips below the axis");
        }
        if (h != 0)
            throw error(errc::out_of_range, "path does not return to height 0");
    }

    const std::vector<marked_step>& steps() const noexcept { return steps_; }
    int semilength() const noexcept { return static_cast<int>(steps_.size()) / 2; }

    // A marked up step immediately followed by a marked down step.
    bool has_marked_peak() const
    {
        for (std::size_t i = 0; i + 1 < steps_.size(); ++i)
            if (steps_[i].up && steps_[i].marked && !steps_[i + 1].up && steps_[i + 1].marked)
                return true;
        return false;
    }

    std::string to_string() const
    {
        std::string s;
        for (const auto& st : steps_)
            s += st.marked ? (st.up ? 'U' : 'D') : (st.up ? 'u' : 'd');
        return s;
    }

    friend bool operator==(const marked_dyck_path&, const marked_dyck_path&) = default;

private:
    std::vector<marked_step> steps_;
};

// h >= 1 -> a_h (or b_h).
using weight_rule = std::function<laurent_poly(int)>;

/*
 * wt(p; A, B): a_h for every unmarked up step between heights h-1 and h,
 * b_h for every unmarked down step between heights h and h-1; marked steps
 * weigh 1.
 */
inline laurent_poly path_weight(const marked_dyck_path& p, const weight_rule& a, const weight_rule& b)
{
    laurent_poly w = 1;
    int h = 0;
    for (const auto& s : p.steps()) {
        if (s.up) {
            ++h;
            if (!s.marked)
                w *= a(h);
        } else {
            if (!s.marked)
                w *= b(h);
            --h;
        }
    }
    return w;
}

namespace detail {

inline void visit_dyck_words(int n, std::vector<marked_step>& prefix, int height,
                             const std::function<void(const std::vector<marked_step>&)>& fn)
{
    const int len = static_cast<int>(prefix.size());
    if (len == 2 * n) {
        fn(prefix);
        return;
    }
    if (height + 1 <= 2 * n - len - 1) {
        prefix.push_back({true, false});
        visit_dyck_words(n, prefix, height + 1, fn);
        prefix.pop_back();
    }
    if (height > 0) {
        prefix.push_back({false, false});
        visit_dyck_words(n, prefix, height - 1, fn);
        prefix.pop_back();
    }
}

} // namespace detail

// D_n: unmarked Dyck paths of length 2n.
inline std::vector<marked_dyck_path> enum_dyck_paths(int n, const enumeration_caps& caps = enumeration_caps::from_env())
{
    require_within(n, caps.dyck, "dyck semilength");
    std::vector<marked_dyck_path> out;
    std::vector<marked_step> prefix;
    detail::visit_dyck_words(n, prefix, 0, [&](const std::vector<marked_step>& w) { out.emplace_back(w); });
    return out;
}

// sum over p in D_n of wt(p; A, B), by exhaustive enumeration.
inline laurent_poly dyck_weight_sum(int n, const weight_rule& a, const weight_rule& b,
                                    const enumeration_caps& caps = enumeration_caps::from_env())
{
    laurent_poly sum;
    for (const auto& p : enum_dyck_paths(n, caps))
        sum += path_weight(p, a, b);
    return sum;
}

// MD*_k: every marking of every Dyck path of length 2k without a marked peak.
inline std::vector<marked_dyck_path> enum_md_star(int k, const enumeration_caps& caps = enumeration_caps::from_env())
{
    require_within(k, caps.md_star, "md_star semilength");
    std::vector<marked_dyck_path> out;
    std::vector<marked_step> prefix;
    detail::visit_dyck_words(k, prefix, 0, [&](const std::vector<marked_step>& word) {
        const std::size_t len = word.size();
        for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
            std::vector<marked_step> steps = word;
            for (std::size_t i = 0; i < len; ++i)
                steps[i].marked = (mask >> i) & 1ul;
            marked_dyck_path p(std::move(steps));
            if (!p.has_marked_peak())
                out.push_back(std::move(p));
        }
    });
    return out;
}

// U = (-q, -q^2, ...)
inline laurent_poly u_weight(int h) { return laurent_poly::monomial(-1, 0, h); }
// V_t = (-tq, -tq^2, ...)
inline laurent_poly v_weight(int h) { return laurent_poly::monomial(-1, 1, h); }

// sum over p in MD*_k of wt(p; U, V_t). Every weight is a signed monomial, so
// the paths are streamed and tallied by exponent instead of materialized.
inline laurent_poly md_star_weight_sum(int k, const enumeration_caps& caps = enumeration_caps::from_env())
{
    require_within(k, caps.md_star, "md_star semilength");
    std::map<exponent, long long> tally;
    std::vector<marked_step> prefix;
    detail::visit_dyck_words(k, prefix, 0, [&](const std::vector<marked_step>& word) {
        const std::size_t len = word.size();
        for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
            bool peak = false;
            int h = 0;
            int sign = 1;
            exponent e;
            for (std::size_t i = 0; i < len; ++i) {
                const bool marked = (mask >> i) & 1ul;
                if (word[i].up) {
                    ++h;
                    if (marked && i + 1 < len && !word[i + 1].up && ((mask >> (i + 1)) & 1ul)) {
                        peak = true;
                        break;
                    }
                    if (!marked) {
                        sign = -sign;
                        e.q += h;
                    }
                } else {
                    if (!marked) {
                        sign = -sign;
                        e.t += 1;
                        e.q += h;
                    }
                    --h;
                }
            }
            if (!peak)
                tally[e] += sign;
        }
    });
    laurent_poly sum;
    for (const auto& [e, c] : tally)
        sum.add_term(e, c);
    return sum;
}

// The same sum for arbitrary sequences (used for the ballot-number reduction).
inline laurent_poly md_star_weight_sum(int k, const weight_rule& a, const weight_rule& b,
                                       const enumeration_caps& caps = enumeration_caps::from_env())
{
    laurent_poly sum;
    for (const auto& p : enum_md_star(k, caps))
        sum += path_weight(p, a, b);
    return sum;
}

} // namespace tqeuler
