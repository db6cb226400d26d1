#pragma once

#include <tqeuler/combinat/caps.hpp>
#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>

#include <compare>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace tqeuler {

// (row, column), both 1-based as in a Ferrers diagram.
struct cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const cell&, const cell&) = default;
};

class partition {
public:
    partition() = default;

    explicit partition(std::vector<int> parts)
        : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw error(errc::out_of_range, "not a partition: parts must be positive and weakly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // lambda_i with lambda_i = 0 past the last part; i is 1-based.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    bool has_cell(cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= part(c.row); }

    partition conjugate() const
    {
        std::vector<int> out;
        for (int j = 1; j <= part(1); ++j) {
            int len = 0;
            while (part(len + 1) >= j)
                ++len;
            out.push_back(len);
        }
        return partition(std::move(out));
    }

    bool fits_in_box(int rows, int cols) const { return length() <= rows && part(1) <= cols; }

    // Inside delta_k = (k, k-1, ..., 1).
    bool fits_in_staircase(int k) const
    {
        for (int i = 1; i <= length(); ++i)
            if (part(i) > k + 1 - i)
                return false;
        return true;
    }

    int distinct_parts() const
    {
        int d = 0;
        for (int i = 1; i <= length(); ++i)
            if (part(i) != part(i + 1))
                ++d;
        return d;
    }

    // Cells whose removal leaves a partition, top to bottom.
    std::vector<cell> inner_corners() const
    {
        std::vector<cell> out;
        for (int i = 1; i <= length(); ++i)
            if (part(i) > part(i + 1))
                out.push_back({i, part(i)});
        return out;
    }

    // Cells whose addition gives a partition, restricted to delta_k.
    std::vector<cell> outer_corners_in_staircase(int k) const
    {
        std::vector<cell> out;
        for (int i = 1; i <= length() + 1; ++i) {
            const cell c{i, part(i) + 1};
            if ((i == 1 || part(i - 1) > part(i)) && c.row + c.col <= k + 1)
                out.push_back(c);
        }
        return out;
    }

    friend bool operator==(const partition&, const partition&) = default;

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

namespace detail {

// Weakly decreasing sequences with at most `rows` parts, each in [1, max_part],
// where part i is additionally bounded by cap(i).
inline void visit_bounded_partitions(int rows, int max_part, const std::function<int(int)>& cap,
                                     std::vector<int>& prefix, const std::function<void(const partition&)>& fn)
{
    fn(partition(prefix));
    const int i = static_cast<int>(prefix.size()) + 1;
    if (i > rows)
        return;
    const int bound = std::min(prefix.empty() ? max_part : prefix.back(), cap(i));
    for (int v = 1; v <= bound; ++v) {
        prefix.push_back(v);
        visit_bounded_partitions(rows, max_part, cap, prefix, fn);
        prefix.pop_back();
    }
}

} // namespace detail

inline void for_each_partition_in_box(int rows, int cols, const std::function<void(const partition&)>& fn)
{
    if (rows < 0 || cols < 0)
        return;
    std::vector<int> prefix;
    detail::visit_bounded_partitions(rows, cols, [cols](int) { return cols; }, prefix, fn);
}

// All lambda inside B(rows, cols), each once.
inline std::vector<partition> enum_partitions_in_box(int rows, int cols)
{
    std::vector<partition> out;
    for_each_partition_in_box(rows, cols, [&](const partition& p) { out.push_back(p); });
    return out;
}

// All lambda inside delta_k.
inline std::vector<partition> enum_partitions_in_staircase(int k)
{
    std::vector<partition> out;
    if (k <= 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> prefix;
    detail::visit_bounded_partitions(k, k, [k](int i) { return k + 1 - i; }, prefix,
                                     [&](const partition& p) { out.push_back(p); });
    return out;
}

// sum over lambda in B(m, n) of x^{dist(lambda)} q^{|lambda|}; x lives in the t slot.
inline laurent_poly dist_box_polynomial(int m, int n, const enumeration_caps& caps = enumeration_caps::from_env())
{
    require_within(std::max(m, n), caps.dist_box, "dist_box size");
    laurent_poly r;
    for_each_partition_in_box(m, n, [&](const partition& p) { r.add_term({p.distinct_parts(), p.size()}, 1); });
    return r;
}

// sum over lambda in B(m, n) of q^{|lambda|}
inline laurent_poly box_size_polynomial(int m, int n)
{
    laurent_poly r;
    for_each_partition_in_box(m, n, [&](const partition& p) { r.add_term({0, p.size()}, 1); });
    return r;
}

} // namespace tqeuler
