#pragma once

#include <tqeuler/combinat/caps.hpp>
#include <tqeuler/combinat/partition.hpp>
#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tqeuler {

/*
 * A partition inside delta_{k-1} together with k-arrows. A row arrow fills the
 * whole of row i of delta_k/lambda and so has length (k+1-i) - lambda_i; a
 * column arrow in column i has length (k+1-i) - lambda^tr_i. At most one arrow
 * per row and per column is representable.
 */
class delta_config {
public:
    delta_config(int k, partition shape, std::vector<bool> row_arrows, std::vector<bool> col_arrows)
        : k_(k)
        , shape_(std::move(shape))
        , conj_(shape_.conjugate())
        , rows_(std::move(row_arrows))
        , cols_(std::move(col_arrows))
    {
        if (k_ < 0 || static_cast<int>(rows_.size()) != k_ || static_cast<int>(cols_.size()) != k_)
            throw error(errc::out_of_range, "arrow sets must have one flag per row/column of delta_k");
        if (!shape_.fits_in_staircase(k_ - 1))
            throw error(errc::out_of_range, "shape " + shape_.to_string() + " is not inside delta_{k-1}");
    }

    int k() const noexcept { return k_; }
    const partition& shape() const noexcept { return shape_; }
    bool row_arrow(int i) const { return rows_.at(i - 1); }
    bool col_arrow(int i) const { return cols_.at(i - 1); }

    int row_arrow_length(int i) const { return (k_ + 1 - i) - shape_.part(i); }
    int col_arrow_length(int i) const { return (k_ + 1 - i) - conj_.part(i); }

    int arrow_count() const { return horizontal_count() + vertical_count(); }
    int horizontal_count() const { return static_cast<int>(std::count(rows_.begin(), rows_.end(), true)); }
    int vertical_count() const { return static_cast<int>(std::count(cols_.begin(), cols_.end(), true)); }

    int total_arrow_length() const
    {
        int len = 0;
        for (int i = 1; i <= k_; ++i) {
            if (row_arrow(i))
                len += row_arrow_length(i);
            if (col_arrow(i))
                len += col_arrow_length(i);
        }
        return len;
    }

    // An outer corner of lambda in delta_k covered by both a row and a column arrow.
    bool has_forbidden_corner() const
    {
        for (const cell& c : shape_.outer_corners_in_staircase(k_))
            if (row_arrow(c.row) && col_arrow(c.col))
                return true;
        return false;
    }

    // (-1)^{|A|} t^{ha(A)} q^{2|lambda| + ||A||}
    laurent_poly weight() const
    {
        return laurent_poly::monomial(arrow_count() % 2 == 0 ? 1 : -1, horizontal_count(),
                                      2 * shape_.size() + total_arrow_length());
    }

private:
    int k_;
    partition shape_;
    partition conj_;
    std::vector<bool> rows_;
    std::vector<bool> cols_;
};

inline void for_each_delta_prime(int k, const std::function<void(const delta_config&)>& fn,
                                 const enumeration_caps& caps = enumeration_caps::from_env())
{
    require_within(k, caps.delta_prime, "delta-prime k");
    if (k < 0)
        throw error(errc::out_of_range, "k < 0");
    const unsigned long subsets = 1ul << k;
    for (const partition& shape : enum_partitions_in_staircase(k - 1)) {
        for (unsigned long rmask = 0; rmask < subsets; ++rmask) {
            std::vector<bool> rows(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                rows[i] = (rmask >> i) & 1ul;
            for (unsigned long cmask = 0; cmask < subsets; ++cmask) {
                std::vector<bool> cols(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i)
                    cols[i] = (cmask >> i) & 1ul;
                delta_config c(k, shape, rows, std::move(cols));
                if (!c.has_forbidden_corner())
                    fn(c);
            }
        }
    }
}

inline std::vector<delta_config> enum_delta_prime(int k, const enumeration_caps& caps = enumeration_caps::from_env())
{
    std::vector<delta_config> out;
    for_each_delta_prime(k, [&](const delta_config& c) { out.push_back(c); }, caps);
    return out;
}

// T_k as the signed weight sum over Delta'_k configurations.
inline laurent_poly delta_prime_weight_sum(int k, const enumeration_caps& caps = enumeration_caps::from_env())
{
    std::map<exponent, long long> tally;
    for_each_delta_prime(
        k,
        [&](const delta_config& c) {
            tally[exponent{c.horizontal_count(), 2 * c.shape().size() + c.total_arrow_length()}] +=
                c.arrow_count() % 2 == 0 ? 1 : -1;
        },
        caps);
    laurent_poly sum;
    for (const auto& [e, v] : tally)
        sum.add_term(e, v);
    return sum;
}

// A partition whose inner corners may be marked.
class overpartition {
public:
    overpartition() = default;

    overpartition(partition shape, std::set<cell> marks)
        : shape_(std::move(shape))
        , marks_(std::move(marks))
    {
        const auto corners = shape_.inner_corners();
        for (const cell& m : marks_)
            if (std::find(corners.begin(), corners.end(), m) == corners.end())
                throw error(errc::out_of_range, "marked cell is not an inner corner");
    }

    const partition& shape() const noexcept { return shape_; }
    const std::set<cell>& marks() const noexcept { return marks_; }

    overpartition conjugate() const
    {
        std::set<cell> m;
        for (const cell& c : marks_)
            m.insert({c.col, c.row});
        return overpartition(shape_.conjugate(), std::move(m));
    }

    bool is_self_conjugate() const { return *this == conjugate(); }

    int size() const { return shape_.size(); }
    int mark_count() const { return static_cast<int>(marks_.size()); }

    int diagonal_cells() const
    {
        int d = 0;
        while (shape_.part(d + 1) >= d + 1)
            ++d;
        return d;
    }

    // (-1)^{diag + floor(mk/2)} t^{mk} q^{|nu|}
    laurent_poly sop_weight() const
    {
        const int sign_exp = diagonal_cells() + mark_count() / 2;
        return laurent_poly::monomial(sign_exp % 2 == 0 ? 1 : -1, mark_count(), size());
    }

    friend bool operator==(const overpartition&, const overpartition&) = default;

private:
    partition shape_;
    std::set<cell> marks_;
};

// sop(k): self-conjugate overpartitions with shape inside B(k, k).
inline std::vector<overpartition> enum_sop(int k, const enumeration_caps& caps = enumeration_caps::from_env())
{
    require_within(k, caps.sop, "sop k");
    std::vector<overpartition> out;
    for_each_partition_in_box(k, k, [&](const partition& shape) {
        if (!(shape == shape.conjugate()))
            return;
        // Corners pair up with their transposes; each orbit is marked as a whole.
        std::vector<std::vector<cell>> orbits;
        for (const cell& c : shape.inner_corners()) {
            if (c.row == c.col)
                orbits.push_back({c});
            else if (c.row < c.col)
                orbits.push_back({c, cell{c.col, c.row}});
        }
        const unsigned long subsets = 1ul << orbits.size();
        for (unsigned long mask = 0; mask < subsets; ++mask) {
            std::set<cell> marks;
            for (std::size_t i = 0; i < orbits.size(); ++i)
                if ((mask >> i) & 1ul)
                    marks.insert(orbits[i].begin(), orbits[i].end());
            out.emplace_back(shape, std::move(marks));
        }
    });
    return out;
}

inline laurent_poly sop_weight_sum(int k, const enumeration_caps& caps = enumeration_caps::from_env())
{
    laurent_poly sum;
    for (const auto& nu : enum_sop(k, caps))
        sum += nu.sop_weight();
    return sum;
}

} // namespace tqeuler
