#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace exdef {

/// Strictly increasing set of variable indices {i1 < ... < ir}, the
/// dx_{i1} ^ ... ^ dx_{ir} part of a basis term.  Stored as a bitmask;
/// variable i occupies bit i-1.  Supports up to 32 variables, far beyond
/// anything the basis dimensions allow in practice.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::uint32_t mask) : mask_(mask) {}
    IndexSet(std::initializer_list<int> vars) {
        for (int v : vars) mask_ |= bit(v);
    }

    static constexpr int max_vars = 32;

    std::uint32_t mask() const { return mask_; }
    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    bool contains(int var) const { return mask_ & bit(var); }
    bool intersects(const IndexSet& other) const { return mask_ & other.mask_; }

    IndexSet with(int var) const { return IndexSet(mask_ | bit(var)); }
    IndexSet without(int var) const { return IndexSet(mask_ & ~bit(var)); }
    IndexSet united(const IndexSet& other) const { return IndexSet(mask_ | other.mask_); }

    /// 0-based position of `var` within the increasing enumeration.
    int position(int var) const {
        return std::popcount(mask_ & (bit(var) - 1));
    }

    /// Number of members strictly greater than `var`.
    int count_above(int var) const {
        return std::popcount(mask_ & ~((bit(var) << 1) - 1));
    }

    /// Number of members strictly less than `var`.
    int count_below(int var) const { return position(var); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint32_t m = mask_; m; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    bool operator==(const IndexSet& other) const = default;

    /// Lexicographic order on the increasing tuples, e.g. {1,4} < {2,3}.
    bool lex_less(const IndexSet& other) const {
        std::uint32_t diff = mask_ ^ other.mask_;
        if (diff == 0) return false;
        return mask_ & (diff & -diff);
    }

private:
    static std::uint32_t bit(int var) { return std::uint32_t{1} << (var - 1); }

    std::uint32_t mask_ = 0;
};

/// All r-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> index_sets_of_size(int var_count, int size);

}  // namespace exdef
