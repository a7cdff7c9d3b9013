#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace exdef {

/// Exponent vector of a monomial x^gamma over variables x1..xn.
/// Variable indices are 1-based throughout the library.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int var_count) : exps_(var_count, 0) {}
    MultiIndex(std::initializer_list<int> exps) : exps_(exps) {}

    static MultiIndex unit(int var_count, int var) {
        MultiIndex m(var_count);
        m.exps_[var - 1] = 1;
        return m;
    }

    int var_count() const { return static_cast<int>(exps_.size()); }
    int exponent(int var) const { return exps_[var - 1]; }

    /// |gamma|, the total degree.
    int degree() const {
        int total = 0;
        for (int e : exps_) total += e;
        return total;
    }

    /// gamma + e_var.
    MultiIndex plus(int var) const {
        MultiIndex m = *this;
        ++m.exps_[var - 1];
        return m;
    }

    /// gamma - e_var; requires exponent(var) >= 1.
    MultiIndex minus(int var) const {
        MultiIndex m = *this;
        --m.exps_[var - 1];
        return m;
    }

    MultiIndex operator+(const MultiIndex& other) const {
        MultiIndex m = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += other.exps_[i];
        return m;
    }

    bool operator==(const MultiIndex& other) const = default;
    /// Plain lexicographic order on the exponent vector.
    auto operator<=>(const MultiIndex& other) const = default;

private:
    std::vector<int> exps_;
};

/// Canonical term order on multi-indices: lex-descending, so that for a
/// fixed degree x1-heavy monomials come first (x1^2, x1*x2, x2^2, ...).
struct MultiIndexCanonicalLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return b < a;
    }
};

/// All exponent vectors of total degree `degree` over `var_count`
/// variables, in canonical (lex-descending) order.
std::vector<MultiIndex> monomials_of_degree(int var_count, int degree);

}  // namespace exdef
