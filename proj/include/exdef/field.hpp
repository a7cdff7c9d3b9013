#pragma once

#include <map>
#include <vector>

#include "exdef/form.hpp"
#include "exdef/multi_index.hpp"
#include "exdef/polynomial.hpp"
#include "exdef/rational.hpp"

namespace exdef {

/// Basis label x^gamma d/dx_dir.
struct FieldTermKey {
    MultiIndex gamma;
    int dir = 0;

    bool operator==(const FieldTermKey& other) const = default;
};

struct FieldTermLess {
    bool operator()(const FieldTermKey& a, const FieldTermKey& b) const {
        if (a.dir != b.dir) return a.dir < b.dir;
        return b.gamma < a.gamma;
    }
};

/// Element of T(b), the vector fields of weight b: each d/dx_i carries
/// weight -1, so |gamma| - 1 = b for every stored term.  b >= -1.
class HomogeneousField {
public:
    using TermMap = std::map<FieldTermKey, Rational, FieldTermLess>;

    HomogeneousField(int var_count, int weight) : n_(var_count), b_(weight) {}

    static HomogeneousField zero(int var_count, int weight) {
        return HomogeneousField(var_count, weight);
    }

    /// x^gamma d/dx_dir.
    static HomogeneousField basis(int var_count, const MultiIndex& gamma, int dir,
                                  const Rational& coeff = 1);

    /// d/dx_dir, an element of T(-1).
    static HomogeneousField coordinate(int var_count, int dir);

    int var_count() const { return n_; }
    int weight() const { return b_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const MultiIndex& gamma, int dir, const Rational& coeff);

    /// The polynomial coefficient of d/dx_dir.
    HomogeneousPolynomial component(int dir) const;

    bool operator==(const HomogeneousField& other) const;

private:
    int n_;
    int b_;
    TermMap terms_;
};

HomogeneousField field_add(const HomogeneousField& a, const HomogeneousField& b);
HomogeneousField field_scale(const HomogeneousField& a, const Rational& c);
HomogeneousField field_poly_mul(const HomogeneousPolynomial& f,
                                const HomogeneousField& a);

/// The radial field R = sum_i x_i d/dx_i, an element of T(0).
HomogeneousField radial_field(int var_count);

/// Basis x^gamma d/dx_i of T(b) in canonical order (|gamma| = b+1).
class FieldBasis {
public:
    FieldBasis(int var_count, int weight);

    std::size_t size() const { return keys_.size(); }
    const FieldTermKey& at(std::size_t index) const { return keys_[index]; }
    std::size_t index_of(const FieldTermKey& key) const;

private:
    std::vector<FieldTermKey> keys_;
    std::map<FieldTermKey, std::size_t, FieldTermLess> index_;
};

std::size_t field_dimension(int var_count, int weight);

}  // namespace exdef
