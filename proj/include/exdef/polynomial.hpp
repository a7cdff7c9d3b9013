#pragma once

#include <map>
#include <string>

#include "exdef/multi_index.hpp"
#include "exdef/rational.hpp"

namespace exdef {

/// Homogeneous polynomial over Q: a finite map from degree-c multi-indices
/// to nonzero rational coefficients.  The zero polynomial keeps its (n, c)
/// tag.  Immutable in spirit: all operations return fresh values.
class HomogeneousPolynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, MultiIndexCanonicalLess>;

    HomogeneousPolynomial(int var_count, int degree)
        : n_(var_count), degree_(degree) {}

    static HomogeneousPolynomial zero(int var_count, int degree) {
        return HomogeneousPolynomial(var_count, degree);
    }
    static HomogeneousPolynomial constant(int var_count, const Rational& value);
    static HomogeneousPolynomial monomial(int var_count, const MultiIndex& gamma,
                                          const Rational& coeff = 1);
    static HomogeneousPolynomial variable(int var_count, int var);

    int var_count() const { return n_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of x^gamma (zero when absent).
    Rational coeff(const MultiIndex& gamma) const;

    void add_term(const MultiIndex& gamma, const Rational& coeff);

    bool operator==(const HomogeneousPolynomial& other) const {
        return n_ == other.n_ && degree_ == other.degree_ && terms_ == other.terms_;
    }

private:
    int n_;
    int degree_;
    TermMap terms_;
};

/// Exact coefficientwise sum; throws StructuralError on mismatched
/// variable count or degree.
HomogeneousPolynomial poly_add(const HomogeneousPolynomial& p,
                               const HomogeneousPolynomial& q);

/// Exact product of degree p.degree()+q.degree(); throws StructuralError
/// on mismatched variable count.
HomogeneousPolynomial poly_mul(const HomogeneousPolynomial& p,
                               const HomogeneousPolynomial& q);

HomogeneousPolynomial poly_scale(const HomogeneousPolynomial& p, const Rational& c);

HomogeneousPolynomial poly_neg(const HomogeneousPolynomial& p);

/// d/dx_var; homogeneous of degree c-1 (zero polynomial when c = 0).
HomogeneousPolynomial partial(const HomogeneousPolynomial& p, int var);

}  // namespace exdef
