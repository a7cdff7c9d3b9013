#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "exdef/index_set.hpp"
#include "exdef/multi_index.hpp"
#include "exdef/polynomial.hpp"
#include "exdef/rational.hpp"

namespace exdef {

/// Basis label x^gamma dx_I.
struct FormTermKey {
    MultiIndex gamma;
    IndexSet dx;

    bool operator==(const FormTermKey& other) const = default;
};

/// Canonical term order: dx part lexicographically, then monomial part
/// lex-descending.  Both the term maps and the basis enumerator follow it,
/// so rendering and matrix column order agree by construction.
struct FormTermLess {
    bool operator()(const FormTermKey& a, const FormTermKey& b) const {
        if (a.dx != b.dx) return a.dx.lex_less(b.dx);
        return b.gamma < a.gamma;
    }
};

/// Element of Omega^r(b): exact-rational combination of basis terms
/// x^gamma dx_I with |I| = r and |gamma| + r = b.  Index sets are strictly
/// increasing; permutation signs are folded into coefficients on
/// construction.  A zero form keeps its (n, r, b) tag; tags outside the
/// habitable range (r < 0, r > n, b < r) are allowed but force the form
/// to be zero.
class HomogeneousForm {
public:
    using TermMap = std::map<FormTermKey, Rational, FormTermLess>;

    HomogeneousForm(int var_count, int form_degree, int weight)
        : n_(var_count), r_(form_degree), b_(weight) {}

    static HomogeneousForm zero(int var_count, int form_degree, int weight) {
        return HomogeneousForm(var_count, form_degree, weight);
    }

    /// x^gamma dx_I with I already increasing.
    static HomogeneousForm basis(int var_count, const MultiIndex& gamma,
                                 const IndexSet& dx, const Rational& coeff = 1);

    /// r = 0 embedding of a polynomial.
    static HomogeneousForm from_polynomial(const HomogeneousPolynomial& p);

    /// Constant 1 in Omega^0(0).
    static HomogeneousForm one(int var_count);

    int var_count() const { return n_; }
    int form_degree() const { return r_; }
    int weight() const { return b_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const FormTermKey& key) const;

    /// Accumulates coeff * x^gamma dx_I; drops cancelled terms.  Throws
    /// StructuralError when the key does not match this form's bidegree.
    void add_term(const MultiIndex& gamma, const IndexSet& dx, const Rational& coeff);

    /// Accumulates a term given an arbitrary (possibly unsorted) list of
    /// dx indices, normalizing the permutation sign; a repeated index
    /// makes the term vanish.
    void add_term_signed(const MultiIndex& gamma, const std::vector<int>& dx_list,
                         const Rational& coeff);

    /// The polynomial coefficient sitting in front of dx_I.
    HomogeneousPolynomial component(const IndexSet& dx) const;

    bool operator==(const HomogeneousForm& other) const;

private:
    int n_;
    int r_;
    int b_;
    TermMap terms_;
};

HomogeneousForm form_add(const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm form_sub(const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm form_scale(const HomogeneousForm& a, const Rational& c);
HomogeneousForm form_neg(const HomogeneousForm& a);

/// Multiplication by a homogeneous polynomial (weight raises by its degree).
HomogeneousForm form_poly_mul(const HomogeneousPolynomial& f, const HomogeneousForm& a);

/// Enumerates the basis x^gamma dx_I of Omega^r(b) in canonical order:
/// exactly binomial(n,r) * binomial(n-1+b-r, b-r) elements.
class FormBasis {
public:
    FormBasis(int var_count, int form_degree, int weight);

    std::size_t size() const { return keys_.size(); }
    const FormTermKey& at(std::size_t index) const { return keys_[index]; }
    const std::vector<FormTermKey>& keys() const { return keys_; }
    /// Position of a key in the enumeration; throws StructuralError if absent.
    std::size_t index_of(const FormTermKey& key) const;

    int var_count() const { return n_; }
    int form_degree() const { return r_; }
    int weight() const { return b_; }

private:
    int n_, r_, b_;
    std::vector<FormTermKey> keys_;
    std::map<FormTermKey, std::size_t, FormTermLess> index_;
};

/// dim Omega^r(b) without materializing the basis.
std::size_t form_dimension(int var_count, int form_degree, int weight);

/// Exact binomial coefficient (desk scale).
std::size_t binomial(int n, int k);

}  // namespace exdef
