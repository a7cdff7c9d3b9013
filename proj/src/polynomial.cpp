#include "exdef/polynomial.hpp"

#include "exdef/errors.hpp"

namespace exdef {

HomogeneousPolynomial HomogeneousPolynomial::constant(int var_count,
                                                      const Rational& value) {
    HomogeneousPolynomial p(var_count, 0);
    p.add_term(MultiIndex(var_count), value);
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(int var_count,
                                                      const MultiIndex& gamma,
                                                      const Rational& coeff) {
    HomogeneousPolynomial p(var_count, gamma.degree());
    p.add_term(gamma, coeff);
    return p;
}

HomogeneousPolynomial HomogeneousPolynomial::variable(int var_count, int var) {
    if (var < 1 || var > var_count)
        throw StructuralError("variable index out of range");
    return monomial(var_count, MultiIndex::unit(var_count, var));
}

Rational HomogeneousPolynomial::coeff(const MultiIndex& gamma) const {
    auto it = terms_.find(gamma);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousPolynomial::add_term(const MultiIndex& gamma, const Rational& coeff) {
    if (gamma.var_count() != n_)
        throw StructuralError("multi-index has wrong variable count");
    if (gamma.degree() != degree_)
        throw StructuralError("multi-index degree does not match polynomial degree");
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.emplace(gamma, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

HomogeneousPolynomial poly_add(const HomogeneousPolynomial& p,
                               const HomogeneousPolynomial& q) {
    if (p.var_count() != q.var_count())
        throw StructuralError("poly_add: variable count mismatch");
    if (p.degree() != q.degree())
        throw StructuralError("poly_add: degree mismatch");
    HomogeneousPolynomial out = p;
    for (const auto& [gamma, c] : q.terms()) out.add_term(gamma, c);
    return out;
}

HomogeneousPolynomial poly_mul(const HomogeneousPolynomial& p,
                               const HomogeneousPolynomial& q) {
    if (p.var_count() != q.var_count())
        throw StructuralError("poly_mul: variable count mismatch");
    HomogeneousPolynomial out(p.var_count(), p.degree() + q.degree());
    for (const auto& [g1, c1] : p.terms())
        for (const auto& [g2, c2] : q.terms())
            out.add_term(g1 + g2, c1 * c2);
    return out;
}

HomogeneousPolynomial poly_scale(const HomogeneousPolynomial& p, const Rational& c) {
    HomogeneousPolynomial out(p.var_count(), p.degree());
    if (sgn(c) == 0) return out;
    for (const auto& [gamma, coeff] : p.terms()) out.add_term(gamma, coeff * c);
    return out;
}

HomogeneousPolynomial poly_neg(const HomogeneousPolynomial& p) {
    return poly_scale(p, Rational(-1));
}

HomogeneousPolynomial partial(const HomogeneousPolynomial& p, int var) {
    if (var < 1 || var > p.var_count())
        throw StructuralError("partial: variable index out of range");
    HomogeneousPolynomial out(p.var_count(), p.degree() - 1);
    if (p.degree() == 0) return HomogeneousPolynomial::zero(p.var_count(), 0);
    for (const auto& [gamma, coeff] : p.terms()) {
        int e = gamma.exponent(var);
        if (e == 0) continue;
        out.add_term(gamma.minus(var), coeff * e);
    }
    return out;
}

}  // namespace exdef
