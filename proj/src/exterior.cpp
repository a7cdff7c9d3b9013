#include "exdef/exterior.hpp"

#include "exdef/errors.hpp"

namespace exdef {

HomogeneousForm wedge(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.var_count() != b.var_count())
        throw StructuralError("wedge: variable count mismatch");
    HomogeneousForm out(a.var_count(), a.form_degree() + b.form_degree(),
                        a.weight() + b.weight());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.dx.intersects(kb.dx)) continue;
            // sign of sorting I followed by J into the merged increasing set
            int inversions = 0;
            for (int j : kb.dx.to_vector()) inversions += ka.dx.count_above(j);
            Rational c = ca * cb;
            if (inversions % 2 != 0) c = -c;
            out.add_term(ka.gamma + kb.gamma, ka.dx.united(kb.dx), c);
        }
    }
    return out;
}

HomogeneousForm ext_d(const HomogeneousForm& tau) {
    HomogeneousForm out(tau.var_count(), tau.form_degree() + 1, tau.weight());
    for (const auto& [key, c] : tau.terms()) {
        for (int k = 1; k <= tau.var_count(); ++k) {
            int e = key.gamma.exponent(k);
            if (e == 0 || key.dx.contains(k)) continue;
            // dx_k ^ dx_I: dx_k moves past the members of I below k
            Rational coeff = c * e;
            if (key.dx.count_below(k) % 2 != 0) coeff = -coeff;
            out.add_term(key.gamma.minus(k), key.dx.with(k), coeff);
        }
    }
    return out;
}

HomogeneousForm contract_field(const HomogeneousField& X,
                               const HomogeneousForm& tau) {
    if (X.var_count() != tau.var_count())
        throw StructuralError("contract_field: variable count mismatch");
    HomogeneousForm out(tau.var_count(), tau.form_degree() - 1,
                        tau.weight() + X.weight());
    if (tau.form_degree() < 1) return out;
    for (const auto& [xkey, xc] : X.terms()) {
        for (const auto& [key, c] : tau.terms()) {
            if (!key.dx.contains(xkey.dir)) continue;
            Rational coeff = xc * c;
            if (key.dx.position(xkey.dir) % 2 != 0) coeff = -coeff;
            out.add_term(key.gamma + xkey.gamma, key.dx.without(xkey.dir), coeff);
        }
    }
    return out;
}

HomogeneousForm lie_radial(const HomogeneousForm& tau) {
    const HomogeneousField R = radial_field(tau.var_count());
    HomogeneousForm result = form_add(contract_field(R, ext_d(tau)),
                                      ext_d(contract_field(R, tau)));
    if (!(result == form_scale(tau, Rational(tau.weight()))))
        throw Error("lie_radial: L_R(tau) != b*tau; exterior algebra bug");
    return result;
}

RadialExactSplit radial_exact_split(const HomogeneousForm& tau) {
    const int b = tau.weight();
    if (b == 0)
        throw DomainError("radial_exact_split undefined at weight 0");
    if (b < 0)  // only the zero form carries a negative weight tag
        return RadialExactSplit{
            HomogeneousForm::zero(tau.var_count(), tau.form_degree(), b),
            HomogeneousForm::zero(tau.var_count(), tau.form_degree(), b)};
    const HomogeneousField R = radial_field(tau.var_count());
    const Rational inv_b(1, b);
    return RadialExactSplit{
        form_scale(ext_d(contract_field(R, tau)), inv_b),
        form_scale(contract_field(R, ext_d(tau)), inv_b)};
}

}  // namespace exdef
