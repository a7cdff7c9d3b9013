#include "exdef/regularity.hpp"

#include "exdef/errors.hpp"
#include "exdef/exterior.hpp"
#include "exdef/render.hpp"

namespace exdef {

IntegrableOneForm::IntegrableOneForm(HomogeneousForm omega)
    : omega_(std::move(omega)) {
    if (omega_.form_degree() != 1)
        throw StructuralError("IntegrableOneForm: need a 1-form");
    if (omega_.is_zero())
        throw StructuralError("IntegrableOneForm: omega = 0 is rejected");
    const HomogeneousField R = radial_field(omega_.var_count());
    if (!contract_field(R, omega_).is_zero())
        throw DomainError("IntegrableOneForm: i_R(omega) != 0, form does not descend");
    if (!wedge(omega_, ext_d(omega_)).is_zero())
        throw DomainError("IntegrableOneForm: omega ^ d(omega) != 0, not integrable");
}

HomogeneousForm omega_triangle(const IntegrableOneForm& omega,
                               const HomogeneousForm& tau) {
    const Rational kappa = Rational(tau.form_degree() + 1) / 2;
    return form_add(wedge(omega.form(), ext_d(tau)),
                    form_scale(wedge(ext_d(omega.form()), tau), kappa));
}

HomogeneousForm omega_triangle_field(const IntegrableOneForm& omega,
                                     const HomogeneousField& X) {
    HomogeneousForm d_omega = ext_d(omega.form());
    return form_add(contract_field(X, d_omega),
                    ext_d(contract_field(X, omega.form())));
}

DiffOperator omega_triangle_operator(const IntegrableOneForm& omega) {
    HomogeneousForm half_domega =
        form_scale(ext_d(omega.form()), Rational(1, 2));
    return from_id_family(omega.form(), half_domega, half_domega, 2);
}

namespace {

/// Matrix of the T(w-e) -> Omega^1(w) differential X |-> L_X(omega).
RationalMatrix field_position_matrix(const IntegrableOneForm& omega, int w) {
    const int n = omega.var_count();
    const int e = omega.weight();
    FieldBasis domain(n, w - e);
    FormBasis codomain(n, 1, w);
    RationalMatrix m(codomain.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
        const auto& key = domain.at(j);
        HomogeneousField X =
            HomogeneousField::basis(n, key.gamma, key.dir);
        HomogeneousForm image = omega_triangle_field(omega, X);
        for (const auto& [tkey, coeff] : image.terms())
            m.at(codomain.index_of(tkey), j) = coeff;
    }
    return m;
}

}  // namespace

RegularityComplex build_complex(const IntegrableOneForm& omega, int w_lo, int w_hi,
                                Exec exec) {
    const int n = omega.var_count();
    const int e = omega.weight();
    const DiffOperator tri = omega_triangle_operator(omega);

    RegularityComplex complex{omega.form(), {}};
    for (int w = w_lo; w <= w_hi; ++w) {
        ComplexSlice slice;
        slice.w = w;
        slice.differentials.push_back(field_position_matrix(omega, w));
        // positions 1, 2, ...: Omega^{2p-1}(w + (p-1)e) -> Omega^{2p+1}
        for (int p = 1; 2 * p - 1 <= n; ++p)
            slice.differentials.push_back(
                operator_matrix(tri, 2 * p - 1, w + (p - 1) * e, exec));
        for (std::size_t i = 0; i + 1 < slice.differentials.size(); ++i) {
            const RationalMatrix& into = slice.differentials[i];
            const RationalMatrix& out = slice.differentials[i + 1];
            if (out.cols() != into.rows())
                throw Error("build_complex: slice shapes disagree");
            if (!matrix_mul(out, into, exec).is_zero())
                throw Error("build_complex: consecutive differentials do not "
                            "compose to zero at weight " + std::to_string(w) +
                            ", position " + std::to_string(i));
        }
        complex.slices.push_back(std::move(slice));
    }
    return complex;
}

std::vector<PhiRow> phi_omega(const IntegrableOneForm& omega, int w_lo, int w_hi,
                              Exec exec) {
    const int n = omega.var_count();
    const int e = omega.weight();
    const DiffOperator tri = omega_triangle_operator(omega);
    std::vector<PhiRow> rows;
    for (int w = w_lo; w <= w_hi; ++w) {
        PhiRow row;
        row.w = w;
        row.dim_omega1 = form_dimension(n, 1, w);
        RationalMatrix out = operator_matrix(tri, 1, w, exec);
        row.phi = row.dim_omega1 - matrix_rank(out, exec);
        row.rank_in = matrix_rank(field_position_matrix(omega, w), exec);
        row.homology = row.phi - row.rank_in;
        row.regular = (row.homology == 0);
        rows.push_back(row);
    }
    return rows;
}

HomogeneousForm linearized_d_action(const HomogeneousPolynomial& f,
                                    const HomogeneousForm& tau) {
    return act(f, tau, preset_dd());
}

HomogeneousForm linearized_t_action(const HomogeneousPolynomial& f,
                                    const HomogeneousForm& tau, int a) {
    return act(f, tau, preset_dt(a));
}

HomogeneousField linearized_t_field_action(const HomogeneousPolynomial& f,
                                           const HomogeneousField& X) {
    const int b = X.weight();
    const int c = f.degree();
    if (X.is_zero()) return HomogeneousField::zero(X.var_count(), b + c);
    if (c == 0)
        return field_scale(X, f.coeff(MultiIndex(f.var_count())));
    if (b < 1)
        throw TruncationError("field action needs weight b >= 1");
    return field_scale(field_poly_mul(f, X), Rational(b) / Rational(b + c));
}

}  // namespace exdef
