#include "exdef/operators.hpp"

#include "exdef/errors.hpp"
#include "exdef/render.hpp"

namespace exdef {

DiffOperator::DiffOperator(VectorValuedForm K, VectorValuedForm L, HomogeneousForm mu)
    : n_(K.var_count()), deg_{K.form_degree(), K.weight()},
      K_(std::move(K)), L_(std::move(L)), mu_(std::move(mu)) {
    if (L_.var_count() != n_ || mu_.var_count() != n_)
        throw StructuralError("DiffOperator: variable count mismatch");
    if (!L_.is_zero() &&
        (L_.form_degree() != deg_.q + 1 || L_.weight() != deg_.a))
        throw StructuralError("DiffOperator: L must lie in Omega^{q+1} (x) T of weight a");
    if (!mu_.is_zero() && (mu_.form_degree() != deg_.q || mu_.weight() != deg_.a))
        throw StructuralError("DiffOperator: mu must lie in Omega^q(a)");
}

HomogeneousForm DiffOperator::apply(const HomogeneousForm& tau) const {
    if (tau.var_count() != n_)
        throw StructuralError("apply: variable count mismatch");
    HomogeneousForm out(n_, tau.form_degree() + deg_.q, tau.weight() + deg_.a);
    out = form_add(out, lie_vv(K_, tau));
    out = form_add(out, contract_vv(L_, tau));
    out = form_add(out, wedge(mu_, tau));
    return out;
}

BlackBoxOperator BlackBoxOperator::of(const DiffOperator& op, int r_max, int b_max) {
    return BlackBoxOperator(op.var_count(), op.bidegree(), r_max, b_max,
                            [op](const HomogeneousForm& tau) { return op.apply(tau); });
}

HomogeneousForm BlackBoxOperator::evaluate(const HomogeneousForm& tau) const {
    if (tau.form_degree() > r_max_ || tau.weight() > b_max_)
        throw BoundsError("black-box evaluation outside declared range (r <= " +
                          std::to_string(r_max_) + ", b <= " +
                          std::to_string(b_max_) + ")");
    HomogeneousForm out = eval_(tau);
    if (!out.is_zero() && (out.form_degree() != tau.form_degree() + deg_.q ||
                           out.weight() != tau.weight() + deg_.a))
        throw StructuralError("black box violated its declared bidegree");
    return out;
}

namespace {

// sign (-1)^{ab} of the graded bracket
int bracket_sign(int a, int b) { return ((a * b) % 2 == 0) ? 1 : -1; }

}  // namespace

BracketTestResult bracket_order_test(const BlackBoxOperator& box,
                                     const BracketTestBounds& bounds) {
    const int n = box.var_count();
    const int q = box.bidegree().q;
    // every evaluation below happens on a wedge of mu, tau, rho
    if (bounds.r_max > box.r_max() || bounds.b_max > box.b_max())
        throw BoundsError("bracket test bounds exceed the declared black-box range");

    auto eval = [&](const HomogeneousForm& f) { return box.evaluate(f); };

    for (int r_mu = 0; r_mu <= bounds.r_max; ++r_mu)
    for (int b_mu = r_mu; b_mu <= bounds.b_max; ++b_mu) {
        FormBasis basis_mu(n, r_mu, b_mu);
        for (std::size_t i = 0; i < basis_mu.size(); ++i) {
            auto mu = HomogeneousForm::basis(n, basis_mu.at(i).gamma, basis_mu.at(i).dx);
            for (int r_tau = 0; r_mu + r_tau <= bounds.r_max; ++r_tau)
            for (int b_tau = r_tau; b_mu + b_tau <= bounds.b_max; ++b_tau) {
                FormBasis basis_tau(n, r_tau, b_tau);
                for (std::size_t j = 0; j < basis_tau.size(); ++j) {
                    auto tau = HomogeneousForm::basis(n, basis_tau.at(j).gamma,
                                                      basis_tau.at(j).dx);
                    for (int r_rho = 0; r_mu + r_tau + r_rho <= bounds.r_max; ++r_rho)
                    for (int b_rho = r_rho;
                         b_mu + b_tau + b_rho <= bounds.b_max; ++b_rho) {
                        FormBasis basis_rho(n, r_rho, b_rho);
                        for (std::size_t k = 0; k < basis_rho.size(); ++k) {
                            auto rho = HomogeneousForm::basis(n, basis_rho.at(k).gamma,
                                                              basis_rho.at(k).dx);
                            // [[D,l_mu],l_tau](rho) expanded with
                            // [f,g] = fg - (-1)^{deg f deg g} gf
                            int s1 = bracket_sign(q, r_mu);
                            int s2 = bracket_sign(q + r_mu, r_tau);
                            HomogeneousForm term1 = eval(wedge(mu, wedge(tau, rho)));
                            HomogeneousForm term2 = wedge(mu, eval(wedge(tau, rho)));
                            HomogeneousForm term3 = wedge(tau, eval(wedge(mu, rho)));
                            HomogeneousForm term4 =
                                wedge(tau, wedge(mu, eval(rho)));
                            HomogeneousForm residual = form_sub(
                                form_sub(term1, form_scale(term2, s1)),
                                form_scale(form_sub(term3, form_scale(term4, s1)),
                                           s2));
                            if (!residual.is_zero())
                                return BracketTestResult{false, mu, tau, rho, residual};
                        }
                    }
                }
            }
        }
    }
    HomogeneousForm none(n, 0, 0);
    return BracketTestResult{true, none, none, none, none};
}

DiffOperator decompose(const BlackBoxOperator& box) {
    const int n = box.var_count();
    const auto [q, a] = box.bidegree();
    if (box.r_max() < 1 || box.b_max() < 1)
        throw BoundsError("decompose needs probes up to r = 1, b = 1");

    const HomogeneousForm mu = box.evaluate(HomogeneousForm::one(n));

    auto d0 = [&](const HomogeneousForm& tau) {
        return form_sub(box.evaluate(tau), wedge(mu, tau));
    };

    // K from D0 on coordinates: sigma_i = D0(x_i) = i_K(dx_i)
    VectorValuedForm K(n, q, a);
    for (int i = 1; i <= n; ++i) {
        HomogeneousForm xi = HomogeneousForm::from_polynomial(
            HomogeneousPolynomial::variable(n, i));
        K.add_component(i, d0(xi));
    }
    // L from D0 on coordinate differentials: rho_i = D0(dx_i) - (-1)^q d sigma_i
    VectorValuedForm L(n, q + 1, a);
    for (int i = 1; i <= n; ++i) {
        HomogeneousForm dxi =
            HomogeneousForm::basis(n, MultiIndex(n), IndexSet{i});
        HomogeneousForm d_sigma = ext_d(K.component(i));
        HomogeneousForm rho = (q % 2 == 0) ? form_sub(d0(dxi), d_sigma)
                                           : form_add(d0(dxi), d_sigma);
        L.add_component(i, rho);
    }

    DiffOperator candidate(K, L, mu);

    // the reconstruction must agree with the box on everything probeable
    for (int r = 0; r <= std::min(box.r_max(), n); ++r)
        for (int b = r; b <= box.b_max(); ++b) {
            FormBasis basis(n, r, b);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                auto tau = HomogeneousForm::basis(n, basis.at(i).gamma, basis.at(i).dx);
                if (!(candidate.apply(tau) == box.evaluate(tau)))
                    throw NotOrderOneError(
                        "black box disagrees with its order-1 reconstruction",
                        render(tau));
            }
        }
    return candidate;
}

DiffOperator from_id_family(const HomogeneousForm& w1, const HomogeneousForm& w2,
                            const HomogeneousForm& mu, int q) {
    const int n = w1.var_count();
    if (w2.var_count() != n || mu.var_count() != n)
        throw StructuralError("from_id_family: variable count mismatch");
    if (q < 1) throw StructuralError("from_id_family: q >= 1 required");

    int a = 0;
    for (const HomogeneousForm* f : {&w1, &w2, &mu})
        if (!f->is_zero()) a = f->weight();
    if ((!w1.is_zero() && (w1.form_degree() != q - 1 || w1.weight() != a)) ||
        (!w2.is_zero() && (w2.form_degree() != q || w2.weight() != a)) ||
        (!mu.is_zero() && (mu.form_degree() != q || mu.weight() != a)))
        throw StructuralError(
            "from_id_family: need w1 in Omega^{q-1}(a), w2, mu in Omega^q(a)");

    const VectorValuedForm id = identity_vv(n);
    VectorValuedForm K(n, q, a);
    if (!w1.is_zero()) K = wedge_vv(w1, id);
    // w1 ^ L_Id = L_{w1 ^ Id} - (-1)^q d w1 ^ i_Id
    HomogeneousForm l_part(n, q, a);
    l_part = form_add(l_part, w2);
    if (!w1.is_zero()) {
        HomogeneousForm dw1 = ext_d(w1);
        l_part = (q % 2 == 0) ? form_sub(l_part, dw1) : form_add(l_part, dw1);
    }
    VectorValuedForm L(n, q + 1, a);
    if (!l_part.is_zero()) L = wedge_vv(l_part, id);

    DiffOperator op(K, L, mu.is_zero() ? HomogeneousForm::zero(n, q, a) : mu);
    op.id_family_ = IdFamilyForm{w1, w2, mu};
    return op;
}

DiffOperator exterior_differential(int var_count) {
    return from_id_family(HomogeneousForm::one(var_count),
                          HomogeneousForm::zero(var_count, 1, 0),
                          HomogeneousForm::zero(var_count, 1, 0), 1);
}

}  // namespace exdef
