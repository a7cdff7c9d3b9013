#include "exdef/vector_valued.hpp"

#include "exdef/errors.hpp"

namespace exdef {

VectorValuedForm::VectorValuedForm(int var_count, int form_degree, int weight)
    : n_(var_count), p_(form_degree), a_(weight) {
    comps_.reserve(var_count);
    for (int i = 0; i < var_count; ++i)
        comps_.push_back(HomogeneousForm::zero(var_count, form_degree, weight + 1));
}

VectorValuedForm VectorValuedForm::from_pairs(
    int var_count, int form_degree, int weight,
    const std::vector<std::pair<HomogeneousForm, HomogeneousField>>& pairs) {
    VectorValuedForm out(var_count, form_degree, weight);
    for (const auto& [form, field] : pairs) {
        if (form.is_zero() || field.is_zero()) continue;
        if (form.weight() + field.weight() != weight)
            throw StructuralError("vector-valued pair weight mismatch");
        for (int dir = 1; dir <= var_count; ++dir) {
            HomogeneousPolynomial f = field.component(dir);
            if (f.is_zero()) continue;
            out.add_component(dir, form_poly_mul(f, form));
        }
    }
    return out;
}

bool VectorValuedForm::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

void VectorValuedForm::add_component(int dir, const HomogeneousForm& form) {
    if (dir < 1 || dir > n_) throw StructuralError("direction out of range");
    if (form.is_zero()) return;
    if (form.form_degree() != p_ || form.weight() != a_ + 1)
        throw StructuralError("component bidegree mismatch: expected Omega^" +
                              std::to_string(p_) + "(" + std::to_string(a_ + 1) + ")");
    comps_[dir - 1] = form_add(comps_[dir - 1], form);
}

bool VectorValuedForm::operator==(const VectorValuedForm& other) const {
    if (n_ != other.n_) return false;
    if (is_zero() && other.is_zero()) return true;
    if (p_ != other.p_ || a_ != other.a_) return false;
    return comps_ == other.comps_;
}

VectorValuedForm vv_add(const VectorValuedForm& a, const VectorValuedForm& b) {
    if (a.var_count() != b.var_count())
        throw StructuralError("vv_add: variable count mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.form_degree() != b.form_degree() || a.weight() != b.weight())
        throw StructuralError("vv_add: bidegree mismatch");
    VectorValuedForm out = a;
    for (int dir = 1; dir <= a.var_count(); ++dir)
        out.add_component(dir, b.component(dir));
    return out;
}

VectorValuedForm vv_scale(const VectorValuedForm& a, const Rational& c) {
    VectorValuedForm out(a.var_count(), a.form_degree(), a.weight());
    for (int dir = 1; dir <= a.var_count(); ++dir)
        out.add_component(dir, form_scale(a.component(dir), c));
    return out;
}

VectorValuedForm identity_vv(int var_count) {
    if (var_count < 1) throw StructuralError("identity_vv: need n >= 1");
    VectorValuedForm id(var_count, 1, 0);
    for (int i = 1; i <= var_count; ++i)
        id.add_component(i, HomogeneousForm::basis(var_count, MultiIndex(var_count),
                                                   IndexSet{i}));
    return id;
}

VectorValuedForm wedge_vv(const HomogeneousForm& omega, const VectorValuedForm& L) {
    if (omega.var_count() != L.var_count())
        throw StructuralError("wedge_vv: variable count mismatch");
    VectorValuedForm out(L.var_count(), omega.form_degree() + L.form_degree(),
                         omega.weight() + L.weight());
    for (int dir = 1; dir <= L.var_count(); ++dir)
        out.add_component(dir, wedge(omega, L.component(dir)));
    return out;
}

HomogeneousForm contract_vv(const VectorValuedForm& L, const HomogeneousForm& tau) {
    if (L.var_count() != tau.var_count())
        throw StructuralError("contract_vv: variable count mismatch");
    HomogeneousForm out(tau.var_count(),
                        tau.form_degree() + L.form_degree() - 1,
                        tau.weight() + L.weight());
    if (tau.form_degree() < 1) return out;
    for (int dir = 1; dir <= L.var_count(); ++dir) {
        const HomogeneousForm& comp = L.component(dir);
        if (comp.is_zero()) continue;
        HomogeneousForm piece = wedge(
            comp, contract_field(HomogeneousField::coordinate(L.var_count(), dir), tau));
        out = form_add(out, piece);
    }
    return out;
}

HomogeneousForm lie_vv(const VectorValuedForm& K, const HomogeneousForm& tau) {
    // [i_K, d] with deg(i_K) = q-1: i_K(d tau) - (-1)^{q-1} d(i_K tau)
    const int q = K.form_degree();
    HomogeneousForm first = contract_vv(K, ext_d(tau));
    HomogeneousForm second = ext_d(contract_vv(K, tau));
    return (q % 2 == 0) ? form_add(first, second) : form_sub(first, second);
}

}  // namespace exdef
