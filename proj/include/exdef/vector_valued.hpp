#pragma once

#include <vector>

#include "exdef/exterior.hpp"
#include "exdef/field.hpp"
#include "exdef/form.hpp"

namespace exdef {

/// Vector-valued differential form, an element of Omega^p (x) T of weight a.
/// Canonical representation: one aggregated component form per coordinate
/// direction, L = sum_i comp_i (x) d/dx_i with comp_i in Omega^p(a+1)
/// (each d/dx_i carries weight -1).  Polynomial factors on the field side
/// are absorbed into the component forms.
class VectorValuedForm {
public:
    VectorValuedForm(int var_count, int form_degree, int weight);

    static VectorValuedForm zero(int var_count, int form_degree, int weight) {
        return VectorValuedForm(var_count, form_degree, weight);
    }

    /// Aggregates a list of (form, field) pairs into canonical shape.
    static VectorValuedForm from_pairs(
        int var_count, int form_degree, int weight,
        const std::vector<std::pair<HomogeneousForm, HomogeneousField>>& pairs);

    int var_count() const { return n_; }
    int form_degree() const { return p_; }
    int weight() const { return a_; }
    bool is_zero() const;

    const HomogeneousForm& component(int dir) const { return comps_[dir - 1]; }
    void add_component(int dir, const HomogeneousForm& form);

    bool operator==(const VectorValuedForm& other) const;

private:
    int n_;
    int p_;  // form degree
    int a_;  // weight
    std::vector<HomogeneousForm> comps_;
};

VectorValuedForm vv_add(const VectorValuedForm& a, const VectorValuedForm& b);
VectorValuedForm vv_scale(const VectorValuedForm& a, const Rational& c);

/// Id = sum_i dx_i (x) d/dx_i in Omega^1 (x) T, weight 0.
/// Satisfies contract_vv(Id, tau) = r*tau and lie_vv(Id, tau) = d tau.
VectorValuedForm identity_vv(int var_count);

/// omega ^ L, wedging each component: i_{omega^L} = omega ^ i_L.
VectorValuedForm wedge_vv(const HomogeneousForm& omega, const VectorValuedForm& L);

/// Contraction i_L tau = sum_i comp_i ^ i_{d/dx_i} tau, a derivation of
/// degree p-1.  Zero on 0-forms.  Equivalent (tested) to the alternating
/// permutation-sum formula.
HomogeneousForm contract_vv(const VectorValuedForm& L, const HomogeneousForm& tau);

/// Lie derivative L_K = [i_K, d] for K of form degree q:
/// i_K(d tau) - (-1)^{q-1} d(i_K tau), a derivation of degree q.
HomogeneousForm lie_vv(const VectorValuedForm& K, const HomogeneousForm& tau);

}  // namespace exdef
