#pragma once

#include "exdef/field.hpp"
#include "exdef/form.hpp"

namespace exdef {

/// Graded-commutative wedge product: bilinear, associative, and
/// wedge(a,b) = (-1)^{r1 r2} wedge(b,a); repeated dx indices vanish.
HomogeneousForm wedge(const HomogeneousForm& a, const HomogeneousForm& b);

/// Exterior differential, a derivation of bidegree (1,0) with d.d = 0.
HomogeneousForm ext_d(const HomogeneousForm& tau);

/// Contraction i_X, an S-linear anti-derivation of degree -1; zero on
/// 0-forms.
HomogeneousForm contract_field(const HomogeneousField& X, const HomogeneousForm& tau);

/// Lie derivative along the radial field, computed as i_R(d tau) + d(i_R tau).
/// On Omega^r(b) this equals b*tau; the identity is asserted and a failure
/// signals an algebra bug.
HomogeneousForm lie_radial(const HomogeneousForm& tau);

struct RadialExactSplit {
    HomogeneousForm exact_part;   // (1/b) d(i_R tau); closed by construction
    HomogeneousForm radial_part;  // (1/b) i_R(d tau); killed by i_R
};

/// The unique decomposition tau = exact + radial for weight b >= 1.
/// Throws DomainError at b = 0.
RadialExactSplit radial_exact_split(const HomogeneousForm& tau);

}  // namespace exdef
