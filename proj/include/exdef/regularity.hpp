#pragma once

#include <vector>

#include "exdef/deformation.hpp"
#include "exdef/matrix.hpp"
#include "exdef/modtools.hpp"
#include "exdef/operators.hpp"

namespace exdef {

/// Homogeneous 1-form omega with i_R(omega) = 0 and omega ^ d(omega) = 0,
/// the datum of the regularity complex.  Both invariants are checked at
/// construction.
class IntegrableOneForm {
public:
    explicit IntegrableOneForm(HomogeneousForm omega);

    const HomogeneousForm& form() const { return omega_; }
    int var_count() const { return omega_.var_count(); }
    int weight() const { return omega_.weight(); }

private:
    HomogeneousForm omega_;
};

/// omega-triangle on forms: omega ^ d(tau) + kappa(r) d(omega) ^ tau with
/// kappa(r) = (r+1)/2; bidegree (2, weight(omega)).
HomogeneousForm omega_triangle(const IntegrableOneForm& omega,
                               const HomogeneousForm& tau);

/// omega-triangle at the T position: L_X(omega) = i_X(d omega) + d(i_X omega).
HomogeneousForm omega_triangle_field(const IntegrableOneForm& omega,
                                     const HomogeneousField& X);

/// The omega-triangle operator as a canonical DiffOperator, via its Id
/// family presentation (omega, d(omega)/2, d(omega)/2).
DiffOperator omega_triangle_operator(const IntegrableOneForm& omega);

/// One weight slice of the complex T -> Omega^1 -> Omega^3 -> ...:
/// matrices of the differentials landing at Omega^1(w), Omega^3(w+e), ...
struct ComplexSlice {
    int w = 0;  // weight at the Omega^1 position
    std::vector<RationalMatrix> differentials;
};

struct RegularityComplex {
    HomogeneousForm omega;
    std::vector<ComplexSlice> slices;
};

/// Builds the per-weight matrices for w in [w_lo, w_hi] and verifies that
/// consecutive products vanish; a nonzero product throws Error.
RegularityComplex build_complex(const IntegrableOneForm& omega, int w_lo, int w_hi,
                                Exec exec = Exec::parallel);

/// Degreewise invariants of the complex at position 1.
struct PhiRow {
    int w = 0;
    std::size_t dim_omega1 = 0;
    std::size_t phi = 0;        // kernel of Omega^1(w) -> Omega^3(w+e)
    std::size_t rank_in = 0;    // rank of T(w-e) -> Omega^1(w)
    std::size_t homology = 0;   // phi - rank_in
    bool regular = false;       // homology == 0
};

/// phi_omega(w) = dim ker(omega-triangle : Omega^1(w) -> Omega^3(w+e))
/// together with the homology at position 1, per weight.
std::vector<PhiRow> phi_omega(const IntegrableOneForm& omega, int w_lo, int w_hi,
                              Exec exec = Exec::parallel);

/// The worked deformed actions: f ._d tau (exterior-differential action)
/// and f ._t tau (regularity-complex action for weight-a omega), thin
/// wrappers over act with the (1,0,0) and (2,a,1/2) coefficient families.
HomogeneousForm linearized_d_action(const HomogeneousPolynomial& f,
                                    const HomogeneousForm& tau);
HomogeneousForm linearized_t_action(const HomogeneousPolynomial& f,
                                    const HomogeneousForm& tau, int a);

/// Field-position action f ._t X = (b/(b+c)) f X for X in T(b), b >= 1.
HomogeneousField linearized_t_field_action(const HomogeneousPolynomial& f,
                                           const HomogeneousField& X);

}  // namespace exdef
