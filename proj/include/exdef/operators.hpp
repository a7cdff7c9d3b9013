#pragma once

#include <functional>
#include <optional>
#include <string>

#include "exdef/form.hpp"
#include "exdef/vector_valued.hpp"

namespace exdef {

struct Bidegree {
    int q = 0;  // form-degree shift
    int a = 0;  // weight shift

    bool operator==(const Bidegree&) const = default;
};

/// Presentation of an operator in the Id family:
/// w1 ^ L_Id + w2 ^ i_Id + lambda_mu.
struct IdFamilyForm {
    HomogeneousForm w1;  // Omega^{q-1}(a)
    HomogeneousForm w2;  // Omega^q(a)
    HomogeneousForm mu;  // Omega^q(a)
};

/// Order-1 differential operator of bidegree (q,a), stored canonically as
/// the unique triple of the decomposition D = L_K + i_L + lambda_mu with
/// K in Omega^q (x) T, L in Omega^{q+1} (x) T and mu in Omega^q, all of
/// weight a.
class DiffOperator {
public:
    DiffOperator(VectorValuedForm K, VectorValuedForm L, HomogeneousForm mu);

    int var_count() const { return n_; }
    Bidegree bidegree() const { return deg_; }
    const VectorValuedForm& K() const { return K_; }
    const VectorValuedForm& L() const { return L_; }
    const HomogeneousForm& mu() const { return mu_; }

    /// The Id-family presentation, when this operator was built from one.
    const std::optional<IdFamilyForm>& id_family() const { return id_family_; }

    /// L_K(tau) + i_L(tau) + mu ^ tau, mapping Omega^r(b) -> Omega^{r+q}(b+a).
    HomogeneousForm apply(const HomogeneousForm& tau) const;

    bool operator==(const DiffOperator& other) const {
        return K_ == other.K_ && L_ == other.L_ && mu_ == other.mu_;
    }

private:
    friend DiffOperator from_id_family(const HomogeneousForm&, const HomogeneousForm&,
                                       const HomogeneousForm&, int);

    int n_;
    Bidegree deg_;
    VectorValuedForm K_;
    VectorValuedForm L_;
    HomogeneousForm mu_;
    std::optional<IdFamilyForm> id_family_;
};

/// Opaque evaluator with a declared bidegree and probe range.  The
/// evaluator must be linear over scalars and safe for concurrent calls.
class BlackBoxOperator {
public:
    using Evaluator = std::function<HomogeneousForm(const HomogeneousForm&)>;

    BlackBoxOperator(int var_count, Bidegree deg, int r_max, int b_max,
                     Evaluator eval)
        : n_(var_count), deg_(deg), r_max_(r_max), b_max_(b_max),
          eval_(std::move(eval)) {}

    /// Wraps a DiffOperator (bounds are unrestricted in that case).
    static BlackBoxOperator of(const DiffOperator& op, int r_max, int b_max);

    int var_count() const { return n_; }
    Bidegree bidegree() const { return deg_; }
    int r_max() const { return r_max_; }
    int b_max() const { return b_max_; }

    /// Evaluates within declared bounds; throws BoundsError outside them.
    HomogeneousForm evaluate(const HomogeneousForm& tau) const;

private:
    int n_;
    Bidegree deg_;
    int r_max_;
    int b_max_;
    Evaluator eval_;
};

struct BracketTestBounds {
    int r_max = 2;
    int b_max = 3;
};

/// Outcome of the order-1 test [[D, lambda_mu], lambda_tau] = 0.
struct BracketTestResult {
    bool passed = true;
    // witness on failure: basis elements mu, tau and probe rho with the
    // nonzero residual of the double commutator
    HomogeneousForm mu, tau, rho, residual;

    explicit operator bool() const { return passed; }
};

/// Expands the double graded commutator on all basis pairs (mu, tau) and
/// probes rho whose evaluations stay inside `bounds`; passes iff every
/// expansion vanishes identically.  `bounds` must fit within the black
/// box's declared range or BoundsError is thrown.
BracketTestResult bracket_order_test(const BlackBoxOperator& box,
                                     const BracketTestBounds& bounds);

/// Recovers the unique (K, L, mu) of an order-1 black box from the probes
/// 1, x_i and dx_i, then asserts agreement with the box on all basis
/// inputs within the declared range.  Disagreement throws NotOrderOneError
/// carrying the witness.
DiffOperator decompose(const BlackBoxOperator& box);

/// Builds the Id-family operator w1 ^ L_Id + w2 ^ i_Id + lambda_mu with
/// w1 in Omega^{q-1}(a) and w2, mu in Omega^q(a), as a canonical triple:
/// K = w1 ^ Id, L = (w2 - (-1)^q d w1) ^ Id, via the transport identity
/// L_{w1 ^ Id} = w1 ^ L_Id + (-1)^q d w1 ^ i_Id.
DiffOperator from_id_family(const HomogeneousForm& w1, const HomogeneousForm& w2,
                            const HomogeneousForm& mu, int q);

/// The exterior differential as a DiffOperator (K = Id, L = 0, mu = 0).
DiffOperator exterior_differential(int var_count);

}  // namespace exdef
