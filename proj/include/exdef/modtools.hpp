#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exdef/deformation.hpp"
#include "exdef/matrix.hpp"
#include "exdef/operators.hpp"

namespace exdef {

/// One row of degreewise data: dimensions, rank and kernel of the
/// operator on Omega^r(b), and (when tracked) the minimal-generator count
/// of a submodule at that weight.
struct DegreeTableRow {
    int r = 0;
    int b = 0;
    std::size_t dimension = 0;
    std::size_t rank = 0;
    std::size_t kernel = 0;
    std::size_t image = 0;
    std::optional<std::size_t> new_generators;
    bool in_domain = true;  // false when b lies below the action threshold
};

using DegreeTable = std::vector<DegreeTableRow>;

/// Matrix of D : Omega^r(b) -> Omega^{r+q}(b+a) in the enumerator bases;
/// column j holds the coordinates of D(basis_j).  Columns are filled in
/// parallel under Exec::parallel.
RationalMatrix operator_matrix(const DiffOperator& D, int r, int b,
                               Exec exec = Exec::parallel);

/// Dimension / rank / kernel / image per weight b in [b_lo, b_hi].  When
/// coefficients are supplied, rows below their threshold n_r are flagged
/// out-of-domain (their linear algebra is still reported).
DegreeTable kernel_dims(const DiffOperator& D, int r, int b_lo, int b_hi,
                        const ActionCoefficients* A = nullptr,
                        Exec exec = Exec::parallel);

/// One certificate term: coeff * (x^f . tau) with deg f = 1.
struct CertificateTerm {
    Rational coeff;
    MultiIndex f;
    HomogeneousForm tau;
};

/// Expression of a weight-(b+1) basis element as an action combination of
/// weight-b forms, per the degree-reduction of the finite-generation
/// argument.  Empty terms mean the target sits at or below the threshold
/// and is a generator itself.
struct ReductionCertificate {
    FormTermKey target;
    int var_count = 0;
    int form_degree = 0;
    int weight = 0;  // weight of the target (b+1)
    std::vector<CertificateTerm> terms;
};

/// Replays the certificate through act and returns the reconstruction.
HomogeneousForm replay(const ReductionCertificate& cert, const ActionCoefficients& A);

/// target - replay; the certificate is valid iff this is exactly zero.
HomogeneousForm replay_residual(const ReductionCertificate& cert,
                                const ActionCoefficients& A);

/// Builds the reduction certificate for one basis element x^gamma dx_I of
/// weight b+1 >= n_r + 1.  Requires n_r > n and alpha^2 != beta^2 at
/// (r, b, 1); throws ReductionUnavailableError otherwise.
ReductionCertificate reduce_degree(int var_count, const FormTermKey& target,
                                   const ActionCoefficients& A);

struct GenerationFailure {
    FormTermKey target;
    int weight = 0;
    std::string message;
};

struct GenerationResult {
    bool passed = true;
    std::optional<GenerationFailure> failure;

    explicit operator bool() const { return passed; }
};

/// Certifies that every basis element of Omega^r at weights
/// n_r+1 .. n_r+depth reduces to the previous weight with an exactly-zero
/// replay residual.  Requires n_r > n.
GenerationResult generation_check(int var_count, int r, const ActionCoefficients& A,
                                  int depth);

/// Degreewise subspace family V(b) <= Omega^r(b), b = b_lo .. b_lo+k,
/// given by spanning vectors.
struct DegreewiseFamily {
    int var_count = 0;
    int form_degree = 0;
    int b_lo = 0;
    std::vector<std::vector<HomogeneousForm>> spans;
};

/// Kernel of D restricted to Omega^r as a degreewise family.
DegreewiseFamily kernel_family(const DiffOperator& D, int r, int b_lo, int b_hi,
                               Exec exec = Exec::parallel);

/// Minimal new generators per weight: dim V(b) minus the dimension of
/// span{ act(x_i, v) : v in V(b-1) }.  Asserts closure of V under the
/// action first and throws NotASubmoduleError with a witness when it
/// fails.  The first weight contributes dim V(b_lo) generators.
DegreeTable generator_degrees(const DegreewiseFamily& V, const ActionCoefficients& A,
                              Exec exec = Exec::parallel);

}  // namespace exdef
