#include "exdef/modtools.hpp"

#include <cstdint>

#include "exdef/errors.hpp"
#include "exdef/exterior.hpp"
#include "exdef/render.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace exdef {

RationalMatrix operator_matrix(const DiffOperator& D, int r, int b, Exec exec) {
    const int n = D.var_count();
    const auto [q, a] = D.bidegree();
    FormBasis domain(n, r, b);
    FormBasis codomain(n, r + q, b + a);
    RationalMatrix m(codomain.size(), domain.size());
    const std::int64_t cols = static_cast<std::int64_t>(domain.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
#endif
    for (std::int64_t j = 0; j < cols; ++j) {
        const auto& key = domain.at(static_cast<std::size_t>(j));
        HomogeneousForm image =
            D.apply(HomogeneousForm::basis(n, key.gamma, key.dx));
        for (const auto& [tkey, coeff] : image.terms())
            m.at(codomain.index_of(tkey), static_cast<std::size_t>(j)) = coeff;
    }
    return m;
}

DegreeTable kernel_dims(const DiffOperator& D, int r, int b_lo, int b_hi,
                        const ActionCoefficients* A, Exec exec) {
    DegreeTable table;
    for (int b = b_lo; b <= b_hi; ++b) {
        RationalMatrix m = operator_matrix(D, r, b, exec);
        DegreeTableRow row;
        row.r = r;
        row.b = b;
        row.dimension = m.cols();
        row.rank = matrix_rank(m, exec);
        row.kernel = row.dimension - row.rank;
        row.image = row.rank;
        row.in_domain = (A == nullptr) || b >= A->threshold(r);
        table.push_back(row);
    }
    return table;
}

HomogeneousForm replay(const ReductionCertificate& cert,
                       const ActionCoefficients& A) {
    HomogeneousForm sum(cert.var_count, cert.form_degree, cert.weight);
    for (const auto& term : cert.terms) {
        auto f = HomogeneousPolynomial::monomial(cert.var_count, term.f);
        sum = form_add(sum, form_scale(act(f, term.tau, A), term.coeff));
    }
    return sum;
}

HomogeneousForm replay_residual(const ReductionCertificate& cert,
                                const ActionCoefficients& A) {
    HomogeneousForm target = HomogeneousForm::basis(
        cert.var_count, cert.target.gamma, cert.target.dx);
    return form_sub(target, replay(cert, A));
}

ReductionCertificate reduce_degree(int var_count, const FormTermKey& target,
                                   const ActionCoefficients& A) {
    const int n = var_count;
    const int r = target.dx.size();
    const int w = target.gamma.degree() + r;  // target weight, b+1
    ReductionCertificate cert{target, n, r, w, {}};

    const int n_r = A.threshold(r);
    if (w <= n_r) return cert;  // already a generator slot, nothing to reduce

    const int b = w - 1;
    if (n_r <= n)
        throw ReductionUnavailableError(
            "reduce_degree needs threshold n_r > n (have n_" + std::to_string(r) +
            " = " + std::to_string(n_r) + ", n = " + std::to_string(n) + ")");
    const Rational alpha = A.alpha(r, b, 1);
    const Rational beta = A.beta(r, b, 1);
    if (alpha * alpha == beta * beta)
        throw ReductionUnavailableError(
            "reduce_degree hypothesis alpha^2 != beta^2 fails at b = " +
            std::to_string(b));

    const MultiIndex& gamma = target.gamma;

    if (r == 0) {
        // 0-forms: the beta term vanishes, divide by alpha alone
        if (sgn(alpha) == 0)
            throw ReductionUnavailableError("alpha = 0 on 0-forms at b = " +
                                            std::to_string(b));
        for (int k = 1; k <= n; ++k) {
            if (gamma.exponent(k) == 0) continue;
            cert.terms.push_back(CertificateTerm{
                Rational(1) / alpha, MultiIndex::unit(n, k),
                HomogeneousForm::basis(n, gamma.minus(k), IndexSet{})});
            return cert;
        }
    }

    // case (i): some k in I with gamma_k != 0
    for (int k : target.dx.to_vector()) {
        if (gamma.exponent(k) == 0) continue;
        cert.terms.push_back(CertificateTerm{
            Rational(1) / (alpha + beta), MultiIndex::unit(n, k),
            HomogeneousForm::basis(n, gamma.minus(k), target.dx)});
        return cert;
    }

    // case (ii): every exponent sits outside I; pick the smallest k with
    // gamma_k >= 2 (n_r > n guarantees existence) and the smallest l in I
    int k = 0;
    for (int v = 1; v <= n; ++v)
        if (gamma.exponent(v) >= 2) {
            k = v;
            break;
        }
    if (k == 0)
        throw ReductionUnavailableError(
            "no exponent >= 2 outside dx_I; thresholds too low for reduction");
    const int l = target.dx.to_vector().front();

    const Rational denom = alpha * alpha - beta * beta;
    HomogeneousForm tau1 =
        HomogeneousForm::basis(n, gamma.minus(k), target.dx);
    HomogeneousForm dxI = HomogeneousForm::basis(n, MultiIndex(n), target.dx);
    HomogeneousForm tau2 = form_poly_mul(
        HomogeneousPolynomial::monomial(n, gamma.minus(k)),
        wedge(HomogeneousForm::basis(n, MultiIndex(n), IndexSet{k}),
              contract_field(HomogeneousField::coordinate(n, l), dxI)));

    cert.terms.push_back(
        CertificateTerm{alpha / denom, MultiIndex::unit(n, k), tau1});
    cert.terms.push_back(
        CertificateTerm{-beta / denom, MultiIndex::unit(n, l), tau2});

    // whatever the two action terms leave beyond the target has exponent
    // gamma_k - 1 >= 1 on k and k in its dx set: clear it by case (i)
    HomogeneousForm partial_sum = replay(cert, A);
    HomogeneousForm junk = form_sub(
        partial_sum, HomogeneousForm::basis(n, gamma, target.dx));
    for (const auto& [jkey, jcoeff] : junk.terms()) {
        if (!jkey.dx.contains(k) || jkey.gamma.exponent(k) < 1)
            throw ReductionUnavailableError(
                "unexpected residual term " + render(HomogeneousForm::basis(
                    n, jkey.gamma, jkey.dx)) + " in case (ii) reduction");
        cert.terms.push_back(CertificateTerm{
            -jcoeff / (alpha + beta), MultiIndex::unit(n, k),
            HomogeneousForm::basis(n, jkey.gamma.minus(k), jkey.dx)});
    }
    return cert;
}

GenerationResult generation_check(int var_count, int r,
                                  const ActionCoefficients& A, int depth) {
    const int n_r = A.threshold(r);
    if (n_r <= var_count)
        throw ReductionUnavailableError(
            "generation_check needs thresholds with n_r > n; raise them first");
    for (int w = n_r + 1; w <= n_r + depth; ++w) {
        FormBasis basis(var_count, r, w);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            try {
                ReductionCertificate cert =
                    reduce_degree(var_count, basis.at(i), A);
                HomogeneousForm residual = replay_residual(cert, A);
                if (!residual.is_zero())
                    return GenerationResult{
                        false, GenerationFailure{basis.at(i), w,
                                                 "nonzero replay residual " +
                                                     render(residual)}};
            } catch (const DomainError& e) {
                return GenerationResult{
                    false, GenerationFailure{basis.at(i), w, e.what()}};
            }
        }
    }
    return GenerationResult{true, std::nullopt};
}

DegreewiseFamily kernel_family(const DiffOperator& D, int r, int b_lo, int b_hi,
                               Exec exec) {
    DegreewiseFamily V;
    V.var_count = D.var_count();
    V.form_degree = r;
    V.b_lo = b_lo;
    for (int b = b_lo; b <= b_hi; ++b) {
        FormBasis basis(D.var_count(), r, b);
        RationalMatrix m = operator_matrix(D, r, b, exec);
        std::vector<HomogeneousForm> span;
        for (const auto& vec : nullspace(m, exec)) {
            HomogeneousForm v(D.var_count(), r, b);
            for (std::size_t j = 0; j < vec.size(); ++j)
                if (sgn(vec[j]) != 0)
                    v.add_term(basis.at(j).gamma, basis.at(j).dx, vec[j]);
            span.push_back(std::move(v));
        }
        V.spans.push_back(std::move(span));
    }
    return V;
}

namespace {

RationalMatrix coords_matrix(const std::vector<HomogeneousForm>& vectors,
                             const FormBasis& basis) {
    RationalMatrix m(basis.size(), vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j)
        for (const auto& [key, c] : vectors[j].terms())
            m.at(basis.index_of(key), j) = c;
    return m;
}

}  // namespace

DegreeTable generator_degrees(const DegreewiseFamily& V,
                              const ActionCoefficients& A, Exec exec) {
    const int n = V.var_count;
    const int r = V.form_degree;
    DegreeTable table;

    for (std::size_t k = 0; k < V.spans.size(); ++k) {
        const int b = V.b_lo + static_cast<int>(k);
        FormBasis basis(n, r, b);
        RationalMatrix span_m = coords_matrix(V.spans[k], basis);
        const std::size_t dim_here = matrix_rank(span_m, exec);

        DegreeTableRow row;
        row.r = r;
        row.b = b;
        row.dimension = dim_here;
        row.in_domain = b >= A.threshold(r);

        if (k == 0) {
            row.new_generators = dim_here;
        } else {
            // images of the previous slice under multiplication by the
            // variables; closure into V(b) is asserted via ranks
            std::vector<HomogeneousForm> images;
            for (const auto& v : V.spans[k - 1])
                for (int i = 1; i <= n; ++i)
                    images.push_back(
                        act(HomogeneousPolynomial::variable(n, i), v, A));

            RationalMatrix image_m = coords_matrix(images, basis);
            const std::size_t image_dim = matrix_rank(image_m, exec);

            RationalMatrix joint(basis.size(), span_m.cols() + image_m.cols());
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (std::size_t j = 0; j < span_m.cols(); ++j)
                    joint.at(i, j) = span_m.at(i, j);
                for (std::size_t j = 0; j < image_m.cols(); ++j)
                    joint.at(i, span_m.cols() + j) = image_m.at(i, j);
            }
            if (matrix_rank(joint, exec) != dim_here) {
                // find one violating image for the witness
                for (std::size_t j = 0; j < images.size(); ++j) {
                    RationalMatrix probe(basis.size(), span_m.cols() + 1);
                    for (std::size_t i = 0; i < basis.size(); ++i) {
                        for (std::size_t jj = 0; jj < span_m.cols(); ++jj)
                            probe.at(i, jj) = span_m.at(i, jj);
                        probe.at(i, span_m.cols()) = image_m.at(i, j);
                    }
                    if (matrix_rank(probe, exec) != dim_here)
                        throw NotASubmoduleError(
                            "family is not closed under the action at weight " +
                            std::to_string(b) + ": " + render(images[j]) +
                            " escapes V(" + std::to_string(b) + ")");
                }
                throw NotASubmoduleError(
                    "family is not closed under the action at weight " +
                    std::to_string(b));
            }
            row.new_generators = dim_here - image_dim;
        }
        table.push_back(row);
    }
    return table;
}

}  // namespace exdef
