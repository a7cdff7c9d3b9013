#include "exdef/deformation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>

#include "exdef/errors.hpp"
#include "exdef/exterior.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace exdef {

namespace {

Rational theta(int a, int q, const Rational& t, int r) {
    Rational sign_t = (q % 2 == 0) ? t : -t;
    return Rational(a) * (Rational(r) / Rational(q) + sign_t);
}

}  // namespace

ActionCoefficients ActionCoefficients::trivial() {
    ActionCoefficients A;
    A.kind_ = Kind::trivial;
    return A;
}

ActionCoefficients ActionCoefficients::teo1(int q, int a, const Rational& t) {
    if (q < 1) throw StructuralError("teo1 coefficients need q >= 1");
    ActionCoefficients A;
    A.kind_ = Kind::teo1;
    A.q_ = q;
    A.a_ = a;
    A.t_ = t;
    return A;
}

ActionCoefficients ActionCoefficients::custom(CoeffFn fn,
                                              std::function<int(int)> threshold) {
    ActionCoefficients A;
    A.kind_ = Kind::custom;
    A.custom_fn_ = std::move(fn);
    A.custom_threshold_ = std::move(threshold);
    return A;
}

Rational ActionCoefficients::alpha(int r, int b, int c) const {
    if (c == 0) return 1;  // condition a)
    switch (kind_) {
        case Kind::trivial:
            return 1;
        case Kind::custom:
            return custom_fn_(r, b, c).first;
        case Kind::teo1: {
            Rational th = theta(a_, q_, t_, r);
            Rational den = Rational(b + c) - th;
            if (sgn(den) == 0)
                throw CoefficientDomainError("alpha denominator vanished at (r=" +
                                             std::to_string(r) + ", b=" +
                                             std::to_string(b) + ", c=" +
                                             std::to_string(c) + ")");
            return (Rational(b) - th) / den;
        }
    }
    return 1;
}

Rational ActionCoefficients::beta(int r, int b, int c) const {
    switch (kind_) {
        case Kind::trivial:
            return 0;
        case Kind::custom:
            return custom_fn_(r, b, c).second;
        case Kind::teo1: {
            Rational th = theta(a_, q_, t_, r);
            Rational den = Rational(b) - th;
            if (sgn(den) == 0)
                throw CoefficientDomainError("beta denominator vanished at (r=" +
                                             std::to_string(r) + ", b=" +
                                             std::to_string(b) + ")");
            return alpha(r, b, c) / den;
        }
    }
    return 0;
}

int ActionCoefficients::threshold(int r) const {
    int base = 0;
    switch (kind_) {
        case Kind::trivial:
            base = 0;
            break;
        case Kind::custom:
            base = custom_threshold_(r);
            break;
        case Kind::teo1:
            base = static_cast<int>(smallest_integer_above(theta(a_, q_, t_, r)));
            break;
    }
    return std::max({base, floor_, 0});
}

ActionCoefficients ActionCoefficients::raised(int floor) const {
    ActionCoefficients A = *this;
    A.floor_ = std::max(A.floor_, floor);
    return A;
}

ActionCoefficients preset_dd() { return ActionCoefficients::teo1(1, 0, 0); }

ActionCoefficients preset_dt(int a) {
    return ActionCoefficients::teo1(2, a, Rational(1, 2));
}

HomogeneousForm act(const HomogeneousPolynomial& f, const HomogeneousForm& tau,
                    const ActionCoefficients& A) {
    if (f.var_count() != tau.var_count())
        throw StructuralError("act: variable count mismatch");
    const int c = f.degree();
    const int r = tau.form_degree();
    const int b = tau.weight();
    HomogeneousForm zero_out(tau.var_count(), r, b + c);
    if (f.is_zero() || tau.is_zero()) return zero_out;
    if (c == 0) {
        // scalars act as scalars in every coefficient family
        return form_scale(tau, f.coeff(MultiIndex(f.var_count())));
    }
    if (A.is_trivial()) return form_poly_mul(f, tau);
    if (b < A.threshold(r))
        throw TruncationError("act: weight " + std::to_string(b) +
                              " is below the truncation threshold n_" +
                              std::to_string(r) + " = " +
                              std::to_string(A.threshold(r)));
    const Rational alpha = A.alpha(r, b, c);
    const Rational beta = A.beta(r, b, c);
    HomogeneousForm first = form_scale(form_poly_mul(f, tau), alpha);
    if (sgn(beta) == 0) return first;
    HomogeneousForm df = ext_d(HomogeneousForm::from_polynomial(f));
    HomogeneousForm second =
        wedge(df, contract_field(radial_field(tau.var_count()), tau));
    return form_add(first, form_scale(second, beta));
}

namespace {

struct Slice {
    int outer;  // degree of the outer scalar (c, or e for associativity)
    int inner;  // degree of the inner scalar (0 when unused)
    int b;
    int r;
};

/// Scans slices in order; `check` returns the index of the first
/// violation inside a slice (or npos).  Serial path: plain in-order loop.
/// Parallel path: OpenMP over slices, keeping the smallest violating
/// slice; later slices are skipped once a hit is known.
template <typename CheckFn>
std::optional<std::pair<std::size_t, std::size_t>> scan_slices(
    const std::vector<Slice>& slices, CheckFn check, Exec exec) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    if (exec == Exec::serial) {
        for (std::size_t s = 0; s < slices.size(); ++s) {
            std::size_t hit = check(slices[s]);
            if (hit != npos) return std::make_pair(s, hit);
        }
        return std::nullopt;
    }
    std::atomic<std::int64_t> best_slice{
        static_cast<std::int64_t>(slices.size())};
    std::vector<std::size_t> hits(slices.size(), npos);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(slices.size()); ++s) {
        if (s > best_slice.load()) continue;
        std::size_t hit = check(slices[static_cast<std::size_t>(s)]);
        if (hit != npos) {
            hits[static_cast<std::size_t>(s)] = hit;
            std::int64_t cur = best_slice.load();
            while (s < cur && !best_slice.compare_exchange_weak(cur, s)) {
            }
        }
    }
    for (std::size_t s = 0; s < slices.size(); ++s)
        if (hits[s] != npos) return std::make_pair(s, hits[s]);
    return std::nullopt;
}

}  // namespace

LinearityResult verify_linearity(const DiffOperator& D, const ActionCoefficients& A,
                                 const VerifyBounds& bounds, Exec exec) {
    const int n = D.var_count();
    const auto [q, a] = D.bidegree();

    std::vector<Slice> slices;
    for (int c = 1; c <= bounds.c_max; ++c)
        for (int b = 0; b <= bounds.b_max; ++b)
            for (int r = 0; r <= std::min(bounds.r_max, n); ++r) {
                if (b < std::max(r, A.threshold(r))) continue;
                // the output side must also live above its threshold
                if (r + q >= 0 && r + q <= n && b + a < A.threshold(r + q)) continue;
                slices.push_back(Slice{c, 0, b, r});
            }

    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    auto check = [&](const Slice& s) -> std::size_t {
        FormBasis basis(n, s.r, s.b);
        const auto monos = monomials_of_degree(n, s.outer);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto tau = HomogeneousForm::basis(n, basis.at(i).gamma, basis.at(i).dx);
            HomogeneousForm d_tau = D.apply(tau);
            for (std::size_t m = 0; m < monos.size(); ++m) {
                auto f = HomogeneousPolynomial::monomial(n, monos[m]);
                HomogeneousForm lhs = D.apply(act(f, tau, A));
                HomogeneousForm rhs = act(f, d_tau, A);
                if (!(lhs == rhs)) return i * monos.size() + m;
            }
        }
        return npos;
    };

    auto hit = scan_slices(slices, check, exec);
    if (!hit) return LinearityResult{true, std::nullopt};

    const Slice& s = slices[hit->first];
    FormBasis basis(n, s.r, s.b);
    const auto monos = monomials_of_degree(n, s.outer);
    std::size_t i = hit->second / monos.size();
    std::size_t m = hit->second % monos.size();
    auto tau = HomogeneousForm::basis(n, basis.at(i).gamma, basis.at(i).dx);
    auto f = HomogeneousPolynomial::monomial(n, monos[m]);
    HomogeneousForm residual =
        form_sub(D.apply(act(f, tau, A)), act(f, D.apply(tau), A));
    return LinearityResult{false, LinearityCounterexample{f, tau, residual}};
}

AssociativityResult verify_associativity(int var_count, const ActionCoefficients& A,
                                         const VerifyBounds& bounds, Exec exec) {
    const int n = var_count;
    std::vector<Slice> slices;
    for (int e = 1; e <= bounds.e_max; ++e)
        for (int c = 1; c <= bounds.c_max; ++c)
            for (int b = 0; b <= bounds.b_max; ++b)
                for (int r = 0; r <= std::min(bounds.r_max, n); ++r) {
                    if (b < std::max(r, A.threshold(r))) continue;
                    slices.push_back(Slice{e, c, b, r});
                }

    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    auto check = [&](const Slice& s) -> std::size_t {
        FormBasis basis(n, s.r, s.b);
        const auto outer = monomials_of_degree(n, s.outer);
        const auto inner = monomials_of_degree(n, s.inner);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            auto tau = HomogeneousForm::basis(n, basis.at(i).gamma, basis.at(i).dx);
            for (std::size_t gi = 0; gi < outer.size(); ++gi) {
                auto g = HomogeneousPolynomial::monomial(n, outer[gi]);
                for (std::size_t fi = 0; fi < inner.size(); ++fi) {
                    auto f = HomogeneousPolynomial::monomial(n, inner[fi]);
                    HomogeneousForm lhs = act(g, act(f, tau, A), A);
                    HomogeneousForm rhs = act(poly_mul(g, f), tau, A);
                    if (!(lhs == rhs))
                        return (i * outer.size() + gi) * inner.size() + fi;
                }
            }
        }
        return npos;
    };

    auto hit = scan_slices(slices, check, exec);
    if (!hit) return AssociativityResult{true, std::nullopt};

    const Slice& s = slices[hit->first];
    FormBasis basis(n, s.r, s.b);
    const auto outer = monomials_of_degree(n, s.outer);
    const auto inner = monomials_of_degree(n, s.inner);
    std::size_t fi = hit->second % inner.size();
    std::size_t gi = (hit->second / inner.size()) % outer.size();
    std::size_t i = hit->second / inner.size() / outer.size();
    auto tau = HomogeneousForm::basis(n, basis.at(i).gamma, basis.at(i).dx);
    auto g = HomogeneousPolynomial::monomial(n, outer[gi]);
    auto f = HomogeneousPolynomial::monomial(n, inner[fi]);
    HomogeneousForm residual =
        form_sub(act(g, act(f, tau, A), A), act(poly_mul(g, f), tau, A));
    return AssociativityResult{false, AssociativityCounterexample{g, f, tau, residual}};
}

namespace {

/// Radial/exact split that also covers weight 0, where forms are
/// constants and count as radial (i_R kills them).
RadialExactSplit split_any(const HomogeneousForm& f) {
    if (f.is_zero() || f.weight() == 0)
        return RadialExactSplit{
            HomogeneousForm::zero(f.var_count(), f.form_degree(), f.weight()), f};
    return radial_exact_split(f);
}

/// Decides eta = t * base exactly; returns (t, residual).
std::pair<Rational, HomogeneousForm> project_multiple(const HomogeneousForm& eta,
                                                      const HomogeneousForm& base) {
    if (eta.is_zero()) return {Rational(0), eta};
    // base != 0 here; match on base's leading term
    const auto& lead = *base.terms().begin();
    Rational t = eta.coeff(lead.first) / lead.second;
    return {t, form_sub(eta, form_scale(base, t))};
}

}  // namespace

LinearizationReport classify(const HomogeneousForm& w1, const HomogeneousForm& w2,
                             const HomogeneousForm& mu, int q, int a,
                             const VerifyBounds& witness_bounds) {
    if (q < 1)
        throw StructuralError("classify: the Id family is defined for q >= 1 only");
    const int n = w1.var_count();
    if (w2.var_count() != n || mu.var_count() != n)
        throw StructuralError("classify: variable count mismatch");
    if ((!w1.is_zero() && (w1.form_degree() != q - 1 || w1.weight() != a)) ||
        (!w2.is_zero() && (w2.form_degree() != q || w2.weight() != a)) ||
        (!mu.is_zero() && (mu.form_degree() != q || mu.weight() != a)))
        throw StructuralError("classify: inconsistent bidegrees for (q,a)");

    LinearizationReport report;

    if (w1.is_zero()) {
        // w2 ^ i_Id + lambda_mu is Omega-degreewise linear as it stands
        report.linearizable = true;
        report.omega1 = w1;
        report.omega2 = w2;
        report.mu = mu;
        report.t = Rational(0);
        report.coefficients = ActionCoefficients::trivial();
        return report;
    }

    auto fail = [&](std::string reason, const Rational& t_guess) {
        report.linearizable = false;
        report.reason = std::move(reason);
        ActionCoefficients candidate = ActionCoefficients::teo1(q, a, t_guess);
        DiffOperator D = from_id_family(w1, w2, mu, q);
        LinearityResult witness =
            verify_linearity(D, candidate, witness_bounds, Exec::serial);
        if (!witness.passed) report.counterexample = witness.counterexample;
        return report;
    };

    RadialExactSplit s1 = split_any(w1);
    const HomogeneousForm& omega1 = s1.radial_part;
    if (!s1.exact_part.is_zero()) {
        report.omega1_exact = s1.exact_part;
        return fail("w1 has a nonzero exact part", Rational(0));
    }

    const HomogeneousForm d_omega1 = ext_d(omega1);
    const Rational t1_required =
        (q % 2 == 0) ? Rational(1, q) : Rational(-1, q);

    RadialExactSplit s2 = split_any(w2);
    Rational t1(0);
    if (d_omega1.is_zero()) {
        if (!s2.exact_part.is_zero()) {
            report.omega2_residue = s2.exact_part;
            return fail("w2 has an exact part but d(w1) = 0", Rational(0));
        }
    } else {
        auto [t, residue] = project_multiple(s2.exact_part, d_omega1);
        if (!residue.is_zero()) {
            report.omega2_residue = residue;
            report.t1_found = t;
            return fail("exact residue in w2 not aligned with d(w1)", Rational(0));
        }
        t1 = t;
    }

    RadialExactSplit s3 = split_any(mu);
    Rational t2(0);
    if (d_omega1.is_zero()) {
        if (!s3.exact_part.is_zero()) {
            report.mu_residue = s3.exact_part;
            return fail("mu has an exact part but d(w1) = 0", Rational(0));
        }
    } else {
        auto [t, residue] = project_multiple(s3.exact_part, d_omega1);
        if (!residue.is_zero()) {
            report.mu_residue = residue;
            report.t1_found = t1;
            return fail("exact residue in mu not aligned with d(w1)", t);
        }
        t2 = t;
    }

    if (!d_omega1.is_zero() && t1 != t1_required) {
        report.t1_found = t1;
        return fail("t1 = " + to_string(t1) + " but the i_Id slot requires " +
                        to_string(t1_required),
                    t2);
    }

    report.linearizable = true;
    report.omega1 = omega1;
    report.omega2 = s2.radial_part;
    report.mu = s3.radial_part;
    report.t = t2;
    report.coefficients = ActionCoefficients::teo1(q, a, t2);
    return report;
}

LinearizationReport classify(const DiffOperator& op,
                             const VerifyBounds& witness_bounds) {
    if (!op.id_family())
        throw StructuralError(
            "classify: operator does not carry an Id-family presentation");
    return classify(op.id_family()->w1, op.id_family()->w2, op.id_family()->mu,
                    op.bidegree().q, op.bidegree().a, witness_bounds);
}

}  // namespace exdef
