#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exdef/form.hpp"
#include "exdef/operators.hpp"
#include "exdef/polynomial.hpp"

namespace exdef {

/// The pair of functions alpha(r,b,c), beta(r,b,c) of a deformed action
/// f.tau = alpha f tau + beta df ^ i_R tau, carried with the truncation
/// thresholds n_r below which the action is undefined.
///
/// Three kinds: the trivial pair (alpha = 1, beta = 0, usual
/// multiplication), the closed-form family parameterized by (q, a, t)
/// with
///   alpha(r,b,c) = (b - a(r/q + (-1)^q t)) / (b + c - a(r/q + (-1)^q t))
///   beta(r,b,c)  = alpha(r,b,c) / (b - a(r/q + (-1)^q t)),
/// and a custom table for experiments with hand-built coefficients.
class ActionCoefficients {
public:
    using CoeffFn =
        std::function<std::pair<Rational, Rational>(int r, int b, int c)>;

    static ActionCoefficients trivial();
    static ActionCoefficients teo1(int q, int a, const Rational& t);
    /// Custom pair function with an explicit threshold function n_r.
    static ActionCoefficients custom(CoeffFn fn, std::function<int(int)> threshold);

    bool is_trivial() const { return kind_ == Kind::trivial; }
    bool is_teo1() const { return kind_ == Kind::teo1; }

    /// teo1 parameters; meaningful only when is_teo1().
    int q() const { return q_; }
    int a() const { return a_; }
    const Rational& t() const { return t_; }

    Rational alpha(int r, int b, int c) const;
    Rational beta(int r, int b, int c) const;

    /// Truncation threshold n_r: the smallest admissible weight for
    /// degree-r forms.  For teo1 coefficients this is the smallest
    /// integer > a(r/q + (-1)^q t), raised to any floor installed by
    /// raise_thresholds.
    int threshold(int r) const;

    /// Returns a copy whose thresholds additionally satisfy n_r >= floor,
    /// as required by the finite-generation analysis (n_r > n).
    ActionCoefficients raised(int floor) const;

private:
    enum class Kind { trivial, teo1, custom };

    ActionCoefficients() = default;

    Kind kind_ = Kind::trivial;
    int q_ = 1;
    int a_ = 0;
    Rational t_ = 0;
    int floor_ = 0;
    CoeffFn custom_fn_;
    std::function<int(int)> custom_threshold_;
};

/// Convenience named presets: "dd" is the exterior-differential action
/// (q=1, a=0, t=0); "dt" is the regularity-complex action (q=2, a, t=1/2).
ActionCoefficients preset_dd();
ActionCoefficients preset_dt(int a);

/// The deformed action f.tau = alpha(r,b,c) f tau + beta(r,b,c) df ^ i_R tau.
/// Degree-0 scalars always act by plain multiplication (condition a)).
/// Throws TruncationError below threshold and CoefficientDomainError on a
/// vanished denominator (unreachable with teo1 thresholds).
HomogeneousForm act(const HomogeneousPolynomial& f, const HomogeneousForm& tau,
                    const ActionCoefficients& A);

/// A concrete (f, tau) pair where D(f.tau) != f.D(tau), with the residual.
struct LinearityCounterexample {
    HomogeneousPolynomial f;
    HomogeneousForm tau;
    HomogeneousForm residual;
};

struct VerifyBounds {
    int c_max = 3;  // scalar degrees 1..c_max
    int r_max = 3;
    int b_max = 6;
    int e_max = 2;  // outer scalar degree for associativity
};

struct LinearityResult {
    bool passed = true;
    std::optional<LinearityCounterexample> counterexample;

    explicit operator bool() const { return passed; }
};

enum class Exec { serial, parallel };

/// Exhaustive exact check of D(f.tau) = f.D(tau) over monomials f with
/// 1 <= deg f <= c_max and basis tau with r <= r_max, n_r <= b <= b_max.
/// On failure reports the lexicographically smallest (c, b, r, basis
/// index) counterexample.  The parallel path partitions the grid and
/// merges the smallest counterexample; the serial path is the reference.
LinearityResult verify_linearity(const DiffOperator& D, const ActionCoefficients& A,
                                 const VerifyBounds& bounds,
                                 Exec exec = Exec::parallel);

struct AssociativityCounterexample {
    HomogeneousPolynomial g, f;
    HomogeneousForm tau;
    HomogeneousForm residual;
};

struct AssociativityResult {
    bool passed = true;
    std::optional<AssociativityCounterexample> counterexample;

    explicit operator bool() const { return passed; }
};

/// Exhaustive exact check of g.(f.tau) = (gf).tau on monomials.
AssociativityResult verify_associativity(int var_count, const ActionCoefficients& A,
                                         const VerifyBounds& bounds,
                                         Exec exec = Exec::parallel);

/// Outcome of the linearizability classification over the Id family.
struct LinearizationReport {
    bool linearizable = false;

    // on success: the normal form and derived coefficients
    std::optional<HomogeneousForm> omega1, omega2, mu;
    std::optional<Rational> t;
    std::optional<ActionCoefficients> coefficients;

    // on failure: the offending decomposition pieces and a concrete
    // counterexample to condition b)
    std::optional<HomogeneousForm> omega1_exact;    // nonzero exact part of w1
    std::optional<HomogeneousForm> omega2_residue;  // exact residue of w2
    std::optional<HomogeneousForm> mu_residue;      // exact residue of mu
    std::optional<Rational> t1_found;               // extracted t1 when wrong
    std::optional<LinearityCounterexample> counterexample;
    std::string reason;
};

/// Classifies an Id-family operator (w1, w2, mu) of bidegree (q,a):
/// linearizable iff the exact part of w1 vanishes, the exact parts of w2
/// and mu are exact multiples t1*d(w1) and t2*d(w1), and t1 = (-1)^q/q.
/// On success returns teo1(q, a, t2) (or the trivial coefficients when
/// w1 = 0).  q >= 1 required; other q are rejected outright.
LinearizationReport classify(const HomogeneousForm& w1, const HomogeneousForm& w2,
                             const HomogeneousForm& mu, int q, int a,
                             const VerifyBounds& witness_bounds = VerifyBounds{});

/// Classify an operator that carries its Id-family presentation.
LinearizationReport classify(const DiffOperator& op,
                             const VerifyBounds& witness_bounds = VerifyBounds{});

}  // namespace exdef
