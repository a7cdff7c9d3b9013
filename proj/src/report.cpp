#include "exdef/report.hpp"

#include <sstream>

#include "exdef/render.hpp"

namespace exdef {

Json report_envelope(const std::string& command) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

Json json_rational(const Rational& value) { return to_string(value); }

Json json_table(const DegreeTable& table) {
    Json rows = Json::array();
    for (const auto& row : table) {
        Json r;
        r["r"] = row.r;
        r["b"] = row.b;
        r["dimension"] = row.dimension;
        r["rank"] = row.rank;
        r["kernel"] = row.kernel;
        r["image"] = row.image;
        r["in_domain"] = row.in_domain;
        if (row.new_generators) r["new_generators"] = *row.new_generators;
        rows.push_back(std::move(r));
    }
    return rows;
}

Json json_phi_rows(const std::vector<PhiRow>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json r;
        r["w"] = row.w;
        r["dim_omega1"] = row.dim_omega1;
        r["phi"] = row.phi;
        r["rank_in"] = row.rank_in;
        r["homology_1"] = row.homology;
        r["regular"] = row.regular;
        out.push_back(std::move(r));
    }
    return out;
}

Json json_counterexample(const LinearityCounterexample& ce) {
    Json j;
    j["f"] = render(ce.f);
    j["tau"] = render(ce.tau);
    j["residual"] = render(ce.residual);
    return j;
}

namespace {

/// Renders the linear expression a(r/q + (-1)^q t) = c1*r + c0.
std::string theta_string(const Rational& c1, const Rational& c0) {
    if (sgn(c1) == 0) return to_string(c0);
    std::ostringstream out;
    if (c1 == 1)
        out << "r";
    else
        out << "(" << to_string(c1) << ")*r";
    if (sgn(c0) > 0)
        out << " + " << to_string(c0);
    else if (sgn(c0) < 0)
        out << " - " << to_string(-c0);
    return out.str();
}

}  // namespace

Json json_coefficients(const ActionCoefficients& A, int r_limit) {
    Json j;
    if (A.is_trivial()) {
        j["family"] = "trivial";
        j["alpha"] = "1";
        j["beta"] = "0";
        return j;
    }
    if (!A.is_teo1()) {
        j["family"] = "custom";
        return j;
    }
    j["family"] = "teo1";
    j["q"] = A.q();
    j["a"] = A.a();
    j["t"] = json_rational(A.t());
    const Rational c1 = Rational(A.a()) / Rational(A.q());
    const Rational c0 =
        Rational(A.a()) * ((A.q() % 2 == 0) ? A.t() : -A.t());
    const std::string th = theta_string(c1, c0);
    if (th == "0") {
        j["alpha"] = "b/(b + c)";
        j["beta"] = "1/(b + c)";
    } else {
        j["alpha"] = "(b - (" + th + "))/(b + c - (" + th + "))";
        j["beta"] = "1/(b + c - (" + th + "))";
    }
    Json thresholds = Json::array();
    for (int r = 0; r <= r_limit; ++r) {
        Json row;
        row["r"] = r;
        row["n_r"] = A.threshold(r);
        thresholds.push_back(std::move(row));
    }
    j["thresholds"] = std::move(thresholds);
    return j;
}

Json json_linearization(const LinearizationReport& report, int var_count, int q,
                        int a) {
    Json j;
    j["q"] = q;
    j["a"] = a;
    j["verdict"] = report.linearizable ? "linearizable" : "not-linearizable";
    if (report.linearizable) {
        j["omega1"] = render(*report.omega1);
        j["omega2"] = render(*report.omega2);
        j["mu"] = render(*report.mu);
        j["t"] = json_rational(*report.t);
        j["coefficients"] = json_coefficients(*report.coefficients, var_count);
    } else {
        j["reason"] = report.reason;
        if (report.omega1_exact) j["omega1_exact"] = render(*report.omega1_exact);
        if (report.omega2_residue)
            j["omega2_residue"] = render(*report.omega2_residue);
        if (report.mu_residue) j["mu_residue"] = render(*report.mu_residue);
        if (report.t1_found) j["t1_found"] = json_rational(*report.t1_found);
        if (report.counterexample)
            j["counterexample"] = json_counterexample(*report.counterexample);
    }
    return j;
}

Json json_certificate(const ReductionCertificate& cert,
                      const ActionCoefficients& A) {
    Json j;
    j["target"] = render(HomogeneousForm::basis(cert.var_count, cert.target.gamma,
                                                cert.target.dx));
    j["r"] = cert.form_degree;
    j["weight"] = cert.weight;
    Json terms = Json::array();
    for (const auto& term : cert.terms) {
        Json t;
        t["coeff"] = json_rational(term.coeff);
        t["f"] = render(HomogeneousPolynomial::monomial(cert.var_count, term.f));
        t["tau"] = render(term.tau);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    j["residual"] = render(replay_residual(cert, A));
    return j;
}

std::string csv_table(const DegreeTable& table) {
    std::ostringstream out;
    out << "r,b,dimension,rank,kernel,image,new_generators,in_domain\n";
    for (const auto& row : table) {
        out << row.r << "," << row.b << "," << row.dimension << "," << row.rank
            << "," << row.kernel << "," << row.image << ",";
        if (row.new_generators) out << *row.new_generators;
        out << "," << (row.in_domain ? "true" : "false") << "\n";
    }
    return out.str();
}

std::string csv_phi_rows(const std::vector<PhiRow>& rows) {
    std::ostringstream out;
    out << "w,dim_omega1,phi,rank_in,homology_1,regular\n";
    for (const auto& row : rows)
        out << row.w << "," << row.dim_omega1 << "," << row.phi << ","
            << row.rank_in << "," << row.homology << ","
            << (row.regular ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace exdef
