#include "exdef/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "exdef/errors.hpp"
#include "exdef/exterior.hpp"
#include "exdef/parse.hpp"
#include "exdef/render.hpp"
#include "exdef/report.hpp"

namespace exdef::cli {

namespace {

struct WeightRange {
    int lo = 0;
    int hi = 0;
};

WeightRange parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int w = std::stoi(text);
            return {w, w};
        }
        WeightRange r{std::stoi(text.substr(0, dots)),
                      std::stoi(text.substr(dots + 2))};
        if (r.hi < r.lo) throw ParseError("empty weight range '" + text + "'", 0);
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed weight range '" + text + "'", 0);
    }
}

/// Shared coefficient-selection flags.
struct CoeffChoice {
    std::string preset;  // "dd" or "dt"
    std::string teo1;    // "q=..,a=..,t=.."
    std::string omega;   // source of a for dt
    int a = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--preset", preset, "named coefficient preset: dd or dt");
        cmd->add_option("--teo1", teo1, "explicit family 'q=<int>,a=<int>,t=<rat>'");
        cmd->add_option("--a", a, "weight parameter for --preset dt");
    }

    ActionCoefficients resolve(int n) const {
        if (!teo1.empty()) {
            int q = 0, aa = 0;
            Rational t(0);
            std::size_t pos = 0;
            std::string rest = teo1;
            // comma-separated key=value entries
            int seen = 0;
            while (pos < rest.size()) {
                auto comma = rest.find(',', pos);
                std::string piece = rest.substr(pos, comma - pos);
                auto eq = piece.find('=');
                if (eq == std::string::npos)
                    throw ParseError("malformed --teo1 entry '" + piece + "'", pos);
                std::string key = piece.substr(0, eq);
                std::string val = piece.substr(eq + 1);
                if (key == "q")
                    q = std::stoi(val);
                else if (key == "a")
                    aa = std::stoi(val);
                else if (key == "t")
                    t = rational_from_string(val);
                else
                    throw ParseError("unknown --teo1 key '" + key + "'", pos);
                ++seen;
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (seen < 2) throw ParseError("--teo1 needs at least q= and a=", 0);
            return ActionCoefficients::teo1(q, aa, t);
        }
        if (preset == "dd") return preset_dd();
        if (preset == "dt") {
            int aa = a;
            if (aa < 0 && !omega.empty())
                aa = parse_form(omega, n).weight();
            if (aa < 0)
                throw ParseError("--preset dt needs --a or --omega", 0);
            return preset_dt(aa);
        }
        throw ParseError("select coefficients with --preset or --teo1", 0);
    }
};

DiffOperator resolve_operator(const std::string& op_text,
                              const CoeffChoice& coeffs, int n) {
    if (!op_text.empty()) return parse_operator(op_text, n);
    if (coeffs.preset == "dd") return exterior_differential(n);
    if (coeffs.preset == "dt") {
        if (coeffs.omega.empty())
            throw ParseError("--preset dt needs --omega to build the operator", 0);
        return omega_triangle_operator(
            IntegrableOneForm(parse_form(coeffs.omega, n)));
    }
    throw ParseError("no operator given: use --op or a preset", 0);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct TableFormat {
    std::string format = "json";

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: json or csv")
            ->envname("EXDEF_FORMAT")
            ->check(CLI::IsMember({"json", "csv"}));
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact exterior-algebra deformations over Q[x1..xn]"};
    app.require_subcommand(1);

    // ---- parse ----
    auto* cmd_parse = app.add_subcommand("parse", "parse and canonicalize input");
    int parse_n = 3;
    std::string parse_text, parse_kind = "form";
    cmd_parse->add_option("--n", parse_n, "variable count")->required();
    cmd_parse->add_option("--form", parse_text, "expression text")->required();
    cmd_parse->add_option("--kind", parse_kind, "form|field|vvform|operator")
        ->check(CLI::IsMember({"form", "field", "vvform", "operator"}));

    // ---- apply ----
    auto* cmd_apply = app.add_subcommand("apply", "apply an operator to a form");
    int apply_n = 3;
    std::string apply_op, apply_form;
    cmd_apply->add_option("--n", apply_n, "variable count")->required();
    cmd_apply->add_option("--op", apply_op, "operator expression")->required();
    cmd_apply->add_option("--form", apply_form, "input form")->required();

    // ---- decompose ----
    auto* cmd_dec = app.add_subcommand(
        "decompose", "order test + canonical (K, L, mu) of an operator");
    int dec_n = 3, dec_rmax = 2, dec_bmax = 4;
    std::string dec_op;
    cmd_dec->add_option("--n", dec_n, "variable count")->required();
    cmd_dec->add_option("--op", dec_op, "operator expression")->required();
    cmd_dec->add_option("--r-max", dec_rmax, "probe degree bound");
    cmd_dec->add_option("--b-max", dec_bmax, "probe weight bound");

    // ---- linearize ----
    auto* cmd_lin = app.add_subcommand(
        "linearize", "classify an Id-family operator and derive coefficients");
    int lin_n = 3, lin_cmax = 3, lin_bmax = 6;
    std::string lin_idop, lin_op;
    cmd_lin->add_option("--n", lin_n, "variable count")->required();
    cmd_lin->add_option("--idop", lin_idop,
                        "id-family spec 'q=..,a=..,w1=..,w2=..,mu=..'");
    cmd_lin->add_option("--op", lin_op, "operator expression (must be idop form)");
    cmd_lin->add_option("--max-c", lin_cmax, "witness search scalar degree bound");
    cmd_lin->add_option("--max-b", lin_bmax, "witness search weight bound");

    // ---- check-linearity ----
    auto* cmd_cl =
        app.add_subcommand("check-linearity", "exhaustive D(f.tau) = f.D(tau)");
    int cl_n = 3, cl_cmax = 3, cl_bmax = 6, cl_rmax = 3;
    bool cl_serial = false;
    std::string cl_op;
    CoeffChoice cl_coeffs;
    cmd_cl->add_option("--n", cl_n, "variable count")->required();
    cmd_cl->add_option("--op", cl_op, "operator expression (defaults to preset's)");
    cmd_cl->add_option("--omega", cl_coeffs.omega, "integrable 1-form for dt");
    cl_coeffs.attach(cmd_cl);
    cmd_cl->add_option("--max-c", cl_cmax, "scalar degree bound");
    cmd_cl->add_option("--max-b", cl_bmax, "weight bound");
    cmd_cl->add_option("--max-r", cl_rmax, "form degree bound");
    cmd_cl->add_flag("--serial", cl_serial, "single-threaded reference scan");

    // ---- check-associativity ----
    auto* cmd_ca = app.add_subcommand("check-associativity",
                                      "exhaustive g.(f.tau) = (gf).tau");
    int ca_n = 3, ca_cmax = 2, ca_bmax = 6, ca_rmax = 3, ca_emax = 2;
    bool ca_serial = false;
    CoeffChoice ca_coeffs;
    cmd_ca->add_option("--n", ca_n, "variable count")->required();
    cmd_ca->add_option("--omega", ca_coeffs.omega, "integrable 1-form for dt");
    ca_coeffs.attach(cmd_ca);
    cmd_ca->add_option("--max-c", ca_cmax, "inner scalar degree bound");
    cmd_ca->add_option("--max-e", ca_emax, "outer scalar degree bound");
    cmd_ca->add_option("--max-b", ca_bmax, "weight bound");
    cmd_ca->add_option("--max-r", ca_rmax, "form degree bound");
    cmd_ca->add_flag("--serial", ca_serial, "single-threaded reference scan");

    // ---- hilbert ----
    auto* cmd_hil = app.add_subcommand(
        "hilbert", "degreewise dimension/rank/kernel table of an operator");
    int hil_n = 3, hil_r = 1;
    std::string hil_op, hil_weights = "1..6";
    CoeffChoice hil_coeffs;
    TableFormat hil_fmt;
    cmd_hil->add_option("--n", hil_n, "variable count")->required();
    cmd_hil->add_option("--op", hil_op, "operator expression")->required();
    cmd_hil->add_option("--r", hil_r, "form degree of the domain")->required();
    cmd_hil->add_option("--weights", hil_weights, "weight range lo..hi");
    cmd_hil->add_option("--omega", hil_coeffs.omega, "integrable 1-form for dt");
    hil_coeffs.attach(cmd_hil);
    hil_fmt.attach(cmd_hil);

    // ---- generators ----
    auto* cmd_gen = app.add_subcommand(
        "generators", "minimal generator counts of ker(D) under the action");
    int gen_n = 3, gen_r = 1;
    std::string gen_op, gen_weights = "1..6";
    CoeffChoice gen_coeffs;
    TableFormat gen_fmt;
    cmd_gen->add_option("--n", gen_n, "variable count")->required();
    cmd_gen->add_option("--op", gen_op, "operator expression")->required();
    cmd_gen->add_option("--r", gen_r, "form degree")->required();
    cmd_gen->add_option("--weights", gen_weights, "weight range lo..hi");
    cmd_gen->add_option("--omega", gen_coeffs.omega, "integrable 1-form for dt");
    gen_coeffs.attach(cmd_gen);
    gen_fmt.attach(cmd_gen);

    // ---- reduce ----
    auto* cmd_red = app.add_subcommand(
        "reduce", "degree-reduction certificate for one basis element");
    int red_n = 3;
    std::string red_target;
    CoeffChoice red_coeffs;
    cmd_red->add_option("--n", red_n, "variable count")->required();
    cmd_red->add_option("--target", red_target, "basis element x^gamma dx_I")
        ->required();
    cmd_red->add_option("--omega", red_coeffs.omega, "integrable 1-form for dt");
    red_coeffs.attach(cmd_red);

    // ---- complex ----
    auto* cmd_cx = app.add_subcommand(
        "complex", "build the regularity complex and verify d.d = 0");
    int cx_n = 3;
    std::string cx_omega, cx_weights = "0..6";
    cmd_cx->add_option("--n", cx_n, "variable count")->required();
    cmd_cx->add_option("--omega", cx_omega, "integrable 1-form")->required();
    cmd_cx->add_option("--weights", cx_weights, "weight range lo..hi");

    // ---- phi ----
    auto* cmd_phi = app.add_subcommand(
        "phi", "kernel dimensions and homology at position 1");
    int phi_n = 3;
    std::string phi_omega_text, phi_weights = "0..6";
    TableFormat phi_fmt;
    cmd_phi->add_option("--n", phi_n, "variable count")->required();
    cmd_phi->add_option("--omega", phi_omega_text, "integrable 1-form")->required();
    cmd_phi->add_option("--weights", phi_weights, "weight range lo..hi");
    phi_fmt.attach(cmd_phi);

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("exdef");
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_parse) {
            Json j = report_envelope("parse");
            j["n"] = parse_n;
            j["kind"] = parse_kind;
            if (parse_kind == "form") {
                HomogeneousForm f = parse_form(parse_text, parse_n);
                j["canonical"] = render(f);
                j["form_degree"] = f.form_degree();
                j["weight"] = f.weight();
                j["terms"] = f.terms().size();
            } else if (parse_kind == "field") {
                HomogeneousField f = parse_field(parse_text, parse_n);
                j["canonical"] = render(f);
                j["weight"] = f.weight();
            } else if (parse_kind == "vvform") {
                VectorValuedForm f = parse_vvform(parse_text, parse_n);
                j["canonical"] = render(f);
                j["form_degree"] = f.form_degree();
                j["weight"] = f.weight();
            } else {
                DiffOperator op = parse_operator(parse_text, parse_n);
                j["K"] = render(op.K());
                j["L"] = render(op.L());
                j["mu"] = render(op.mu());
                j["q"] = op.bidegree().q;
                j["a"] = op.bidegree().a;
            }
            emit(out, j);
        } else if (*cmd_apply) {
            DiffOperator op = parse_operator(apply_op, apply_n);
            HomogeneousForm tau = parse_form(apply_form, apply_n);
            HomogeneousForm result = op.apply(tau);
            Json j = report_envelope("apply");
            j["n"] = apply_n;
            j["result"] = render(result);
            j["form_degree"] = result.form_degree();
            j["weight"] = result.weight();
            emit(out, j);
        } else if (*cmd_dec) {
            DiffOperator op = parse_operator(dec_op, dec_n);
            BlackBoxOperator box = BlackBoxOperator::of(op, dec_rmax, dec_bmax);
            BracketTestResult order =
                bracket_order_test(box, BracketTestBounds{dec_rmax, dec_bmax});
            Json j = report_envelope("decompose");
            j["n"] = dec_n;
            j["order_test"] = order.passed ? "pass" : "fail";
            if (order.passed) {
                DiffOperator rec = decompose(box);
                j["K"] = render(rec.K());
                j["L"] = render(rec.L());
                j["mu"] = render(rec.mu());
                j["q"] = rec.bidegree().q;
                j["a"] = rec.bidegree().a;
            } else {
                j["witness"]["mu"] = render(order.mu);
                j["witness"]["tau"] = render(order.tau);
                j["witness"]["rho"] = render(order.rho);
                j["witness"]["residual"] = render(order.residual);
            }
            emit(out, j);
            return order.passed ? 0 : 1;
        } else if (*cmd_lin) {
            if (lin_idop.empty() == lin_op.empty())
                throw ParseError("linearize needs exactly one of --idop / --op", 0);
            std::string text =
                lin_idop.empty() ? lin_op : "idop(" + lin_idop + ")";
            DiffOperator op = parse_operator(text, lin_n);
            VerifyBounds bounds;
            bounds.c_max = lin_cmax;
            bounds.b_max = lin_bmax;
            LinearizationReport rep = classify(op, bounds);
            Json j = report_envelope("linearize");
            j["n"] = lin_n;
            j["report"] = json_linearization(rep, lin_n, op.bidegree().q,
                                             op.bidegree().a);
            emit(out, j);
            return rep.linearizable ? 0 : 1;
        } else if (*cmd_cl) {
            ActionCoefficients A = cl_coeffs.resolve(cl_n);
            DiffOperator op = resolve_operator(cl_op, cl_coeffs, cl_n);
            VerifyBounds bounds{cl_cmax, cl_rmax, cl_bmax, 2};
            LinearityResult res = verify_linearity(
                op, A, bounds, cl_serial ? Exec::serial : Exec::parallel);
            Json j = report_envelope("check-linearity");
            j["n"] = cl_n;
            j["bounds"] = {{"max_c", cl_cmax}, {"max_b", cl_bmax},
                           {"max_r", cl_rmax}};
            j["result"] = res.passed ? "pass" : "fail";
            if (!res.passed)
                j["counterexample"] = json_counterexample(*res.counterexample);
            emit(out, j);
            return res.passed ? 0 : 1;
        } else if (*cmd_ca) {
            ActionCoefficients A = ca_coeffs.resolve(ca_n);
            VerifyBounds bounds{ca_cmax, ca_rmax, ca_bmax, ca_emax};
            AssociativityResult res = verify_associativity(
                ca_n, A, bounds, ca_serial ? Exec::serial : Exec::parallel);
            Json j = report_envelope("check-associativity");
            j["n"] = ca_n;
            j["bounds"] = {{"max_c", ca_cmax}, {"max_e", ca_emax},
                           {"max_b", ca_bmax}, {"max_r", ca_rmax}};
            j["result"] = res.passed ? "pass" : "fail";
            if (!res.passed) {
                j["counterexample"]["g"] = render(res.counterexample->g);
                j["counterexample"]["f"] = render(res.counterexample->f);
                j["counterexample"]["tau"] = render(res.counterexample->tau);
                j["counterexample"]["residual"] =
                    render(res.counterexample->residual);
            }
            emit(out, j);
            return res.passed ? 0 : 1;
        } else if (*cmd_hil) {
            DiffOperator op = parse_operator(hil_op, hil_n);
            WeightRange range = parse_range(hil_weights);
            std::optional<ActionCoefficients> A;
            if (!hil_coeffs.preset.empty() || !hil_coeffs.teo1.empty())
                A = hil_coeffs.resolve(hil_n);
            DegreeTable table = kernel_dims(op, hil_r, range.lo, range.hi,
                                            A ? &*A : nullptr);
            if (hil_fmt.format == "csv") {
                out << csv_table(table);
            } else {
                Json j = report_envelope("hilbert");
                j["n"] = hil_n;
                j["rows"] = json_table(table);
                emit(out, j);
            }
        } else if (*cmd_gen) {
            DiffOperator op = parse_operator(gen_op, gen_n);
            WeightRange range = parse_range(gen_weights);
            ActionCoefficients A = gen_coeffs.resolve(gen_n);
            DegreewiseFamily V = kernel_family(op, gen_r, range.lo, range.hi);
            DegreeTable table = generator_degrees(V, A);
            if (gen_fmt.format == "csv") {
                out << csv_table(table);
            } else {
                Json j = report_envelope("generators");
                j["n"] = gen_n;
                j["rows"] = json_table(table);
                emit(out, j);
            }
        } else if (*cmd_red) {
            ActionCoefficients A =
                red_coeffs.resolve(red_n).raised(red_n + 1);
            HomogeneousForm target = parse_form(red_target, red_n);
            if (target.terms().size() != 1 ||
                target.terms().begin()->second != 1)
                throw ParseError("--target must be a single basis element", 0);
            ReductionCertificate cert =
                reduce_degree(red_n, target.terms().begin()->first, A);
            Json j = report_envelope("reduce");
            j["n"] = red_n;
            j["certificate"] = json_certificate(cert, A);
            emit(out, j);
        } else if (*cmd_cx) {
            WeightRange range = parse_range(cx_weights);
            IntegrableOneForm omega(parse_form(cx_omega, cx_n));
            RegularityComplex complex =
                build_complex(omega, range.lo, range.hi);
            Json j = report_envelope("complex");
            j["n"] = cx_n;
            j["omega"] = render(omega.form());
            j["composites_zero"] = true;  // build_complex verified them
            Json slices = Json::array();
            for (const auto& slice : complex.slices) {
                Json s;
                s["w"] = slice.w;
                Json dims = Json::array();
                for (const auto& m : slice.differentials)
                    dims.push_back({{"rows", m.rows()}, {"cols", m.cols()}});
                s["differentials"] = std::move(dims);
                slices.push_back(std::move(s));
            }
            j["slices"] = std::move(slices);
            emit(out, j);
        } else if (*cmd_phi) {
            WeightRange range = parse_range(phi_weights);
            IntegrableOneForm omega(parse_form(phi_omega_text, phi_n));
            std::vector<PhiRow> rows = phi_omega(omega, range.lo, range.hi);
            if (phi_fmt.format == "csv") {
                out << csv_phi_rows(rows);
            } else {
                Json j = report_envelope("phi");
                j["n"] = phi_n;
                j["omega"] = render(omega.form());
                j["rows"] = json_phi_rows(rows);
                emit(out, j);
            }
        }
        return 0;
    } catch (const std::exception& e) {
        Json j;
        j["schema"] = kSchemaVersion;
        std::string kind = "internal";
        if (dynamic_cast<const ParseError*>(&e)) kind = "parse";
        else if (dynamic_cast<const TruncationError*>(&e)) kind = "truncation";
        else if (dynamic_cast<const ReductionUnavailableError*>(&e))
            kind = "reduction-unavailable";
        else if (dynamic_cast<const CoefficientDomainError*>(&e))
            kind = "coefficient-domain";
        else if (dynamic_cast<const DomainError*>(&e)) kind = "domain";
        else if (dynamic_cast<const BoundsError*>(&e)) kind = "bounds";
        else if (dynamic_cast<const NotOrderOneError*>(&e)) kind = "not-order-one";
        else if (dynamic_cast<const NotASubmoduleError*>(&e))
            kind = "not-a-submodule";
        else if (dynamic_cast<const StructuralError*>(&e)) kind = "structural";
        j["error"] = {{"kind", kind}, {"message", e.what()}};
        emit(out, j);
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace exdef::cli
