#include "exdef/render.hpp"

#include <sstream>

namespace exdef {

namespace {

std::string monomial_text(const MultiIndex& gamma) {
    std::ostringstream out;
    bool first = true;
    for (int v = 1; v <= gamma.var_count(); ++v) {
        int e = gamma.exponent(v);
        if (e == 0) continue;
        if (!first) out << "*";
        out << "x" << v;
        if (e > 1) out << "^" << e;
        first = false;
    }
    return out.str();
}

std::string dx_text(const IndexSet& dx) {
    std::ostringstream out;
    bool first = true;
    for (int v : dx.to_vector()) {
        if (!first) out << "^";
        out << "dx" << v;
        first = false;
    }
    return out.str();
}

/// One rendered term: sign handled by the caller, magnitude here.
std::string term_text(const Rational& coeff, const MultiIndex& gamma,
                      const std::string& tail) {
    Rational mag = abs(coeff);
    std::string mono = monomial_text(gamma);
    std::string head;
    if (mag != 1 || (mono.empty() && tail.empty()))
        head = to_string(mag);
    if (!mono.empty()) head = head.empty() ? mono : head + "*" + mono;
    if (tail.empty()) return head;
    return head.empty() ? tail : head + " " + tail;
}

template <typename TermMap, typename TailOf>
std::string render_terms(const TermMap& terms, TailOf tail_of) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : terms) {
        if (first) {
            if (sgn(coeff) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(coeff) < 0 ? " - " : " + ");
        }
        out << tail_of(key, coeff);
    }
    return out.str();
}

}  // namespace

std::string render(const HomogeneousForm& form) {
    return render_terms(form.terms(), [](const FormTermKey& key, const Rational& c) {
        return term_text(c, key.gamma, dx_text(key.dx));
    });
}

std::string render(const HomogeneousField& field) {
    return render_terms(field.terms(), [](const FieldTermKey& key, const Rational& c) {
        return term_text(c, key.gamma, "d/dx" + std::to_string(key.dir));
    });
}

std::string render(const HomogeneousPolynomial& poly) {
    return render_terms(poly.terms(), [](const MultiIndex& gamma, const Rational& c) {
        return term_text(c, gamma, "");
    });
}

std::string render(const VectorValuedForm& vv) {
    if (vv.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int dir = 1; dir <= vv.var_count(); ++dir) {
        const HomogeneousForm& comp = vv.component(dir);
        if (comp.is_zero()) continue;
        if (!first) out << " + ";
        out << "(" << render(comp) << ") @ d/dx" << dir;
        first = false;
    }
    return out.str();
}

}  // namespace exdef
