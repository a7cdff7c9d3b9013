#include "exdef/form.hpp"

#include "exdef/errors.hpp"

namespace exdef {

HomogeneousForm HomogeneousForm::basis(int var_count, const MultiIndex& gamma,
                                       const IndexSet& dx, const Rational& coeff) {
    HomogeneousForm f(var_count, dx.size(), gamma.degree() + dx.size());
    f.add_term(gamma, dx, coeff);
    return f;
}

HomogeneousForm HomogeneousForm::from_polynomial(const HomogeneousPolynomial& p) {
    HomogeneousForm f(p.var_count(), 0, p.degree());
    for (const auto& [gamma, c] : p.terms()) f.add_term(gamma, IndexSet{}, c);
    return f;
}

HomogeneousForm HomogeneousForm::one(int var_count) {
    HomogeneousForm f(var_count, 0, 0);
    f.add_term(MultiIndex(var_count), IndexSet{}, 1);
    return f;
}

Rational HomogeneousForm::coeff(const FormTermKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousForm::add_term(const MultiIndex& gamma, const IndexSet& dx,
                               const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    if (gamma.var_count() != n_)
        throw StructuralError("form term has wrong variable count");
    if (dx.size() != r_)
        throw StructuralError("form term has wrong dx count for degree " +
                              std::to_string(r_));
    if (gamma.degree() + r_ != b_)
        throw StructuralError("form term weight mismatch: |gamma|+r != b");
    auto v = dx.to_vector();
    if (!v.empty() && v.back() > n_)
        throw StructuralError("dx index exceeds variable count");
    FormTermKey key{gamma, dx};
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void HomogeneousForm::add_term_signed(const MultiIndex& gamma,
                                      const std::vector<int>& dx_list,
                                      const Rational& coeff) {
    IndexSet set;
    int sign = 1;
    for (int var : dx_list) {
        if (set.contains(var)) return;  // dx_i ^ dx_i = 0
        sign *= (set.count_above(var) % 2 == 0) ? 1 : -1;
        set = set.with(var);
    }
    add_term(gamma, set, sign > 0 ? coeff : -coeff);
}

HomogeneousPolynomial HomogeneousForm::component(const IndexSet& dx) const {
    HomogeneousPolynomial p(n_, b_ - r_);
    for (const auto& [key, c] : terms_)
        if (key.dx == dx) p.add_term(key.gamma, c);
    return p;
}

bool HomogeneousForm::operator==(const HomogeneousForm& other) const {
    if (n_ != other.n_) return false;
    // zero forms compare equal regardless of bidegree tags
    if (terms_.empty() && other.terms_.empty()) return true;
    return r_ == other.r_ && b_ == other.b_ && terms_ == other.terms_;
}

HomogeneousForm form_add(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.var_count() != b.var_count())
        throw StructuralError("form_add: variable count mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.form_degree() != b.form_degree() || a.weight() != b.weight())
        throw StructuralError("form_add: bidegree mismatch (" +
                              std::to_string(a.form_degree()) + "," +
                              std::to_string(a.weight()) + ") vs (" +
                              std::to_string(b.form_degree()) + "," +
                              std::to_string(b.weight()) + ")");
    HomogeneousForm out = a;
    for (const auto& [key, c] : b.terms()) out.add_term(key.gamma, key.dx, c);
    return out;
}

HomogeneousForm form_sub(const HomogeneousForm& a, const HomogeneousForm& b) {
    return form_add(a, form_neg(b));
}

HomogeneousForm form_scale(const HomogeneousForm& a, const Rational& c) {
    HomogeneousForm out(a.var_count(), a.form_degree(), a.weight());
    if (sgn(c) == 0) return out;
    for (const auto& [key, v] : a.terms()) out.add_term(key.gamma, key.dx, v * c);
    return out;
}

HomogeneousForm form_neg(const HomogeneousForm& a) {
    return form_scale(a, Rational(-1));
}

HomogeneousForm form_poly_mul(const HomogeneousPolynomial& f,
                              const HomogeneousForm& a) {
    if (f.var_count() != a.var_count())
        throw StructuralError("form_poly_mul: variable count mismatch");
    HomogeneousForm out(a.var_count(), a.form_degree(), a.weight() + f.degree());
    for (const auto& [gamma, c] : f.terms())
        for (const auto& [key, v] : a.terms())
            out.add_term(key.gamma + gamma, key.dx, c * v);
    return out;
}

FormBasis::FormBasis(int var_count, int form_degree, int weight)
    : n_(var_count), r_(form_degree), b_(weight) {
    if (r_ < 0 || r_ > n_ || b_ < r_) return;  // empty basis
    const auto sets = index_sets_of_size(n_, r_);
    const auto monos = monomials_of_degree(n_, b_ - r_);
    keys_.reserve(sets.size() * monos.size());
    for (const auto& dx : sets)
        for (const auto& gamma : monos) keys_.push_back(FormTermKey{gamma, dx});
    for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
}

std::size_t FormBasis::index_of(const FormTermKey& key) const {
    auto it = index_.find(key);
    if (it == index_.end())
        throw StructuralError("basis key not in Omega^r(b) enumeration");
    return it->second;
}

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::size_t result = 1;
    for (int i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
    return result;
}

std::size_t form_dimension(int var_count, int form_degree, int weight) {
    if (form_degree < 0 || form_degree > var_count || weight < form_degree) return 0;
    return binomial(var_count, form_degree) *
           binomial(var_count - 1 + weight - form_degree, weight - form_degree);
}

}  // namespace exdef
