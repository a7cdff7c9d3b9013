#include "exdef/field.hpp"

#include "exdef/errors.hpp"

namespace exdef {

HomogeneousField HomogeneousField::basis(int var_count, const MultiIndex& gamma,
                                         int dir, const Rational& coeff) {
    HomogeneousField f(var_count, gamma.degree() - 1);
    f.add_term(gamma, dir, coeff);
    return f;
}

HomogeneousField HomogeneousField::coordinate(int var_count, int dir) {
    return basis(var_count, MultiIndex(var_count), dir);
}

void HomogeneousField::add_term(const MultiIndex& gamma, int dir,
                                const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    if (gamma.var_count() != n_)
        throw StructuralError("field term has wrong variable count");
    if (dir < 1 || dir > n_)
        throw StructuralError("field direction out of range");
    if (gamma.degree() - 1 != b_)
        throw StructuralError("field term weight mismatch: |gamma|-1 != b");
    FieldTermKey key{gamma, dir};
    auto [it, inserted] = terms_.emplace(std::move(key), coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

HomogeneousPolynomial HomogeneousField::component(int dir) const {
    HomogeneousPolynomial p(n_, b_ + 1);
    for (const auto& [key, c] : terms_)
        if (key.dir == dir) p.add_term(key.gamma, c);
    return p;
}

bool HomogeneousField::operator==(const HomogeneousField& other) const {
    if (n_ != other.n_) return false;
    if (terms_.empty() && other.terms_.empty()) return true;
    return b_ == other.b_ && terms_ == other.terms_;
}

HomogeneousField field_add(const HomogeneousField& a, const HomogeneousField& b) {
    if (a.var_count() != b.var_count())
        throw StructuralError("field_add: variable count mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.weight() != b.weight())
        throw StructuralError("field_add: weight mismatch");
    HomogeneousField out = a;
    for (const auto& [key, c] : b.terms()) out.add_term(key.gamma, key.dir, c);
    return out;
}

HomogeneousField field_scale(const HomogeneousField& a, const Rational& c) {
    HomogeneousField out(a.var_count(), a.weight());
    if (sgn(c) == 0) return out;
    for (const auto& [key, v] : a.terms()) out.add_term(key.gamma, key.dir, v * c);
    return out;
}

HomogeneousField field_poly_mul(const HomogeneousPolynomial& f,
                                const HomogeneousField& a) {
    if (f.var_count() != a.var_count())
        throw StructuralError("field_poly_mul: variable count mismatch");
    HomogeneousField out(a.var_count(), a.weight() + f.degree());
    for (const auto& [gamma, c] : f.terms())
        for (const auto& [key, v] : a.terms())
            out.add_term(key.gamma + gamma, key.dir, c * v);
    return out;
}

HomogeneousField radial_field(int var_count) {
    if (var_count < 1) throw StructuralError("radial_field: need n >= 1");
    HomogeneousField R(var_count, 0);
    for (int i = 1; i <= var_count; ++i)
        R.add_term(MultiIndex::unit(var_count, i), i, 1);
    return R;
}

FieldBasis::FieldBasis(int var_count, int weight) {
    if (weight < -1) return;
    const auto monos = monomials_of_degree(var_count, weight + 1);
    keys_.reserve(static_cast<std::size_t>(var_count) * monos.size());
    for (int dir = 1; dir <= var_count; ++dir)
        for (const auto& gamma : monos) keys_.push_back(FieldTermKey{gamma, dir});
    for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
}

std::size_t FieldBasis::index_of(const FieldTermKey& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw StructuralError("key not in T(b) enumeration");
    return it->second;
}

std::size_t field_dimension(int var_count, int weight) {
    if (weight < -1) return 0;
    return static_cast<std::size_t>(var_count) *
           binomial(var_count + weight, weight + 1);
}

}  // namespace exdef
