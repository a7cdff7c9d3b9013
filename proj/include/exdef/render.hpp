#pragma once

#include <string>

#include "exdef/field.hpp"
#include "exdef/form.hpp"
#include "exdef/polynomial.hpp"
#include "exdef/vector_valued.hpp"

namespace exdef {

/// Canonical text rendering, terms in enumerator order:
/// `3/2*x1^2*x2 dx1^dx3 - x2^3 dx2`.  parse_form(render(f)) == f.
std::string render(const HomogeneousForm& form);

/// `x1^2 d/dx3 + 2*x2 d/dx1` style.
std::string render(const HomogeneousField& field);

/// `3/2*x1^2*x2` style.
std::string render(const HomogeneousPolynomial& poly);

/// Component sums `(<form>) @ d/dxi` joined with ` + `.
std::string render(const VectorValuedForm& vv);

}  // namespace exdef
