#pragma once

#include <string>

#include "exdef/field.hpp"
#include "exdef/form.hpp"
#include "exdef/operators.hpp"
#include "exdef/vector_valued.hpp"

namespace exdef {

/// Grammar: form := ['-'] term (('+'|'-') term)*
///          term := coef? monomial? wedgechain?
///          coef := INT | INT '/' INT
///          monomial := x<i> ('^' INT)? ('*' x<j> ...)*
///          wedgechain := dx<i> ('^' dx<j>)*
/// Terms must share one bidegree; otherwise the diagnostic lists the
/// offending bidegrees.  All errors carry the source position.
HomogeneousForm parse_form(const std::string& text, int var_count);

/// field := ['-'] fterm (('+'|'-') fterm)*, fterm := coef? monomial? d/dx<i>
HomogeneousField parse_field(const std::string& text, int var_count);

/// vvform := vvterm ('+' vvterm)*, vvterm := ('(' form ')' | term) '@' d/dx<i>
VectorValuedForm parse_vvform(const std::string& text, int var_count);

/// opexpr := opterm ('+' opterm)*
/// opterm := 'L' '[' vvform ']' | 'i' '[' vvform ']' | 'lm' '[' form ']'
///         | 'idop' '(' q=INT, a=INT, w1=form, w2=form, mu=form ')' | 'd'
/// idop keys w1, w2, mu are optional (default 0); all summands must share
/// one bidegree.
DiffOperator parse_operator(const std::string& text, int var_count);

}  // namespace exdef
