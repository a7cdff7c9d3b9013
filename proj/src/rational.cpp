#include "exdef/rational.hpp"

#include "exdef/errors.hpp"

namespace exdef {

Rational rational_from_string(const std::string& text) {
    mpq_class value;
    if (text.empty() || mpq_set_str(value.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("malformed rational literal '" + text + "'", 0);
    if (sgn(Rational(value.get_den())) == 0)
        throw ParseError("zero denominator in '" + text + "'", 0);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

std::size_t bit_size(const Rational& value) {
    return mpz_sizeinbase(value.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(value.get_den().get_mpz_t(), 2);
}

long smallest_integer_above(const Rational& value) {
    Integer floor;
    mpz_fdiv_q(floor.get_mpz_t(), value.get_num().get_mpz_t(),
               value.get_den().get_mpz_t());
    return floor.get_si() + 1;
}

}  // namespace exdef
