#pragma once

#include <cstddef>
#include <vector>

#include "exdef/deformation.hpp"
#include "exdef/rational.hpp"

namespace exdef {

/// Dense exact-rational matrix, row major.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_zero() const;
    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

RationalMatrix matrix_mul(const RationalMatrix& a, const RationalMatrix& b,
                          Exec exec = Exec::parallel);
RationalMatrix matrix_add(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix; pivot rows are chosen by smallest entry bit-size.
/// Exec::parallel spreads the per-step row updates over OpenMP threads;
/// Exec::serial is the single-threaded reference.
std::size_t matrix_rank(const RationalMatrix& m, Exec exec = Exec::parallel);

/// Exact kernel basis (vectors of length cols) from the fraction-free
/// echelon form plus rational back-substitution.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m,
                                             Exec exec = Exec::parallel);

}  // namespace exdef
