#include "exdef/matrix.hpp"

#include <cstdint>

#include "exdef/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace exdef {

bool RationalMatrix::is_zero() const {
    for (const auto& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

RationalMatrix matrix_mul(const RationalMatrix& a, const RationalMatrix& b,
                          Exec exec) {
    if (a.cols() != b.rows()) throw StructuralError("matrix_mul: shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(static_cast<std::size_t>(i), k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(static_cast<std::size_t>(i), j) += aik * b.at(k, j);
        }
    return out;
}

RationalMatrix matrix_add(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw StructuralError("matrix_add: shape mismatch");
    RationalMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

namespace {

struct Echelon {
    std::size_t rows = 0, cols = 0;
    std::vector<Integer> data;  // rows x cols, fraction-free echelon
    std::vector<std::size_t> pivot_cols;

    Integer& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Integer& at(std::size_t i, std::size_t j) const {
        return data[i * cols + j];
    }
};

/// Row-scale to integers (rank-preserving), then one-step Bareiss.
Echelon echelon_form(const RationalMatrix& m, Exec exec) {
    Echelon e;
    e.rows = m.rows();
    e.cols = m.cols();
    e.data.resize(e.rows * e.cols);
    for (std::size_t i = 0; i < e.rows; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < e.cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < e.cols; ++j) {
            Rational v = m.at(i, j) * lcm;
            e.at(i, j) = v.get_num();
        }
    }

    Integer prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < e.cols && rank < e.rows; ++col) {
        // smallest-bit-size pivot in this column
        std::size_t pivot_row = e.rows;
        std::size_t best_bits = 0;
        for (std::size_t i = rank; i < e.rows; ++i) {
            if (sgn(e.at(i, col)) == 0) continue;
            std::size_t bits = mpz_sizeinbase(e.at(i, col).get_mpz_t(), 2);
            if (pivot_row == e.rows || bits < best_bits) {
                pivot_row = i;
                best_bits = bits;
            }
        }
        if (pivot_row == e.rows) continue;
        if (pivot_row != rank)
            for (std::size_t j = 0; j < e.cols; ++j)
                std::swap(e.at(rank, j), e.at(pivot_row, j));

        const std::int64_t nrows = static_cast<std::int64_t>(e.rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
        for (std::int64_t ii = static_cast<std::int64_t>(rank) + 1; ii < nrows; ++ii) {
            const std::size_t i = static_cast<std::size_t>(ii);
            for (std::size_t j = col + 1; j < e.cols; ++j) {
                Integer num = e.at(rank, col) * e.at(i, j) -
                              e.at(i, col) * e.at(rank, j);
                mpz_divexact(e.at(i, j).get_mpz_t(), num.get_mpz_t(),
                             prev_pivot.get_mpz_t());
            }
            e.at(i, col) = 0;
        }
        prev_pivot = e.at(rank, col);
        e.pivot_cols.push_back(col);
        ++rank;
    }
    return e;
}

}  // namespace

std::size_t matrix_rank(const RationalMatrix& m, Exec exec) {
    return echelon_form(m, exec).pivot_cols.size();
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, Exec exec) {
    Echelon e = echelon_form(m, exec);
    const std::size_t rank = e.pivot_cols.size();
    std::vector<bool> is_pivot(e.cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < e.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(e.cols, Rational(0));
        v[free_col] = 1;
        // back-substitute through the echelon rows, bottom up
        for (std::size_t ri = rank; ri-- > 0;) {
            const std::size_t pc = e.pivot_cols[ri];
            if (pc > free_col) continue;
            Rational acc(0);
            for (std::size_t j = pc + 1; j < e.cols; ++j) {
                if (sgn(v[j]) == 0) continue;
                acc += Rational(e.at(ri, j)) * v[j];
            }
            v[pc] = -acc / Rational(e.at(ri, pc));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace exdef
