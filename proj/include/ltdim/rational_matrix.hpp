#ifndef LTDIM_RATIONAL_MATRIX_HPP
#define LTDIM_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace ltdim {

/// Exact rationals, always in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    Rational& operator()(std::size_t r, std::size_t c) { return m_data[r * m_cols + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return m_data[r * m_cols + c]; }

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;

    friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
        return x.m_rows == y.m_rows && x.m_cols == y.m_cols && x.m_data == y.m_data;
    }

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Rational> m_data;
};

/// Exact rank over the rationals. Each row is scaled to integers, then the
/// matrix is reduced by fraction-free (Bareiss) elimination with the largest
/// magnitude entry of the column as pivot. No tolerance is involved.
std::size_t exact_rank(const RationalMatrix& matrix);

}  // namespace ltdim

#endif  // LTDIM_RATIONAL_MATRIX_HPP
