#include "ltdim/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ltdim {

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix out(m_cols, m_rows);
    for (std::size_t r = 0; r < m_rows; ++r)
        for (std::size_t c = 0; c < m_cols; ++c) out(c, r) = (*this)(r, c);
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (m_cols != rhs.m_rows) throw std::invalid_argument("matrix product: inner dimensions differ");
    RationalMatrix out(m_rows, rhs.m_cols);
    for (std::size_t r = 0; r < m_rows; ++r)
        for (std::size_t k = 0; k < m_cols; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < rhs.m_cols; ++c) out(r, c) += a * rhs(k, c);
        }
    return out;
}

namespace {

// Rows scaled to primitive integer vectors; the rank is unchanged.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    Integer lcm;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        lcm = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& q = m(r, c);
            mpz_divexact(rows[r][c].get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
            rows[r][c] *= q.get_num();
        }
        Integer content = 0;
        for (const auto& x : rows[r]) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        if (content > 1)
            for (auto& x : rows[r]) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
    }
    return rows;
}

}  // namespace

std::size_t exact_rank(const RationalMatrix& matrix) {
    // Eliminate along the shorter side: fewer pivot rows to update.
    if (matrix.rows() > matrix.cols()) return exact_rank(matrix.transposed());
    auto a = integer_rows(matrix);
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();

    std::size_t rank = 0;
    Integer previous = 1;
    Integer lhs, rhs;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (sgn(a[r][col]) == 0) continue;
            if (pivot == rows || mpz_cmpabs(a[r][col].get_mpz_t(), a[pivot][col].get_mpz_t()) > 0) pivot = r;
        }
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);

        const Integer& p = a[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            auto& row = a[r];
            const Integer factor = row[col];
            for (std::size_t c = col + 1; c < cols; ++c) {
                // row[c] = (p * row[c] - factor * a[rank][c]) / previous, exact.
                mpz_mul(lhs.get_mpz_t(), p.get_mpz_t(), row[c].get_mpz_t());
                mpz_mul(rhs.get_mpz_t(), factor.get_mpz_t(), a[rank][c].get_mpz_t());
                mpz_sub(lhs.get_mpz_t(), lhs.get_mpz_t(), rhs.get_mpz_t());
                mpz_divexact(row[c].get_mpz_t(), lhs.get_mpz_t(), previous.get_mpz_t());
            }
            row[col] = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

}  // namespace ltdim
