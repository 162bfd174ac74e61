#include "tpverify/polymat.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "tpverify/errors.hpp"

namespace tpv {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = QPoly(1L);
    return m;
}

QPoly& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::invalid_argument("PolyMatrix::at: index out of range");
    return entries_[i * cols_ + j];
}

const QPoly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::invalid_argument("PolyMatrix::at: index out of range");
    return entries_[i * cols_ + j];
}

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) {
    if (lhs.cols() != rhs.rows())
        throw std::invalid_argument("PolyMatrix multiply: inner dimensions differ");
    PolyMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const QPoly& a = lhs.at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                const QPoly& b = rhs.at(k, j);
                if (!b.is_zero()) out.at(i, j) += a * b;
            }
        }
    return out;
}

PolyMatrix transpose(const PolyMatrix& m) {
    PolyMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
    return out;
}

PolyMatrix submatrix(const PolyMatrix& m, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols) {
    auto check = [](std::span<const std::size_t> idx, std::size_t bound, const char* which) {
        for (std::size_t r = 0; r < idx.size(); ++r) {
            if (idx[r] >= bound)
                throw std::invalid_argument(std::string("submatrix: ") + which + " index out of range");
            if (r > 0 && idx[r] <= idx[r - 1])
                throw std::invalid_argument(std::string("submatrix: ") + which +
                                            " indices must be strictly ascending");
        }
    };
    check(rows, m.rows(), "row");
    check(cols, m.cols(), "column");
    PolyMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = m.at(rows[i], cols[j]);
    return out;
}

QPoly det(const PolyMatrix& m, std::size_t order_cap) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix must be square");
    const std::size_t n = m.rows();
    if (n > order_cap)
        throw OrderCapExceeded("det: order " + std::to_string(n) + " exceeds cap " +
                               std::to_string(order_cap) + " (raise the cap to proceed)");
    if (n == 0) return QPoly(1L);

    // f[S] = determinant of the minor on rows 0..popcount(S)-1 and column
    // set S; filling subsets in increasing popcount order expands each
    // minor along its last row without division.
    std::vector<QPoly> f(std::size_t{1} << n);
    f[0] = QPoly(1L);
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        const std::size_t r = static_cast<std::size_t>(std::popcount(s)) - 1;
        QPoly acc;
        std::size_t pos = 0;
        for (std::uint32_t bits = s; bits != 0; bits &= bits - 1, ++pos) {
            const std::size_t c = static_cast<std::size_t>(std::countr_zero(bits));
            const QPoly& entry = m.at(r, c);
            if (!entry.is_zero()) {
                QPoly term = entry * f[s & ~(std::uint32_t{1} << c)];
                if ((r + pos) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
        }
        f[s] = std::move(acc);
    }
    return f[(std::size_t{1} << n) - 1];
}

}  // namespace tpv
