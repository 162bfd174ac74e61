#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tpverify/qpoly.hpp"

namespace tpv {

/// Dense row-major matrix over QPoly.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    QPoly& at(std::size_t i, std::size_t j);
    const QPoly& at(std::size_t i, std::size_t j) const;

    friend bool operator==(const PolyMatrix& lhs, const PolyMatrix& rhs) = default;

private:
    std::size_t rows_, cols_;
    std::vector<QPoly> entries_;
};

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);

PolyMatrix transpose(const PolyMatrix& m);

/// Rows I and columns J must be strictly ascending and in range.
PolyMatrix submatrix(const PolyMatrix& m, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols);

inline constexpr std::size_t kDefaultDetCap = 8;

/// Division-free determinant: dynamic programming over column subsets
/// (memoized minor expansion), O(2^k * k) polynomial multiplications.
/// Guarded by a cap on the order; throws OrderCapExceeded above it.
QPoly det(const PolyMatrix& m, std::size_t order_cap = kDefaultDetCap);

}  // namespace tpv
