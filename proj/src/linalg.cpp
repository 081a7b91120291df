#include "wr1/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace wr1 {

RowEchelon row_reduce(RationalMatrix m) {
    RowEchelon out;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m(r, c) == 0) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row) {
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot_row, k));
        }
        const Rational inv = 1 / m(pivot_row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(pivot_row, k);
        }
        out.pivot_columns.push_back(c);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    const RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
            v[e.pivot_columns[r]] = -e.reduced(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve_linear(const RationalMatrix& m, const RationalVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
    RationalVector x(m.cols());
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) x[e.pivot_columns[r]] = e.reduced(r, m.cols());
    return x;
}

}  // namespace wr1
