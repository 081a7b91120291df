#include "wr1/lp.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace wr1 {

namespace {

// Dense simplex tableau [A | I_art | rhs] with an explicit reduced-cost row.
class Tableau {
public:
    Tableau(const RationalMatrix& A, const RationalVector& b)
        : rows_(A.rows()), structural_(A.cols()), width_(A.cols() + A.rows() + 1),
          cells_(rows_ * width_), basis_(rows_), cost_row_(width_) {
        for (std::size_t r = 0; r < rows_; ++r) {
            const bool flip = b[r] < 0;
            for (std::size_t c = 0; c < structural_; ++c) at(r, c) = flip ? Rational(-A(r, c)) : A(r, c);
            at(r, structural_ + r) = 1;
            at(r, rhs()) = flip ? Rational(-b[r]) : b[r];
            basis_[r] = structural_ + r;
        }
    }

    std::size_t rhs() const { return width_ - 1; }
    bool is_artificial(std::size_t col) const { return col >= structural_ && col < rhs(); }

    // Loads reduced costs for objective `cost` (indexed over all non-rhs columns).
    void price(const RationalVector& cost) {
        for (std::size_t k = 0; k < width_; ++k) cost_row_[k] = k < rhs() ? cost[k] : Rational(0);
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb == 0) continue;
            for (std::size_t k = 0; k < width_; ++k) cost_row_[k] -= cb * at(r, k);
        }
    }

    // Runs Bland-rule pivots until optimal or unbounded. Columns with
    // allow[k] == false never enter.
    LpStatus optimize(const std::vector<bool>& allow) {
        for (;;) {
            std::size_t entering = rhs();
            for (std::size_t k = 0; k < rhs(); ++k) {
                if (allow[k] && cost_row_[k] < 0) {
                    entering = k;
                    break;
                }
            }
            if (entering == rhs()) return LpStatus::Optimal;

            std::size_t leaving = rows_;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (at(r, entering) <= 0) continue;
                Rational ratio = at(r, rhs()) / at(r, entering);
                if (leaving == rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == rows_) return LpStatus::Unbounded;
            pivot(leaving, entering);
        }
    }

    // Objective value of the current basis (the cost row stores its negative).
    Rational objective() const { return -cost_row_[rhs()]; }

    // After a zero-valued phase 1: swap remaining artificial basics for
    // structural columns, and drop rows that are linear combinations of others.
    void expel_artificials() {
        for (std::size_t r = 0; r < rows_;) {
            if (!is_artificial(basis_[r])) {
                ++r;
                continue;
            }
            std::size_t replacement = structural_;
            for (std::size_t k = 0; k < structural_; ++k) {
                if (at(r, k) != 0) {
                    replacement = k;
                    break;
                }
            }
            if (replacement < structural_) {
                pivot(r, replacement);
                ++r;
            } else {
                drop_row(r);
            }
        }
    }

    RationalVector structural_solution() const {
        RationalVector x(structural_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < structural_) x[basis_[r]] = at(r, rhs());
        }
        return x;
    }

private:
    Rational& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }

    void pivot(std::size_t row, std::size_t col) {
        const Rational inv = 1 / at(row, col);
        for (std::size_t k = 0; k < width_; ++k) at(row, k) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            const Rational f = at(r, col);
            for (std::size_t k = 0; k < width_; ++k) {
                if (at(row, k) != 0) at(r, k) -= f * at(row, k);
            }
        }
        if (cost_row_[col] != 0) {
            const Rational f = cost_row_[col];
            for (std::size_t k = 0; k < width_; ++k) {
                if (at(row, k) != 0) cost_row_[k] -= f * at(row, k);
            }
        }
        basis_[row] = col;
    }

    void drop_row(std::size_t row) {
        for (std::size_t r = row + 1; r < rows_; ++r) {
            for (std::size_t k = 0; k < width_; ++k) at(r - 1, k) = std::move(at(r, k));
            basis_[r - 1] = basis_[r];
        }
        --rows_;
        cells_.resize(rows_ * width_);
        basis_.resize(rows_);
    }

    std::size_t rows_;
    std::size_t structural_;
    std::size_t width_;
    std::vector<Rational> cells_;
    std::vector<std::size_t> basis_;
    RationalVector cost_row_;
};

void check_shapes(const RationalMatrix& A, const RationalVector& b) {
    if (A.rows() != b.size()) throw std::invalid_argument("LP: A.rows() != b.size()");
}

}  // namespace

LpResult simplex_minimize(const RationalMatrix& A, const RationalVector& b, const RationalVector& c) {
    check_shapes(A, b);
    if (c.size() != A.cols()) throw std::invalid_argument("LP: cost length != A.cols()");

    Tableau t(A, b);
    const std::size_t total = A.cols() + A.rows();

    RationalVector phase1_cost(total);
    for (std::size_t k = A.cols(); k < total; ++k) phase1_cost[k] = 1;
    t.price(phase1_cost);
    std::vector<bool> allow(total, true);
    if (t.optimize(allow) != LpStatus::Optimal) throw std::logic_error("LP: phase 1 cannot be unbounded");
    if (t.objective() != 0) return {LpStatus::Infeasible, {}, {}};

    t.expel_artificials();

    RationalVector phase2_cost(total);
    for (std::size_t k = 0; k < A.cols(); ++k) phase2_cost[k] = c[k];
    for (std::size_t k = A.cols(); k < total; ++k) allow[k] = false;
    t.price(phase2_cost);
    const LpStatus status = t.optimize(allow);
    if (status == LpStatus::Unbounded) return {LpStatus::Unbounded, {}, {}};
    return {LpStatus::Optimal, t.structural_solution(), t.objective()};
}

std::optional<RationalVector> lp_feasible(const RationalMatrix& A, const RationalVector& b) {
    LpResult r = simplex_minimize(A, b, RationalVector(A.cols()));
    if (r.status != LpStatus::Optimal) return std::nullopt;
    return std::move(r.x);
}

std::optional<RationalVector> lp_maximize_component(const RationalMatrix& A, const RationalVector& b,
                                                    std::size_t j) {
    check_shapes(A, b);
    if (j >= A.cols()) throw std::invalid_argument("LP: component index out of range");

    // Append the bound as x_j + s = 1 with slack s >= 0.
    RationalMatrix bounded(A.rows() + 1, A.cols() + 1);
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c) bounded(r, c) = A(r, c);
    bounded(A.rows(), j) = 1;
    bounded(A.rows(), A.cols()) = 1;
    RationalVector rhs = b;
    rhs.emplace_back(1);
    RationalVector cost(A.cols() + 1);
    cost[j] = -1;

    LpResult r = simplex_minimize(bounded, rhs, cost);
    if (r.status == LpStatus::Infeasible) return std::nullopt;
    if (r.status == LpStatus::Unbounded) throw std::logic_error("LP: bounded objective reported unbounded");
    r.x.pop_back();
    return std::move(r.x);
}

}  // namespace wr1
