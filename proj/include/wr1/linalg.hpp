#ifndef WR1_LINALG_HPP
#define WR1_LINALG_HPP

#include "wr1/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace wr1 {

struct RowEchelon {
    RationalMatrix reduced;                  // reduced row echelon form
    std::vector<std::size_t> pivot_columns;  // ascending; size == rank
};

RowEchelon row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

// Basis of the right null space, one vector per free column of the reduced
// echelon form (free variable set to 1, other free variables 0).
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Some x with m*x == b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve_linear(const RationalMatrix& m, const RationalVector& b);

}  // namespace wr1

#endif  // WR1_LINALG_HPP
