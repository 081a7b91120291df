#ifndef WR1_LP_HPP
#define WR1_LP_HPP

#include "wr1/rational.hpp"

#include <cstddef>
#include <optional>

namespace wr1 {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RationalVector x;  // meaningful only when status == Optimal
    Rational objective;
};

// Exact two-phase primal simplex for  min c.x  s.t.  A x = b, x >= 0.
// Bland's smallest-index rule is used in both phases, so the method
// terminates on every input. The returned x is a basic (vertex) solution.
LpResult simplex_minimize(const RationalMatrix& A, const RationalVector& b, const RationalVector& c);

// Some x >= 0 with A x = b, or nullopt if none exists.
std::optional<RationalVector> lp_feasible(const RationalMatrix& A, const RationalVector& b);

// Optimal vertex of  max x_j  s.t.  A x = b, x >= 0, x_j <= 1.  nullopt if
// that region is empty. Component j of the result is positive iff the region
// contains any point with x_j > 0.
std::optional<RationalVector> lp_maximize_component(const RationalMatrix& A, const RationalVector& b,
                                                    std::size_t j);

}  // namespace wr1

#endif  // WR1_LP_HPP
