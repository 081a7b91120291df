#ifndef WR1_TESTS_FIXTURES_HPP
#define WR1_TESTS_FIXTURES_HPP

#include "wr1/graph.hpp"
#include "wr1/poly.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace wr1::fixtures {

inline constexpr const char* kThreeCycle = "species x, y;\nx' = x - x^2*y;\ny' = x^2 - x^2*y;\n";
inline constexpr const char* kNoRealization = "species x, y;\nx' = -x + x^2;\ny' = 0;\n";
inline constexpr const char* kFourCycle = "species x, y;\nx' = x - x^2*y;\ny' = x^2 - x*y;\n";
inline constexpr const char* kCubic = "species x;\nx' = x + x^2 - x^3;\n";

inline EGraph::RatedEdge unit(std::size_t a, std::size_t b) { return {{a, b}, Rational(1)}; }

// X <-> 2X and 3X <-> 4X+Y -> 5X+Y <-> 5X+2Y: two linkage classes, terminal
// components {X, 2X} and {5X+Y, 5X+2Y}; all rates 1.
inline EGraph two_class_graph() {
    return EGraph(2, {{1, 0}, {2, 0}, {3, 0}, {4, 1}, {5, 1}, {5, 2}},
                  std::vector<EGraph::RatedEdge>{unit(0, 1), unit(1, 0), unit(2, 3), unit(3, 2), unit(3, 4), unit(4, 5),
                                                 unit(5, 4)});
}

// X -> 2X -> 2X+Y -> X: weakly reversible, one linkage class, s = 2.
inline EGraph three_cycle_graph() {
    return EGraph(2, {{1, 0}, {2, 0}, {2, 1}},
                  std::vector<EGraph::RatedEdge>{unit(0, 1), unit(1, 2), unit(2, 0)});
}

// Relative-concentration network of the three-species autocatalytic
// example: each reaction y -> y' of the original network is replaced by
// reactions from y + X_k to y'. Species order (X1, X2, X3).
inline EGraph autocatalytic_relative_graph() {
    const std::vector<Exponent> v{
        {1, 2, 0},  // 0: X1 + 2X2
        {1, 1, 1},  // 1: X1 + X2 + X3
        {2, 1, 0},  // 2: 2X1 + X2
        {0, 1, 2},  // 3: X2 + 2X3
        {0, 2, 1},  // 4: 2X2 + X3
        {2, 0, 1},  // 5: 2X1 + X3
        {1, 0, 2},  // 6: X1 + 2X3
    };
    std::vector<std::pair<std::size_t, std::size_t>> e{
        {0, 2}, {1, 2},  // k1
        {3, 4}, {1, 4},  // k2
        {5, 6}, {1, 6},  // k3
        {0, 1}, {2, 1},  // k4
        {3, 1}, {4, 1},  // k5
        {6, 1}, {5, 1},  // k6
    };
    std::vector<EGraph::RatedEdge> rated;
    for (auto [a, b] : e) rated.push_back(unit(a, b));
    return EGraph(3, v, std::move(rated));
}

}  // namespace wr1::fixtures

#endif  // WR1_TESTS_FIXTURES_HPP
