#include "doctest.h"

#include "oracles.hpp"
#include "wr1/lp.hpp"

#include <algorithm>
#include <random>

using namespace wr1;

namespace {

bool nonnegative(const RationalVector& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v >= 0; });
}

}  // namespace

TEST_CASE("lp_feasible: first vertex of the three-cycle system") {
    const RationalMatrix B1{{0, 1, 1}, {0, 0, 1}};
    const auto x = lp_feasible(B1, make_vector({1, 0}));
    REQUIRE(x);
    CHECK(B1 * *x == make_vector({1, 0}));
    CHECK(nonnegative(*x));
    CHECK((*x)[1] == 1);  // forced: x3 = 0 from row 2, then x2 = 1
    CHECK((*x)[2] == 0);
}

TEST_CASE("lp_feasible: infeasible vertex of the x' = -x + x^2 system") {
    const RationalMatrix B1{{0, 1}, {0, 0}};
    CHECK_FALSE(lp_feasible(B1, make_vector({-1, 0})));
}

TEST_CASE("lp_feasible: zero right-hand side gives the zero vector") {
    const RationalMatrix A{{1, -1, 2}, {0, 3, -1}};
    const auto x = lp_feasible(A, make_vector({0, 0}));
    REQUIRE(x);
    CHECK(is_zero(*x));
}

TEST_CASE("lp_feasible with no constraints rows") {
    const auto x = lp_feasible(RationalMatrix(0, 3), RationalVector{});
    REQUIRE(x);
    CHECK(x->size() == 3);
}

TEST_CASE("lp_maximize_component: cubic system, vertex x, target x^3") {
    const RationalMatrix B1{{0, 1, 2}};
    const auto x = lp_maximize_component(B1, make_vector({1}), 2);
    REQUIRE(x);
    CHECK((*x)[2] == Rational(1, 2));  // x2 + 2 x3 = 1 caps x3 at 1/2
    CHECK(B1 * *x == make_vector({1}));
    CHECK(nonnegative(*x));
}

TEST_CASE("lp_maximize_component: three-cycle vertex 1 cannot use y3") {
    const RationalMatrix B1{{0, 1, 1}, {0, 0, 1}};
    const auto x = lp_maximize_component(B1, make_vector({1, 0}), 2);
    REQUIRE(x);
    CHECK((*x)[2] == 0);
}

TEST_CASE("lp_maximize_component: the bound x_j <= 1 is active on an unbounded ray") {
    // x1 - x2 = 0 lets x1 grow without limit.
    const RationalMatrix A{{1, -1}};
    const auto x = lp_maximize_component(A, make_vector({0}), 0);
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
}

TEST_CASE("lp_maximize_component: infeasible system") {
    CHECK_FALSE(lp_maximize_component(RationalMatrix{{1, 1}}, make_vector({-1}), 0));
    // Feasible, but only with x_0 = 2 > 1.
    CHECK_FALSE(lp_maximize_component(RationalMatrix{{1}}, make_vector({2}), 0));
}

TEST_CASE("precondition violations throw") {
    CHECK_THROWS_AS(lp_feasible(RationalMatrix{{1, 1}}, make_vector({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(lp_maximize_component(RationalMatrix{{1, 1}}, make_vector({1}), 2), std::invalid_argument);
}

TEST_CASE("Bland's rule terminates on Beale's cycling example") {
    // min -3/4 x4 + 20 x5 - 1/2 x6 + 6 x7 over a degenerate vertex at the
    // origin; Dantzig's rule cycles here.
    RationalMatrix A(3, 7);
    const Rational rows[3][7] = {
        {1, 0, 0, Rational(1, 4), -8, -1, 9},
        {0, 1, 0, Rational(1, 2), -12, Rational(-1, 2), 3},
        {0, 0, 1, 0, 0, 1, 0},
    };
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 7; ++c) A(r, c) = rows[r][c];
    const RationalVector b = make_vector({0, 0, 1});
    const RationalVector c{0, 0, 0, Rational(-3, 4), 20, Rational(-1, 2), 6};
    const auto res = simplex_minimize(A, b, c);
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == Rational(-5, 4));
    CHECK(A * res.x == b);
}

TEST_CASE("simplex reports unbounded objectives") {
    const auto res = simplex_minimize(RationalMatrix{{1, -1}}, make_vector({0}), make_vector({-1, 0}));
    CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("redundant equality rows are handled") {
    const RationalMatrix A{{1, 1, 0}, {2, 2, 0}, {0, 1, 1}};
    const auto x = lp_maximize_component(A, make_vector({1, 2, 1}), 2);
    REQUIRE(x);
    CHECK(A * *x == make_vector({1, 2, 1}));
    CHECK((*x)[2] == 1);
}

TEST_CASE("property: simplex agrees with vertex enumeration on random small programs") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> rows_d(1, 3), cols_d(1, 5), entry(-2, 2), pick(0, 2);
    int feasible_cases = 0, positive_cases = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(rows_d(rng)), cols = static_cast<std::size_t>(cols_d(rng));
        RationalMatrix A(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) A(r, c) = entry(rng);
        RationalVector b(rows);
        if (pick(rng) > 0) {
            // Feasible by construction: b = A x0 with x0 >= 0.
            RationalVector x0(cols);
            for (auto& v : x0) {
                v = Rational(std::abs(entry(rng)), 2);
                v.canonicalize();
            }
            b = A * x0;
        } else {
            for (auto& v : b) v = entry(rng);
        }

        const auto x = lp_feasible(A, b);
        CHECK(x.has_value() == oracle::feasible(A, b));
        if (x) {
            ++feasible_cases;
            CHECK(A * *x == b);
            CHECK(nonnegative(*x));
        }

        for (std::size_t j = 0; j < cols; ++j) {
            const auto best = lp_maximize_component(A, b, j);
            const auto ref = oracle::max_component(A, b, j);
            REQUIRE(best.has_value() == ref.has_value());
            if (!best) continue;
            CHECK(A * *best == b);
            CHECK(nonnegative(*best));
            CHECK((*best)[j] <= 1);
            CHECK((*best)[j] == *ref);
            if (*ref > 0) ++positive_cases;
        }
    }
    // The generator must exercise both outcomes.
    CHECK(feasible_cases > 100);
    CHECK(positive_cases > 100);
}
