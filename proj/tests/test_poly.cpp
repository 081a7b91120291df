#include "doctest.h"

#include "fixtures.hpp"
#include "generators.hpp"
#include "wr1/errors.hpp"
#include "wr1/poly.hpp"

using namespace wr1;

namespace {

RationalMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    RationalMatrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (long v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("parse the three-cycle system") {
    const auto sys = parse_system(fixtures::kThreeCycle);
    CHECK(sys.species == std::vector<std::string>{"x", "y"});
    REQUIRE(sys.terms.size() == 3);
    CHECK(sys.terms[0] == Term{{1, 0}, make_vector({1, 0})});
    CHECK(sys.terms[1] == Term{{2, 1}, make_vector({-1, -1})});
    CHECK(sys.terms[2] == Term{{2, 0}, make_vector({0, 1})});
}

TEST_CASE("decompose orders monomials lexicographically") {
    const auto dec = decompose(parse_system(fixtures::kFourCycle));
    CHECK(dec.Y_s == int_matrix({{1, 1, 2, 2}, {0, 1, 0, 1}}));
    CHECK(dec.W == int_matrix({{1, 0, 0, -1}, {0, -1, 1, 0}}));

    const auto cubic = decompose(parse_system(fixtures::kCubic));
    CHECK(cubic.Y_s == int_matrix({{1, 2, 3}}));
    CHECK(cubic.W == int_matrix({{1, 1, -1}}));
}

TEST_CASE("a zero equation and a missing equation both mean zero derivative") {
    const auto a = decompose(parse_system(fixtures::kNoRealization));
    const auto b = decompose(parse_system("species x, y; x' = -x + x^2;"));
    CHECK(a == b);
    CHECK(a.W == int_matrix({{-1, 1}, {0, 0}}));
}

TEST_CASE("coefficients: fractions, decimals, repeated factors, implicit multiplication") {
    const auto sys = parse_system("species a, b;\na' = 1/2 a*a*b - 0.25*b + 3 a^0;\nb' = +2;");
    REQUIRE(sys.terms.size() == 3);
    CHECK(sys.terms[0] == Term{{2, 1}, RationalVector{Rational(1, 2), 0}});
    CHECK(sys.terms[1] == Term{{0, 1}, RationalVector{Rational(-1, 4), 0}});
    CHECK(sys.terms[2] == Term{{0, 0}, make_vector({3, 2})});
}

TEST_CASE("like terms combine and cancelled terms disappear") {
    const auto sys = parse_system("species x; x' = x^2 + 2*x - x*x - x;");
    REQUIRE(sys.terms.size() == 1);
    CHECK(sys.terms[0] == Term{{1}, make_vector({1})});
    CHECK_THROWS_AS(decompose(parse_system("species x; x' = x - x;")), EmptySystem);
}

TEST_CASE("comments and whitespace are ignored") {
    const auto a = parse_system("# header\nspecies x ,y;  # names\n x' =x;   y'=   -y ;");
    const auto b = parse_system("species x, y; x' = x; y' = -y;");
    CHECK(a.terms == b.terms);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_system("species x;\nx' = x +;\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 9);
    }
    try {
        parse_system("species x;\nx' = 2 $ x;");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse_system("x' = x;"), SyntaxError);
    CHECK_THROWS_AS(parse_system("species x, x; x' = x;"), SyntaxError);
    CHECK_THROWS_AS(parse_system("species x; x' = x"), SyntaxError);
    CHECK_THROWS_AS(parse_system("species x; x' = x^1.5;"), SyntaxError);
    CHECK_THROWS_AS(parse_system("species x;"), SyntaxError);
}

TEST_CASE("semantic input errors") {
    CHECK_THROWS_AS(parse_system("species x; x' = y;"), UndeclaredSpecies);
    CHECK_THROWS_AS(parse_system("species x; z' = x;"), UndeclaredSpecies);
    CHECK_THROWS_AS(parse_system("species x; x' = x^-1;"), NegativeExponent);
    CHECK_THROWS_AS(parse_system("species x; x' = x; x' = 1;"), DuplicateEquation);
    CHECK_THROWS_AS(decompose(parse_system("species x; x' = 0;")), EmptySystem);
    // Every failure is an InputError.
    CHECK_THROWS_AS(parse_system("species x; x' = y;"), InputError);
}

TEST_CASE("render round-trips") {
    for (const char* text : {fixtures::kThreeCycle, fixtures::kNoRealization, fixtures::kFourCycle, fixtures::kCubic}) {
        const auto sys = parse_system(text);
        const auto again = parse_system(render(sys));
        CHECK(decompose(again) == decompose(sys));
    }
    CHECK(render(parse_system("species x, y; x' = -1/2*x*y + 3;")) == "species x, y;\nx' = -1/2*x*y + 3;\ny' = 0;\n");
}

TEST_CASE("monomial labels") {
    const std::vector<std::string> sp{"x", "y"};
    CHECK(monomial_label({2, 1}, sp) == "x^2 y");
    CHECK(monomial_label({0, 3}, sp) == "y^3");
    CHECK(monomial_label({0, 0}, sp) == "1");
}

TEST_CASE("load_decomposition: strings and integers, default species names") {
    const auto dec = load_decomposition(R"({"Y_s": [[1, 2, 3]], "W": [["1", "1", "-1"]]})");
    CHECK(dec.species == std::vector<std::string>{"x1"});
    CHECK(dec == decompose(parse_system("species x1; x1' = x1 + x1^2 - x1^3;")));

    // File column order is kept, not re-sorted.
    const auto rev = load_decomposition(R"({"species": ["u"], "Y_s": [[3, 1]], "W": [["-1/2", 2]]})");
    CHECK(rev.vertex(0) == Exponent{3});
    CHECK(rev.W(0, 0) == Rational(-1, 2));
}

TEST_CASE("load_decomposition: schema, shape and duplicate errors") {
    CHECK_THROWS_AS(load_decomposition("not json"), SchemaError);
    CHECK_THROWS_AS(load_decomposition(R"({"W": [[1]]})"), SchemaError);
    CHECK_THROWS_AS(load_decomposition(R"({"Y_s": [[1]], "W": [[true]]})"), SchemaError);
    CHECK_THROWS_AS(load_decomposition(R"({"Y_s": [["1/2"]], "W": [[1]]})"), SchemaError);
    CHECK_THROWS_AS(load_decomposition(R"({"Y_s": [[-1]], "W": [[1]]})"), SchemaError);
    CHECK_THROWS_AS(load_decomposition(R"({"Y_s": [[1, 2]], "W": [[1]]})"), ShapeMismatch);
    CHECK_THROWS_AS(load_decomposition(R"({"Y_s": [[1, 2], [0]], "W": [[1, 1], [0, 0]]})"), ShapeMismatch);
    CHECK_THROWS_AS(load_decomposition(R"({"species": ["a", "b"], "Y_s": [[1]], "W": [[1]]})"), ShapeMismatch);
    CHECK_THROWS_AS(load_decomposition(R"({"Y_s": [[1, 1]], "W": [[1, 2]]})"), DuplicateVertex);
}

TEST_CASE("property: decomposition reproduces the polynomial at random points") {
    gen::Rng rng(9001);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = gen::uniform(rng, 1, 3);
        const auto species = gen::species_names(n);
        // Random system written out term by term, with repeated monomials.
        std::string text = "species ";
        for (std::size_t s = 0; s < n; ++s) text += (s ? ", " : "") + species[s];
        text += ";\n";
        std::uniform_int_distribution<long> coef(-5, 5), power(0, 3);
        for (std::size_t s = 0; s < n; ++s) {
            text += species[s] + "' = 0";
            const std::size_t terms = gen::uniform(rng, 1, 5);
            for (std::size_t t = 0; t < terms; ++t) {
                const long c = coef(rng);
                text += (c < 0 ? " - " : " + ") + std::to_string(std::abs(c)) + "/" + std::to_string(gen::uniform(rng, 1, 3));
                for (std::size_t k = 0; k < n; ++k) {
                    const long p = power(rng) % 2;  // keep the monomial set small so terms collide
                    if (p) text += "*" + species[k] + "^" + std::to_string(p);
                }
            }
            text += ";\n";
        }
        const auto sys = parse_system(text);
        if (sys.terms.empty()) continue;
        const auto dec = decompose(sys);
        CHECK(decompose(parse_system(render(sys))) == dec);
        for (int p = 0; p < 5; ++p) {
            RationalVector x(n);
            for (auto& v : x) v = gen::positive_rational(rng);
            CHECK(dec.evaluate(x) == sys.evaluate(x));
        }
    }
}
