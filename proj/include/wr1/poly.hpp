#ifndef WR1_POLY_HPP
#define WR1_POLY_HPP

#include "wr1/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wr1 {

// Integer exponent vector; also used as an E-graph vertex in Z^n.
using Exponent = std::vector<std::int64_t>;

// x^y for x with positive entries (negative exponents allowed).
Rational monomial_value(const Exponent& y, const RationalVector& x);

// One monomial of the right-hand side: contributes coefficient[s] * x^exponent
// to dx_s/dt.
struct Term {
    Exponent exponent;
    RationalVector coefficient;

    bool operator==(const Term&) const = default;
};

struct PolynomialSystem {
    std::vector<std::string> species;
    std::vector<Term> terms;  // distinct exponents, no all-zero coefficient

    std::size_t n() const { return species.size(); }
    RationalVector evaluate(const RationalVector& x) const;
};

// The pair (Y_s, W): column i of Y_s is the source monomial y_i, column i of
// W the net reaction vector w_i, so that dx/dt = W x^{Y_s}.
struct SourceDecomposition {
    std::vector<std::string> species;
    RationalMatrix Y_s;
    RationalMatrix W;

    std::size_t n() const { return Y_s.rows(); }
    std::size_t m() const { return Y_s.cols(); }
    Exponent vertex(std::size_t i) const;
    RationalVector net(std::size_t i) const { return W.col(i); }
    RationalVector evaluate(const RationalVector& x) const;

    bool operator==(const SourceDecomposition&) const = default;
};

// Validates shapes, nonnegative integer sources and distinct columns.
// Throws ShapeMismatch, SchemaError or DuplicateVertex.
SourceDecomposition make_decomposition(std::vector<std::string> species, RationalMatrix Y_s, RationalMatrix W);

// Grammar (whitespace-insensitive, '#' starts a comment):
//   system := "species" ident ("," ident)* ";" eq+
//   eq     := ident "'" "=" ["+"|"-"] term (("+"|"-") term)* ";"
//   term   := [number] ["*"] [factor ("*" factor)*]
//   factor := ident ["^" integer]
// Numbers are integers, p/q or decimals. Like terms are combined, and terms
// whose combined coefficient is zero are dropped. Species without an
// equation have zero derivative.
PolynomialSystem parse_system(std::string_view text);

// Prints a system back in the grammar accepted by parse_system.
std::string render(const PolynomialSystem& sys);

// One column per distinct monomial, columns in lexicographic exponent order.
SourceDecomposition decompose(const PolynomialSystem& sys);

// {"species": [...], "Y_s": [[...]], "W": [[...]]}, rows indexed by species,
// entries as strings (exact rationals) or JSON integers.
SourceDecomposition load_decomposition(std::string_view json_text);
SourceDecomposition load_decomposition_file(const std::string& path);

std::string read_text_file(const std::string& path);

// "x^2 y", or "1" for the zero exponent.
std::string monomial_label(const Exponent& y, const std::vector<std::string>& species);

}  // namespace wr1

#endif  // WR1_POLY_HPP
