#ifndef WR1_RATIONAL_HPP
#define WR1_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace wr1 {

// Exact rational scalar. GMP keeps every value canonical (lowest terms,
// positive denominator) after each arithmetic operation.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;

// Accepts "p", "p/q", "-p/q" and plain decimals such as "0.25".
// Throws std::invalid_argument on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" for integers, "p/q" with q > 0 otherwise.
std::string to_string(const Rational& r);

RationalVector make_vector(std::initializer_list<long> values);

// Indices with nonzero entries, ascending.
std::vector<std::size_t> support(const RationalVector& v);

bool is_zero(const RationalVector& v);

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    /// Row-major literal, e.g. {{1, 0, -1}, {0, 1, -1}}. Rows must be equal length.
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector col(std::size_t c) const;
    void set_col(std::size_t c, const RationalVector& v);

    RationalVector operator*(const RationalVector& x) const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix transposed() const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::string to_string(const RationalVector& v);
std::string to_string(const RationalMatrix& m);

}  // namespace wr1

#endif  // WR1_RATIONAL_HPP
