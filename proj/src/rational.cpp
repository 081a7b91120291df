#include "wr1/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wr1 {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal '" + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
        }
        mpz_class d(std::string(den), 10);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(mpz_class(std::string(num), 10), d);
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
            (whole.empty() && frac.empty())) {
            throw std::invalid_argument("malformed decimal literal '" + std::string(text) + "'");
        }
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        value = Rational(mpz_class(digits.empty() ? "0" : digits, 10), scale);
        value.canonicalize();
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
        value = Rational(mpz_class(std::string(s), 10));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) { return r.get_str(); }

RationalVector make_vector(std::initializer_list<long> values) {
    RationalVector v;
    v.reserve(values.size());
    for (long x : values) v.emplace_back(x);
    return v;
}

std::vector<std::size_t> support(const RationalVector& v) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) s.push_back(i);
    }
    return s;
}

bool is_zero(const RationalVector& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_col(c, columns[c]);
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::col(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void RationalMatrix::set_col(std::size_t c, const RationalVector& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

RationalVector RationalMatrix::operator*(const RationalVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    RationalVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (x[c] != 0) acc += (*this)(r, c) * x[c];
        }
        y[r] = acc;
    }
    return y;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix-matrix dimension mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
        }
    return out;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::string to_string(const RationalVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
    os << ')';
    return os.str();
}

std::string to_string(const RationalMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "; " : "") << to_string(m.row(r));
    os << ']';
    return os.str();
}

}  // namespace wr1
