#include "wr1/poly.hpp"

#include "wr1/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace wr1 {

Rational monomial_value(const Exponent& y, const RationalVector& x) {
    if (y.size() != x.size()) throw std::invalid_argument("monomial_value: dimension mismatch");
    Rational result = 1;
    for (std::size_t s = 0; s < y.size(); ++s) {
        if (y[s] == 0) continue;
        const auto e = static_cast<unsigned long>(y[s] < 0 ? -y[s] : y[s]);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), x[s].get_num_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), x[s].get_den_mpz_t(), e);
        Rational p = y[s] > 0 ? Rational(num, den) : Rational(den, num);
        p.canonicalize();
        result *= p;
    }
    return result;
}

RationalVector PolynomialSystem::evaluate(const RationalVector& x) const {
    RationalVector out(n());
    for (const auto& t : terms) {
        const Rational mono = monomial_value(t.exponent, x);
        for (std::size_t s = 0; s < n(); ++s) out[s] += t.coefficient[s] * mono;
    }
    return out;
}

Exponent SourceDecomposition::vertex(std::size_t i) const {
    Exponent y(n());
    for (std::size_t s = 0; s < n(); ++s) y[s] = Y_s(s, i).get_num().get_si();
    return y;
}

RationalVector SourceDecomposition::evaluate(const RationalVector& x) const {
    RationalVector out(n());
    for (std::size_t i = 0; i < m(); ++i) {
        const Rational mono = monomial_value(vertex(i), x);
        for (std::size_t s = 0; s < n(); ++s) out[s] += W(s, i) * mono;
    }
    return out;
}

SourceDecomposition make_decomposition(std::vector<std::string> species, RationalMatrix Y_s, RationalMatrix W) {
    if (Y_s.rows() != W.rows() || Y_s.cols() != W.cols()) {
        throw ShapeMismatch("Y_s is " + std::to_string(Y_s.rows()) + "x" + std::to_string(Y_s.cols()) +
                            " but W is " + std::to_string(W.rows()) + "x" + std::to_string(W.cols()));
    }
    if (species.size() != Y_s.rows()) {
        throw ShapeMismatch("species list has " + std::to_string(species.size()) + " names for " +
                            std::to_string(Y_s.rows()) + " rows");
    }
    if (Y_s.cols() == 0) throw SchemaError("decomposition needs at least one source vertex");
    for (std::size_t r = 0; r < Y_s.rows(); ++r)
        for (std::size_t c = 0; c < Y_s.cols(); ++c) {
            const Rational& e = Y_s(r, c);
            if (e.get_den() != 1 || e < 0 || !e.get_num().fits_slong_p()) {
                throw SchemaError("Y_s entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") = " + to_string(e) + " is not a nonnegative integer");
            }
        }
    std::set<RationalVector> seen;
    for (std::size_t c = 0; c < Y_s.cols(); ++c) {
        if (!seen.insert(Y_s.col(c)).second) {
            throw DuplicateVertex("source vertex " + to_string(Y_s.col(c)) + " appears twice");
        }
    }
    return SourceDecomposition{std::move(species), std::move(Y_s), std::move(W)};
}

namespace {

enum class Tok { Ident, Number, Prime, Equals, Plus, Minus, Star, Caret, Comma, Semi, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

const char* describe(Tok k) {
    switch (k) {
        case Tok::Ident: return "identifier";
        case Tok::Number: return "number";
        case Tok::Prime: return "'''";
        case Tok::Equals: return "'='";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::Comma: return "','";
        case Tok::Semi: return "';'";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto digits_at = [&](std::size_t p) {
        std::size_t q = p;
        while (q < src.size() && std::isdigit(static_cast<unsigned char>(src[q]))) ++q;
        return q - p;
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        const std::size_t l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t q = i;
            while (q < src.size() && (std::isalnum(static_cast<unsigned char>(src[q])) || src[q] == '_')) ++q;
            out.push_back({Tok::Ident, std::string(src.substr(i, q - i)), l, cl});
            advance(q - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && digits_at(i + 1) > 0)) {
            std::size_t q = i + digits_at(i);
            if (q < src.size() && src[q] == '.') q += 1 + digits_at(q + 1);
            if (q < src.size() && src[q] == '/' && digits_at(q + 1) > 0) q += 1 + digits_at(q + 1);
            out.push_back({Tok::Number, std::string(src.substr(i, q - i)), l, cl});
            advance(q - i);
            continue;
        }
        Tok k;
        switch (c) {
            case '\'': k = Tok::Prime; break;
            case '=': k = Tok::Equals; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case ',': k = Tok::Comma; break;
            case ';': k = Tok::Semi; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", l, cl);
        }
        out.push_back({k, std::string(1, c), l, cl});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    PolynomialSystem parse() {
        const Token& head = expect(Tok::Ident);
        if (head.text != "species") throw SyntaxError("expected 'species' header", head.line, head.column);
        declare(expect(Tok::Ident));
        while (accept(Tok::Comma)) declare(expect(Tok::Ident));
        expect(Tok::Semi);

        const std::size_t n = species_.size();
        std::map<Exponent, RationalVector> sums;
        std::vector<Exponent> order;
        std::vector<bool> has_equation(n, false);

        do {
            const Token& lhs = expect(Tok::Ident);
            const std::size_t s = lookup(lhs);
            if (has_equation[s]) throw DuplicateEquation("species '" + lhs.text + "' has two equations");
            has_equation[s] = true;
            expect(Tok::Prime);
            expect(Tok::Equals);

            bool negative = false;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negative = next().kind == Tok::Minus;
            for (;;) {
                auto [coeff, exponent] = term(n);
                if (negative) coeff = -coeff;
                auto [it, inserted] = sums.try_emplace(exponent, RationalVector(n));
                if (inserted) order.push_back(exponent);
                it->second[s] += coeff;
                if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                    negative = next().kind == Tok::Minus;
                } else {
                    break;
                }
            }
            expect(Tok::Semi);
        } while (peek().kind != Tok::End);

        PolynomialSystem sys;
        sys.species = species_;
        for (const auto& e : order) {
            const RationalVector& c = sums.at(e);
            if (!is_zero(c)) sys.terms.push_back({e, c});
        }
        return sys;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    bool accept(Tok k) {
        if (peek().kind != k) return false;
        next();
        return true;
    }

    const Token& expect(Tok k) {
        const Token& t = peek();
        if (t.kind != k) {
            throw SyntaxError(std::string("expected ") + describe(k) + ", found " + describe(t.kind) +
                                  (t.text.empty() ? "" : " '" + t.text + "'"),
                              t.line, t.column);
        }
        return next();
    }

    void declare(const Token& t) {
        if (t.text == "species") throw SyntaxError("'species' is reserved", t.line, t.column);
        if (std::find(species_.begin(), species_.end(), t.text) != species_.end()) {
            throw SyntaxError("species '" + t.text + "' declared twice", t.line, t.column);
        }
        species_.push_back(t.text);
    }

    std::size_t lookup(const Token& t) const {
        auto it = std::find(species_.begin(), species_.end(), t.text);
        if (it == species_.end()) {
            throw UndeclaredSpecies(std::to_string(t.line) + ":" + std::to_string(t.column) +
                                    ": undeclared species '" + t.text + "'");
        }
        return static_cast<std::size_t>(it - species_.begin());
    }

    std::pair<Rational, Exponent> term(std::size_t n) {
        Rational coeff = 1;
        Exponent exponent(n, 0);
        if (peek().kind == Tok::Number) {
            const Token& num = next();
            try {
                coeff = parse_rational(num.text);
            } catch (const std::invalid_argument& e) {
                throw SyntaxError(e.what(), num.line, num.column);
            }
            if (!accept(Tok::Star) && peek().kind != Tok::Ident) return {coeff, exponent};
            factor(exponent);
        } else if (peek().kind == Tok::Ident) {
            factor(exponent);
        } else {
            const Token& t = peek();
            throw SyntaxError(std::string("expected a term, found ") + describe(t.kind), t.line, t.column);
        }
        while (accept(Tok::Star)) factor(exponent);
        return {coeff, exponent};
    }

    void factor(Exponent& exponent) {
        const Token& id = expect(Tok::Ident);
        const std::size_t s = lookup(id);
        std::int64_t power = 1;
        if (accept(Tok::Caret)) {
            if (peek().kind == Tok::Minus) {
                const Token& m = peek();
                throw NegativeExponent(std::to_string(m.line) + ":" + std::to_string(m.column) +
                                       ": negative exponent on '" + id.text + "'");
            }
            const Token& num = expect(Tok::Number);
            if (num.text.find_first_not_of("0123456789") != std::string::npos || num.text.size() > 15) {
                throw SyntaxError("exponent must be a nonnegative integer", num.line, num.column);
            }
            power = std::stoll(num.text);
        }
        exponent[s] += power;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> species_;
};

std::string coefficient_text(const Rational& c, bool has_monomial) {
    if (has_monomial && c == 1) return "";
    return to_string(c) + (has_monomial ? "*" : "");
}

std::string monomial_text(const Exponent& y, const std::vector<std::string>& species) {
    std::string out;
    for (std::size_t s = 0; s < y.size(); ++s) {
        if (y[s] == 0) continue;
        if (!out.empty()) out += "*";
        out += species[s];
        if (y[s] != 1) out += "^" + std::to_string(y[s]);
    }
    return out;
}

}  // namespace

PolynomialSystem parse_system(std::string_view text) { return Parser(text).parse(); }

std::string render(const PolynomialSystem& sys) {
    std::ostringstream os;
    os << "species ";
    for (std::size_t s = 0; s < sys.n(); ++s) os << (s ? ", " : "") << sys.species[s];
    os << ";\n";
    for (std::size_t s = 0; s < sys.n(); ++s) {
        os << sys.species[s] << "' =";
        bool first = true;
        for (const auto& t : sys.terms) {
            const Rational& c = t.coefficient[s];
            if (c == 0) continue;
            const std::string mono = monomial_text(t.exponent, sys.species);
            const Rational mag = abs(c);
            os << (c < 0 ? (first ? " -" : " - ") : (first ? " " : " + ")) << coefficient_text(mag, !mono.empty())
               << mono;
            first = false;
        }
        if (first) os << " 0";
        os << ";\n";
    }
    return os.str();
}

SourceDecomposition decompose(const PolynomialSystem& sys) {
    if (sys.terms.empty()) throw EmptySystem("polynomial system has no nonzero terms");
    std::vector<const Term*> sorted;
    for (const auto& t : sys.terms) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [](const Term* a, const Term* b) { return a->exponent < b->exponent; });

    const std::size_t n = sys.n();
    RationalMatrix Y_s(n, sorted.size()), W(n, sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t s = 0; s < n; ++s) {
            if (sorted[i]->exponent[s] < 0) throw NegativeExponent("negative exponent in polynomial term");
            Y_s(s, i) = Rational(static_cast<long>(sorted[i]->exponent[s]));
            W(s, i) = sorted[i]->coefficient[s];
        }
    }
    return make_decomposition(sys.species, std::move(Y_s), std::move(W));
}

namespace {

Rational json_rational(const nlohmann::json& v, const char* field) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string(field) + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw SchemaError(std::string(field) + ": entries must be rational strings or integers");
}

RationalMatrix json_matrix(const nlohmann::json& doc, const char* field) {
    if (!doc.contains(field)) throw SchemaError(std::string("missing field '") + field + "'");
    const auto& rows = doc.at(field);
    if (!rows.is_array() || rows.empty()) throw SchemaError(std::string(field) + ": expected a nonempty array of rows");
    std::size_t cols = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array()) throw SchemaError(std::string(field) + ": rows must be arrays");
        if (r == 0) cols = rows[r].size();
        if (rows[r].size() != cols) throw ShapeMismatch(std::string(field) + ": ragged rows");
    }
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = json_rational(rows[r][c], field);
    return m;
}

}  // namespace

SourceDecomposition load_decomposition(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SchemaError("top-level JSON value must be an object");
    RationalMatrix Y_s = json_matrix(doc, "Y_s");
    RationalMatrix W = json_matrix(doc, "W");

    std::vector<std::string> species;
    if (doc.contains("species")) {
        const auto& sp = doc.at("species");
        if (!sp.is_array()) throw SchemaError("species: expected an array of strings");
        for (const auto& s : sp) {
            if (!s.is_string()) throw SchemaError("species: expected an array of strings");
            species.push_back(s.get<std::string>());
        }
    } else {
        for (std::size_t s = 0; s < Y_s.rows(); ++s) species.push_back("x" + std::to_string(s + 1));
    }
    return make_decomposition(std::move(species), std::move(Y_s), std::move(W));
}

SourceDecomposition load_decomposition_file(const std::string& path) {
    return load_decomposition(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string monomial_label(const Exponent& y, const std::vector<std::string>& species) {
    std::string out;
    for (std::size_t s = 0; s < y.size(); ++s) {
        if (y[s] == 0) continue;
        if (!out.empty()) out += " ";
        out += s < species.size() ? species[s] : "x" + std::to_string(s + 1);
        if (y[s] != 1) out += "^" + std::to_string(y[s]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace wr1
