#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "polynomial.hpp"

namespace superfat::ioparse {

using exactcore::BigInt;
using exactcore::FieldType;
using exactcore::Fp;
using exactcore::GaussianRational;
using exactcore::Rational;
using polyring::Exponents;
using polyring::Ideal;
using polyring::Polynomial;
using polyring::PolyRing;
using polyring::RingPtr;

// ===== Diagnostics ==========================================================

/// Every malformed input is rejected with a message carrying 1-based line and
/// column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

// ===== Lexer ================================================================

namespace detail {

enum class TokenKind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen,
                       LBracket, RBracket, Comma, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line, column;
};

[[nodiscard]] inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    const auto push = [&](TokenKind k, std::string t, std::size_t c) {
        out.push_back({k, std::move(t), line, c});
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        const std::size_t start_col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                num.push_back(text[i]);
                ++i;
                ++col;
            }
            push(TokenKind::Number, std::move(num), start_col);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_')) {
                id.push_back(text[i]);
                ++i;
                ++col;
            }
            push(TokenKind::Ident, std::move(id), start_col);
            continue;
        }
        TokenKind k;
        switch (c) {
            case '+': k = TokenKind::Plus; break;
            case '-': k = TokenKind::Minus; break;
            case '*': k = TokenKind::Star; break;
            case '^': k = TokenKind::Caret; break;
            case '/': k = TokenKind::Slash; break;
            case '(': k = TokenKind::LParen; break;
            case ')': k = TokenKind::RParen; break;
            case '[': k = TokenKind::LBracket; break;
            case ']': k = TokenKind::RBracket; break;
            case ',': k = TokenKind::Comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        push(k, std::string(1, c), start_col);
        ++i;
        ++col;
    }
    out.push_back({TokenKind::End, "", line, col});
    return out;
}

} // namespace detail

// ===== Parser ===============================================================

/// Recursive-descent parser for the polynomial grammar
///
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := (var | '(' expr ')') ('^' nat)?
///   coeff  := nat ('/' nat)? 'i'? | 'i'          (the 'i' forms require Q(i))
///   ideal  := '[' expr (',' expr)* ']'
///
/// Multiplication is always explicit ("xy" is a variable name, never x*y);
/// whitespace is insignificant.  Over Q(i) the identifier i denotes the
/// imaginary unit (also accepted in factor position) and cannot name a
/// variable.
template <FieldType K>
class PolynomialParser {
public:
    PolynomialParser(std::string_view text, RingPtr ring)
        : tokens_(detail::tokenize(text)), ring_(std::move(ring)) {
        if constexpr (std::is_same_v<K, GaussianRational>) {
            if (ring_->index_of("i"))
                throw ParseError("variable name 'i' is reserved over Q(i)", 1, 1);
        }
    }

    [[nodiscard]] Polynomial<K> polynomial() {
        Polynomial<K> f = expr();
        expect_end();
        return f;
    }

    [[nodiscard]] Ideal<K> ideal() {
        expect(detail::TokenKind::LBracket, "expected '['");
        std::vector<Polynomial<K>> gens;
        gens.push_back(expr());
        while (peek().kind == detail::TokenKind::Comma) {
            advance();
            gens.push_back(expr());
        }
        expect(detail::TokenKind::RBracket, "expected ']' or ','");
        expect_end();
        return Ideal<K>(ring_, std::move(gens));
    }

private:
    using Token = detail::Token;
    using TokenKind = detail::TokenKind;

    [[nodiscard]] const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    void expect(TokenKind k, const std::string& message) {
        if (peek().kind != k) fail(message);
        advance();
    }
    void expect_end() {
        if (peek().kind != TokenKind::End) fail("unexpected trailing input");
    }
    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = peek();
        throw ParseError(message, t.line, t.column);
    }

    [[nodiscard]] static bool is_imaginary_ident(const Token& t) {
        return std::is_same_v<K, GaussianRational> && t.kind == TokenKind::Ident && t.text == "i";
    }

    [[nodiscard]] Polynomial<K> expr() {
        bool negate = false;
        if (peek().kind == TokenKind::Plus) advance();
        else if (peek().kind == TokenKind::Minus) {
            negate = true;
            advance();
        }
        Polynomial<K> sum = term();
        if (negate) sum = -sum;
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            const bool minus = advance().kind == TokenKind::Minus;
            const Polynomial<K> t = term();
            sum = minus ? sum - t : sum + t;
        }
        return sum;
    }

    [[nodiscard]] Polynomial<K> term() {
        Polynomial<K> prod(ring_);
        if (peek().kind == TokenKind::Number || is_imaginary_ident(peek())) {
            prod = Polynomial<K>::constant(ring_, coefficient());
        } else if (peek().kind == TokenKind::Ident || peek().kind == TokenKind::LParen) {
            prod = factor();
        } else {
            fail("expected a term");
        }
        while (peek().kind == TokenKind::Star) {
            advance();
            prod = prod * factor();
        }
        if (peek().kind == TokenKind::Ident || peek().kind == TokenKind::Number ||
            peek().kind == TokenKind::LParen)
            fail("missing '*' (implicit multiplication is not supported)");
        return prod;
    }

    [[nodiscard]] Polynomial<K> factor() {
        Polynomial<K> base(ring_);
        if (peek().kind == TokenKind::Ident) {
            const Token& t = advance();
            if (is_imaginary_ident(t)) {
                base = Polynomial<K>::constant(ring_, imaginary_unit());
            } else if (t.kind == TokenKind::Ident && t.text == "i" &&
                       !ring_->index_of("i").has_value()) {
                throw ParseError("imaginary literal 'i' requires the field Q(i)", t.line, t.column);
            } else {
                const auto idx = ring_->index_of(t.text);
                if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
                base = Polynomial<K>::variable(ring_, *idx);
            }
        } else if (peek().kind == TokenKind::LParen) {
            advance();
            base = expr();
            expect(TokenKind::RParen, "expected ')'");
        } else {
            fail("expected a variable or '('");
        }
        if (peek().kind == TokenKind::Caret) {
            advance();
            if (peek().kind != TokenKind::Number) fail("malformed exponent: expected a number");
            const Token& t = advance();
            unsigned long n = 0;
            try {
                n = std::stoul(t.text);
            } catch (const std::exception&) {
                throw ParseError("malformed exponent", t.line, t.column);
            }
            if (n > 4096) throw ParseError("exponent too large", t.line, t.column);
            base = base.pow(static_cast<unsigned>(n));
        }
        return base;
    }

    [[nodiscard]] K coefficient() {
        if (is_imaginary_ident(peek())) {
            advance();
            return imaginary_unit();
        }
        const Token& numtok = advance(); // Number, guaranteed by caller
        BigInt num(numtok.text);
        BigInt den = 1;
        if (peek().kind == TokenKind::Slash) {
            advance();
            if (peek().kind != TokenKind::Number) fail("expected a denominator");
            const Token& dtok = advance();
            den = BigInt(dtok.text);
            if (den.is_zero()) throw ParseError("zero denominator", dtok.line, dtok.column);
        }
        if (is_imaginary_ident(peek())) {
            advance();
            return imaginary_of(num, den);
        }
        if (peek().kind == TokenKind::Ident && peek().text == "i" &&
            !ring_->index_of("i").has_value())
            fail("imaginary literal 'i' requires the field Q(i)");
        return rational_of(num, den, numtok);
    }

    [[nodiscard]] K rational_of(const BigInt& num, const BigInt& den, const Token& at) const {
        if constexpr (std::is_same_v<K, Rational>) {
            return Rational(num, den);
        } else if constexpr (std::is_same_v<K, GaussianRational>) {
            return GaussianRational(Rational(num, den), Rational(0));
        } else {
            const K d = K::from_integer(den);
            if (d.is_zero())
                throw ParseError("coefficient denominator vanishes in the field", at.line,
                                 at.column);
            return K::from_integer(num) / d;
        }
    }

    [[nodiscard]] static K imaginary_unit() {
        if constexpr (std::is_same_v<K, GaussianRational>) return GaussianRational::i();
        else throw std::logic_error("imaginary unit outside Q(i)");
    }
    [[nodiscard]] static K imaginary_of(const BigInt& num, const BigInt& den) {
        if constexpr (std::is_same_v<K, GaussianRational>)
            return GaussianRational(Rational(0), Rational(num, den));
        else throw std::logic_error("imaginary literal outside Q(i)");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    RingPtr ring_;
};

template <FieldType K>
[[nodiscard]] Polynomial<K> parse_polynomial(std::string_view text, const RingPtr& ring) {
    return PolynomialParser<K>(text, ring).polynomial();
}

template <FieldType K>
[[nodiscard]] Ideal<K> parse_ideal(std::string_view text, const RingPtr& ring) {
    return PolynomialParser<K>(text, ring).ideal();
}

// ===== Field tags and variable declarations =================================

/// Field descriptor in the textual interface: "Q" | "Qi" | "Fp:<prime>".
struct FieldTag {
    enum class Kind { Q, Qi, Fp };
    Kind kind = Kind::Q;
    std::uint64_t prime = 0;

    [[nodiscard]] static FieldTag parse(std::string_view text) {
        if (text == "Q") return {Kind::Q, 0};
        if (text == "Qi") return {Kind::Qi, 0};
        if (text.rfind("Fp:", 0) == 0) {
            const std::string digits(text.substr(3));
            if (digits.empty() ||
                digits.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("malformed prime in field tag '" + std::string(text) + "'", 1, 1);
            std::uint64_t p = 0;
            try {
                p = std::stoull(digits);
            } catch (const std::exception&) {
                throw ParseError("malformed prime in field tag", 1, 1);
            }
            Fp::set_modulus(p); // validates primality and range
            return {Kind::Fp, p};
        }
        throw ParseError("unknown field tag '" + std::string(text) + "' (expected Q, Qi or Fp:<prime>)",
                         1, 1);
    }

    [[nodiscard]] std::string str() const {
        switch (kind) {
            case Kind::Q: return "Q";
            case Kind::Qi: return "Qi";
            case Kind::Fp: return "Fp:" + std::to_string(prime);
        }
        return "Q";
    }
};

/// Variable declaration: "x,y,z" (singly graded) or "s0,s1;t0,t1" (bigraded).
[[nodiscard]] inline RingPtr parse_variables(std::string_view decl) {
    const auto split = [](std::string_view s, char sep) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= s.size(); ++i) {
            if (i == s.size() || s[i] == sep) {
                std::string_view part = s.substr(start, i - start);
                while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front())))
                    part.remove_prefix(1);
                while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back())))
                    part.remove_suffix(1);
                parts.emplace_back(part);
                start = i + 1;
            }
        }
        return parts;
    };
    const auto validate = [](const std::vector<std::string>& names) {
        for (const auto& n : names) {
            if (n.empty()) throw ParseError("empty variable name in declaration", 1, 1);
            if (!std::isalpha(static_cast<unsigned char>(n.front())) && n.front() != '_')
                throw ParseError("invalid variable name '" + n + "'", 1, 1);
            for (char c : n)
                if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                    throw ParseError("invalid variable name '" + n + "'", 1, 1);
        }
    };
    const std::vector<std::string> blocks = split(decl, ';');
    try {
        if (blocks.size() == 1) {
            auto names = split(blocks[0], ',');
            validate(names);
            return PolyRing::standard(std::move(names));
        }
        if (blocks.size() == 2) {
            auto first = split(blocks[0], ',');
            auto second = split(blocks[1], ',');
            validate(first);
            validate(second);
            return PolyRing::bigraded(std::move(first), std::move(second));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
    throw ParseError("a variable declaration has at most two ';'-separated blocks", 1, 1);
}

// ===== Normalized printing ==================================================

namespace detail {

/// Printing order: total degree descending, then the graded-piece order
/// (grevlex-descending; per-block for bigraded rings).  Restricted to one
/// (bi)degree this coincides with the GradedPiece basis order.
[[nodiscard]] inline bool print_before(const RingPtr& ring, const Exponents& a,
                                       const Exponents& b) {
    const unsigned da = polyring::total_degree(a), db = polyring::total_degree(b);
    if (da != db) return da > db;
    if (!ring->is_bigraded()) return polyring::grevlex_less(b, a);
    const std::size_t k = ring->first_block();
    const Exponents ha(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
    const Exponents hb(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k));
    if (ha != hb) return polyring::grevlex_less(hb, ha);
    const Exponents ta(a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
    const Exponents tb(b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
    return polyring::grevlex_less(tb, ta);
}

[[nodiscard]] inline std::string monomial_text(const RingPtr& ring, const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring->variables()[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

/// Sign split of a coefficient for term joining: {negative, magnitude text,
/// true when the magnitude is the literal 1 and may be elided}.
struct CoeffText {
    bool negative;
    std::string text;
    bool is_unit;
};

[[nodiscard]] inline CoeffText coeff_text(const Rational& c) {
    const Rational mag = c.sign() < 0 ? -c : c;
    return {c.sign() < 0, mag.str(), mag.is_one()};
}

[[nodiscard]] inline CoeffText coeff_text(const Fp& c) { return {false, c.str(), c.is_one()}; }

[[nodiscard]] inline CoeffText coeff_text(const GaussianRational& c) {
    if (c.im().is_zero()) return coeff_text(c.re());
    const auto imag_text = [](const Rational& im) {
        const Rational mag = im.sign() < 0 ? -im : im;
        return mag.is_one() ? std::string("i") : mag.str() + "i";
    };
    if (c.re().is_zero()) return {c.im().sign() < 0, imag_text(c.im()), false};
    const std::string inner = c.re().str() + (c.im().sign() < 0 ? "-" : "+") + imag_text(c.im());
    return {false, "(" + inner + ")", false};
}

} // namespace detail

///// Canonical text: terms in the deterministic monomial order, coefficients in
/// lowest terms, explicit '*' everywhere.  parse(print(f)) == f, and printing
/// is a fixed point on its own output.
template <FieldType K>
[[nodiscard]] std::string print_polynomial(const Polynomial<K>& f) {
    if (f.is_zero()) return "0";
    std::vector<const Exponents*> order;
    order.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) order.push_back(&e);
    std::sort(order.begin(), order.end(), [&](const Exponents* a, const Exponents* b) {
        return detail::print_before(f.ring(), *a, *b);
    });
    std::string out;
    for (const Exponents* e : order) {
        const detail::CoeffText ct = detail::coeff_text(f.coefficient(*e));
        const std::string mono = detail::monomial_text(f.ring(), *e);
        std::string body;
        if (mono.empty()) body = ct.text;
        else if (ct.is_unit) body = mono;
        else body = ct.text + "*" + mono;
        if (out.empty()) out = (ct.negative ? "-" : "") + body;
        else out += (ct.negative ? " - " : " + ") + body;
    }
    return out;
}

template <FieldType K>
[[nodiscard]] std::string print_ideal(const Ideal<K>& ideal) {
    if (ideal.generators.empty()) return "[0]";
    std::string out = "[";
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        if (i != 0) out += ", ";
        out += print_polynomial(ideal.generators[i]);
    }
    return out + "]";
}

} // namespace superfat::ioparse
