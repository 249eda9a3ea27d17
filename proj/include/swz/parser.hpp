// Recursive-descent parser for the equation grammar
//   S(f) [^ INT] = EXPR
// where EXPR ranges over f, z, integer literals, + - * / ^ ( ). Values are
// rational expressions in f over Q(z); the final value's numerator/denominator
// give P and Q. A coefficient-only variant parses rational functions of z.
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "swz/equation.hpp"

namespace swz {
namespace detail {

struct Token {
    enum Kind { Int, VarF, VarZ, Plus, Minus, Star, Slash, Caret, LParen, RParen, Eq, SOp, End };
    Kind kind;
    std::size_t pos;
    std::string text;
};

inline std::vector<Token> lex(const std::string& s, bool allow_f) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        std::size_t pos = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                digits.push_back(s[i++]);
            out.push_back({Token::Int, pos, digits});
            // coefficient juxtaposition like "2z" reads as 2*z
            if (i < s.size() && (s[i] == 'z' || (allow_f && s[i] == 'f'))) {
                out.push_back({Token::Star, i, "*"});
            }
            continue;
        }
        switch (ch) {
            case 'f':
                if (!allow_f) throw SyntaxError(pos, "variable f not allowed here");
                out.push_back({Token::VarF, pos, "f"});
                break;
            case 'z': out.push_back({Token::VarZ, pos, "z"}); break;
            case 'S': out.push_back({Token::SOp, pos, "S"}); break;
            case '+': out.push_back({Token::Plus, pos, "+"}); break;
            case '-': out.push_back({Token::Minus, pos, "-"}); break;
            case '*': out.push_back({Token::Star, pos, "*"}); break;
            case '/': out.push_back({Token::Slash, pos, "/"}); break;
            case '^': out.push_back({Token::Caret, pos, "^"}); break;
            case '(': out.push_back({Token::LParen, pos, "("}); break;
            case ')': out.push_back({Token::RParen, pos, ")"}); break;
            case '=': out.push_back({Token::Eq, pos, "="}); break;
            default:
                throw SyntaxError(pos, std::string("unexpected character '") + ch + "'");
        }
        ++i;
    }
    out.push_back({Token::End, s.size(), ""});
    return out;
}

// rational expression in f over Q(z): numerator / denominator, the
// denominator kept at f-degree >= 1 only when unavoidable
struct FracF {
    FPoly num, den;

    FracF() : num(0), den(1) {}
    explicit FracF(FPoly n) : num(std::move(n)), den(1) {}
    FracF(FPoly n, FPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero expression");
        // divisions are kept as written: the denominator (even when constant
        // in f) becomes part of Q, so units like c(z) survive parsing
    }

    friend FracF operator+(const FracF& a, const FracF& b) {
        return FracF(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend FracF operator-(const FracF& a, const FracF& b) {
        return FracF(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend FracF operator*(const FracF& a, const FracF& b) {
        return FracF(a.num * b.num, a.den * b.den);
    }
    friend FracF operator/(const FracF& a, const FracF& b) {
        if (b.num.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero expression");
        return FracF(a.num * b.den, a.den * b.num);
    }
    FracF powi(long long e) const {
        if (e < 0) return FracF(FPoly(1)) / powi(-e);
        FracF acc{FPoly(1)};
        for (long long i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }
};

class ExprParser {
public:
    ExprParser(std::vector<Token> toks) : t_(std::move(toks)) {}

    FracF parse_expr() {
        FracF v = parse_term();
        for (;;) {
            if (peek().kind == Token::Plus) {
                next();
                v = v + parse_term();
            } else if (peek().kind == Token::Minus) {
                next();
                v = v - parse_term();
            } else {
                return v;
            }
        }
    }

    const Token& peek() const { return t_[i_]; }
    const Token& next() { return t_[i_++]; }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) throw SyntaxError(peek().pos, "expected " + what);
        next();
    }

private:
    std::vector<Token> t_;
    std::size_t i_ = 0;

    FracF parse_term() {
        FracF v = parse_factor();
        for (;;) {
            if (peek().kind == Token::Star) {
                next();
                v = v * parse_factor();
            } else if (peek().kind == Token::Slash) {
                next();
                std::size_t pos = peek().pos;
                try {
                    v = v / parse_factor();
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::ZeroDenominator)
                        throw SyntaxError(pos, "division by an expression that is zero");
                    throw;
                }
            } else {
                return v;
            }
        }
    }

    FracF parse_factor() {
        bool neg = false;
        while (peek().kind == Token::Minus || peek().kind == Token::Plus) {
            if (next().kind == Token::Minus) neg = !neg;
        }
        FracF v = parse_primary();
        if (peek().kind == Token::Caret) {
            next();
            bool eneg = false;
            while (peek().kind == Token::Minus) {
                next();
                eneg = !eneg;
            }
            if (peek().kind != Token::Int)
                throw SyntaxError(peek().pos, "expected an integer exponent");
            long long e = std::stoll(next().text);
            v = v.powi(eneg ? -e : e);
        }
        if (neg) v = FracF(FPoly(-1)) * v;
        return v;
    }

    FracF parse_primary() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::Int: {
                next();
                return FracF(FPoly(RationalFunction(Rat(BigInt::from_string(tok.text)))));
            }
            case Token::VarF:
                next();
                return FracF(FPoly::f());
            case Token::VarZ:
                next();
                return FracF(FPoly(RationalFunction::var()));
            case Token::LParen: {
                next();
                FracF v = parse_expr();
                expect(Token::RParen, "')'");
                return v;
            }
            default:
                throw SyntaxError(tok.pos, "expected a value");
        }
    }
};

}  // namespace detail

// `S(f)` [`^` INT] `=` EXPR
inline SchwarzEquation parse_equation(const std::string& text) {
    auto toks = detail::lex(text, true);
    detail::ExprParser p(std::move(toks));
    p.expect(detail::Token::SOp, "'S'");
    p.expect(detail::Token::LParen, "'('");
    p.expect(detail::Token::VarF, "'f'");
    p.expect(detail::Token::RParen, "')'");
    long long m = 1;
    if (p.peek().kind == detail::Token::Caret) {
        p.next();
        bool neg = false;
        while (p.peek().kind == detail::Token::Minus) {
            p.next();
            neg = true;
        }
        if (p.peek().kind != detail::Token::Int)
            throw SyntaxError(p.peek().pos, "expected an integer exponent after '^'");
        m = std::stoll(p.next().text);
        if (neg) m = -m;
        if (m <= 0)
            throw Error(ErrorKind::NonPositiveExponent,
                        "exponent must be a positive integer, got " + std::to_string(m));
    }
    p.expect(detail::Token::Eq, "'='");
    detail::FracF rhs = p.parse_expr();
    if (p.peek().kind != detail::Token::End)
        throw SyntaxError(p.peek().pos, "unexpected trailing input");
    if (rhs.den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "Q is the zero polynomial");
    return SchwarzEquation(static_cast<int>(m), rhs.num, rhs.den);
}

// rational function of z alone (no f)
inline RationalFunction parse_rational_function(const std::string& text) {
    auto toks = detail::lex(text, false);
    detail::ExprParser p(std::move(toks));
    detail::FracF v = p.parse_expr();
    if (p.peek().kind != detail::Token::End)
        throw SyntaxError(p.peek().pos, "unexpected trailing input");
    // f never appears, so num/den are f-constant
    return v.num.coeff(0) / v.den.coeff(0);
}

// "p" or "p/q"
inline Rat parse_rat(const std::string& text) { return Rat::from_string(text); }

}  // namespace swz
