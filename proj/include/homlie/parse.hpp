#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "homlie/poly.hpp"

namespace homlie {

enum class TokenKind { Integer, Identifier, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };

struct ExprToken {
    TokenKind kind;
    std::string lexeme;
    std::size_t position;  // byte offset into the source
};

/// Splits an expression into tokens. Whitespace separates; identifiers are
/// [A-Za-z][A-Za-z0-9_]*, integers [0-9]+. The synthetic End token is not
/// included in the result.
inline std::vector<ExprToken> tokenize(const std::string& src) {
    std::vector<ExprToken> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({TokenKind::Integer, src.substr(start, i - start), start});
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({TokenKind::Identifier, src.substr(start, i - start), start});
        } else {
            TokenKind k;
            switch (c) {
                case '+': k = TokenKind::Plus; break;
                case '-': k = TokenKind::Minus; break;
                case '*': k = TokenKind::Star; break;
                case '^': k = TokenKind::Caret; break;
                case '(': k = TokenKind::LParen; break;
                case ')': k = TokenKind::RParen; break;
                case '/': k = TokenKind::Slash; break;
                default:
                    throw ParseError(std::string("illegal character '") + c + "'", start);
            }
            out.push_back({k, std::string(1, c), start});
            ++i;
        }
    }
    return out;
}

namespace detail {

// cpp_int's string constructor treats a leading 0 as an octal prefix, so
// "009" would be rejected; strip the zeros first.
inline Integer digits_to_integer(const std::string& lexeme) {
    std::size_t nz = lexeme.find_first_not_of('0');
    return Integer(nz == std::string::npos ? "0" : lexeme.substr(nz));
}

// Recursive descent over:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ('-')* atom ('^' int)?
//   atom   := int | int '/' int | ident | '(' expr ')'
class PolyParser {
  public:
    PolyParser(std::vector<ExprToken> tokens, RegistryView reg, std::size_t src_len)
        : toks_(std::move(tokens)), reg_(std::move(reg)), end_pos_(src_len) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        if (!at_end()) throw ParseError("unexpected token '" + peek().lexeme + "'", peek().position);
        return p;
    }

  private:
    MultiPoly expr() {
        MultiPoly acc = term();
        while (!at_end() && (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus)) {
            bool minus = take().kind == TokenKind::Minus;
            MultiPoly rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (!at_end() && peek().kind == TokenKind::Star) {
            take();
            acc = acc * factor();
        }
        return acc;
    }

    MultiPoly factor() {
        bool negate = false;
        while (!at_end() && peek().kind == TokenKind::Minus) {
            take();
            negate = !negate;
        }
        MultiPoly base = atom();
        if (!at_end() && peek().kind == TokenKind::Caret) {
            std::size_t pos = take().position;
            if (at_end() || peek().kind != TokenKind::Integer) {
                if (!at_end() && peek().kind == TokenKind::Minus)
                    throw ParseError("negative exponent not allowed", peek().position);
                throw ParseError("expected integer exponent after '^'", pos);
            }
            long e;
            try {
                e = std::stol(take().lexeme);
            } catch (const std::exception&) {
                throw ParseError("exponent too large", pos);
            }
            if (e > 10000) throw ParseError("exponent too large", pos);
            MultiPoly pow = MultiPoly::constant(reg_, 1);
            for (long k = 0; k < e; ++k) pow = pow * base;
            base = pow;
        }
        return negate ? -base : base;
    }

    MultiPoly atom() {
        if (at_end()) throw ParseError("unexpected end of expression", end_pos_);
        ExprToken t = take();
        switch (t.kind) {
            case TokenKind::Integer: {
                Integer num = digits_to_integer(t.lexeme);
                if (!at_end() && peek().kind == TokenKind::Slash) {
                    take();
                    if (at_end() || peek().kind != TokenKind::Integer)
                        throw ParseError("expected integer denominator", pos_here());
                    ExprToken d = take();
                    Integer den = digits_to_integer(d.lexeme);
                    if (den == 0) throw ParseError("zero denominator", d.position);
                    return MultiPoly::constant(reg_, Rational(num, den));
                }
                return MultiPoly::constant(reg_, Rational(num));
            }
            case TokenKind::Identifier: {
                auto id = reg_->find(t.lexeme);
                if (!id)
                    throw ParseError("unknown identifier '" + t.lexeme + "'", t.position);
                return MultiPoly::variable(reg_, *id);
            }
            case TokenKind::LParen: {
                MultiPoly inner = expr();
                if (at_end() || peek().kind != TokenKind::RParen)
                    throw ParseError("expected ')'", pos_here());
                take();
                return inner;
            }
            default:
                throw ParseError("unexpected token '" + t.lexeme + "'", t.position);
        }
    }

    bool at_end() const { return i_ >= toks_.size(); }
    const ExprToken& peek() const { return toks_[i_]; }
    const ExprToken& take() { return toks_[i_++]; }
    std::size_t pos_here() const { return at_end() ? end_pos_ : peek().position; }

    std::vector<ExprToken> toks_;
    RegistryView reg_;
    std::size_t end_pos_;
    std::size_t i_ = 0;
};

}  // namespace detail

/// Parses an expression into a canonical polynomial. Every identifier must
/// already be declared in the registry.
inline MultiPoly parse_poly(const std::string& src, RegistryView reg) {
    detail::PolyParser parser(tokenize(src), std::move(reg), src.size());
    return parser.parse();
}

}  // namespace homlie
