#include "weyl/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "weyl/calculus.hpp"
#include "weyl/symmetrize.hpp"

namespace weyl {

namespace {

enum class Tok {
    Q,
    P,
    H,
    Rho,
    Dq,
    Dp,
    Sym,
    PB,
    Comm,
    Number,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    At,
    Caret,
    End,
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Q: return "'q'";
        case Tok::P: return "'p'";
        case Tok::H: return "'h'";
        case Tok::Rho: return "'rho'";
        case Tok::Dq: return "'dq'";
        case Tok::Dp: return "'dp'";
        case Tok::Sym: return "'S'";
        case Tok::PB: return "'PB'";
        case Tok::Comm: return "'C'";
        case Tok::Number: return "a rational";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::At: return "'@'";
        case Tok::Caret: return "'^'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok type;
    std::string text;
    SourcePos pos;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto pos = [&]() { return SourcePos{line, col}; };
    while (i < text.size()) {
        char c = text[i];
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
        SourcePos start = pos();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i]))) {
                num.push_back(text[i]);
                ++i;
                ++col;
            }
            if (i < text.size() && text[i] == '/') {
                std::size_t save_i = i;
                int save_col = col;
                ++i;
                ++col;
                std::string den;
                while (i < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[i]))) {
                    den.push_back(text[i]);
                    ++i;
                    ++col;
                }
                if (den.empty()) {
                    i = save_i;
                    col = save_col;
                } else {
                    num += "/" + den;
                }
            }
            out.push_back(Token{Tok::Number, std::move(num), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string ident;
            while (i < text.size() &&
                   std::isalpha(static_cast<unsigned char>(text[i]))) {
                ident.push_back(text[i]);
                ++i;
                ++col;
            }
            Tok t;
            if (ident == "q") t = Tok::Q;
            else if (ident == "p") t = Tok::P;
            else if (ident == "h") t = Tok::H;
            else if (ident == "rho") t = Tok::Rho;
            else if (ident == "dq") t = Tok::Dq;
            else if (ident == "dp") t = Tok::Dp;
            else if (ident == "S") t = Tok::Sym;
            else if (ident == "PB") t = Tok::PB;
            else if (ident == "C") t = Tok::Comm;
            else
                throw ParseError("unknown symbol '" + ident + "'", start);
            out.push_back(Token{t, std::move(ident), start});
            continue;
        }
        switch (c) {
            case '(': out.push_back(Token{Tok::LParen, "(", start}); break;
            case ')': out.push_back(Token{Tok::RParen, ")", start}); break;
            case ',': out.push_back(Token{Tok::Comma, ",", start}); break;
            case '+': out.push_back(Token{Tok::Plus, "+", start}); break;
            case '-': out.push_back(Token{Tok::Minus, "-", start}); break;
            case '*': out.push_back(Token{Tok::Star, "*", start}); break;
            case '@': out.push_back(Token{Tok::At, "@", start}); break;
            case '^': out.push_back(Token{Tok::Caret, "^", start}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 start);
        }
        ++i;
        ++col;
        continue;
    }
    out.push_back(Token{Tok::End, "", pos()});
    return out;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        expect(Tok::End, "'+', '-', '*', '@' or end of input");
        return e;
    }

  private:
    const Token& peek() const { return tokens_[index_]; }
    Token advance() { return tokens_[index_++]; }
    bool accept(Tok t) {
        if (peek().type != t) return false;
        ++index_;
        return true;
    }
    void expect(Tok t, const std::string& expected) {
        if (peek().type != t)
            throw ParseError("got " + describe(peek()) + ", expected " + expected,
                             peek().pos);
        ++index_;
    }
    static std::string describe(const Token& t) {
        if (t.type == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }

    static ExprPtr node(Expr::Kind kind, SourcePos pos) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->pos = pos;
        return e;
    }

    ExprPtr parse_expr() {
        SourcePos start = peek().pos;
        ExprPtr lhs;
        if (accept(Tok::Minus)) {
            auto neg = node(Expr::Kind::Negate, start);
            neg->lhs = parse_term();
            lhs = std::move(neg);
        } else {
            lhs = parse_term();
        }
        for (;;) {
            SourcePos op_pos = peek().pos;
            if (accept(Tok::Plus)) {
                auto e = node(Expr::Kind::Sum, op_pos);
                e->lhs = std::move(lhs);
                e->rhs = parse_term();
                lhs = std::move(e);
            } else if (accept(Tok::Minus)) {
                auto e = node(Expr::Kind::Difference, op_pos);
                e->lhs = std::move(lhs);
                e->rhs = parse_term();
                lhs = std::move(e);
            } else {
                return lhs;
            }
        }
    }

    static bool starts_base(Tok t) {
        switch (t) {
            case Tok::Q:
            case Tok::P:
            case Tok::H:
            case Tok::Rho:
            case Tok::Dq:
            case Tok::Dp:
            case Tok::Sym:
            case Tok::PB:
            case Tok::Comm:
            case Tok::Number:
            case Tok::LParen:
                return true;
            default:
                return false;
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            SourcePos op_pos = peek().pos;
            if (accept(Tok::Star)) {
                auto e = node(Expr::Kind::Product, op_pos);
                e->lhs = std::move(lhs);
                e->rhs = parse_factor();
                lhs = std::move(e);
            } else if (accept(Tok::At)) {
                auto e = node(Expr::Kind::SymProduct, op_pos);
                e->lhs = std::move(lhs);
                e->rhs = parse_factor();
                lhs = std::move(e);
            } else if (starts_base(peek().type)) {
                // Juxtaposition reads as an ordinary product so the canonical
                // text form ("q p + 1/2 h") is itself parseable.
                auto e = node(Expr::Kind::Product, op_pos);
                e->lhs = std::move(lhs);
                e->rhs = parse_factor();
                lhs = std::move(e);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_base();
        if (!accept(Tok::Caret)) return base;
        const Token& t = peek();
        if (t.type != Tok::Number || t.text.find('/') != std::string::npos)
            throw ParseError("got " + describe(t) +
                                 ", expected a nonnegative integer exponent",
                             t.pos);
        auto e = node(Expr::Kind::Power, t.pos);
        try {
            e->exponent = std::stol(t.text);
        } catch (const std::out_of_range&) {
            throw ParseError("exponent '" + t.text + "' is out of range", t.pos);
        }
        e->lhs = std::move(base);
        ++index_;
        return e;
    }

    ExprPtr parse_base() {
        const Token t = peek();
        switch (t.type) {
            case Tok::Q: ++index_; return node(Expr::Kind::GenQ, t.pos);
            case Tok::P: ++index_; return node(Expr::Kind::GenP, t.pos);
            case Tok::H: ++index_; return node(Expr::Kind::GenH, t.pos);
            case Tok::Rho: ++index_; return node(Expr::Kind::GenRho, t.pos);
            case Tok::Dq:
            case Tok::Dp: {
                ++index_;
                expect(Tok::LParen, "'(' after " + std::string(tok_name(t.type)));
                expect(Tok::Rho, "'rho'");
                expect(Tok::RParen, "')'");
                return node(t.type == Tok::Dq ? Expr::Kind::GenDqRho
                                              : Expr::Kind::GenDpRho,
                            t.pos);
            }
            case Tok::Number: {
                ++index_;
                auto e = node(Expr::Kind::RationalLit, t.pos);
                auto slash = t.text.find('/');
                if (slash != std::string::npos &&
                    Integer(t.text.substr(slash + 1), 10) == 0)
                    throw ParseError("zero denominator in rational literal",
                                     t.pos);
                e->value = Rational(t.text, 10);
                e->value.canonicalize();
                return e;
            }
            case Tok::LParen: {
                ++index_;
                auto e = node(Expr::Kind::Group, t.pos);
                e->lhs = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Sym: {
                ++index_;
                expect(Tok::LParen, "'(' after 'S'");
                auto e = node(Expr::Kind::Symmetrize, t.pos);
                e->lhs = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::PB:
            case Tok::Comm: {
                ++index_;
                expect(Tok::LParen,
                       "'(' after " + std::string(tok_name(t.type)));
                auto e = node(t.type == Tok::PB ? Expr::Kind::PoissonBracket
                                                : Expr::Kind::Commutator,
                              t.pos);
                e->lhs = parse_expr();
                expect(Tok::Comma, "','");
                e->rhs = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            default:
                throw ParseError(
                    "got " + describe(t) +
                        ", expected 'q', 'p', 'h', 'rho', 'dq(rho)', "
                        "'dp(rho)', a rational, '(', 'S(', 'PB(' or 'C('",
                    t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& text) {
    return Parser(lex(text)).run();
}

namespace {

// Engine errors surface with the position of the deepest failing node.
struct PositionedPreconditionError : PreconditionError {
    using PreconditionError::PreconditionError;
};

template <typename Fn>
OperatorPoly guarded(const Expr& e, Fn&& fn) {
    try {
        return fn();
    } catch (const PositionedPreconditionError&) {
        throw;
    } catch (const PreconditionError& err) {
        throw PositionedPreconditionError(std::to_string(e.pos.line) + ":" +
                                          std::to_string(e.pos.col) + ": " +
                                          err.what());
    }
}

}  // namespace

OperatorPoly eval(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::GenQ: return OperatorPoly::q();
        case K::GenP: return OperatorPoly::p();
        case K::GenH: return OperatorPoly::h();
        case K::GenRho: return OperatorPoly::state_atom();
        case K::GenDqRho: return OperatorPoly::atom(AtomClass::DqState);
        case K::GenDpRho: return OperatorPoly::atom(AtomClass::DpState);
        case K::RationalLit: return OperatorPoly::constant(e.value);
        case K::Power:
            return guarded(e, [&] {
                OperatorPoly base = eval(*e.lhs);
                OperatorPoly r = OperatorPoly::identity();
                for (long i = 0; i < e.exponent; ++i) r = multiply(r, base);
                return r;
            });
        case K::Product:
            return guarded(e, [&] { return multiply(eval(*e.lhs), eval(*e.rhs)); });
        case K::SymProduct:
            return guarded(e,
                           [&] { return sym_product(eval(*e.lhs), eval(*e.rhs)); });
        case K::Sum: return eval(*e.lhs) + eval(*e.rhs);
        case K::Difference: return eval(*e.lhs) - eval(*e.rhs);
        case K::Negate: return -eval(*e.lhs);
        case K::Symmetrize:
            return guarded(e, [&] { return symmetrize(eval(*e.lhs)); });
        case K::PoissonBracket:
            return guarded(e,
                           [&] { return poisson_sym(eval(*e.lhs), eval(*e.rhs)); });
        case K::Commutator:
            return guarded(e, [&] { return commutator(eval(*e.lhs), eval(*e.rhs)); });
        case K::Group: return eval(*e.lhs);
    }
    throw PreconditionError("unreachable expression kind");
}

ClassicalPoly eval_classical(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::GenQ: return ClassicalPoly::q();
        case K::GenP: return ClassicalPoly::p();
        case K::RationalLit: return ClassicalPoly::constant(e.value);
        case K::Power: {
            ClassicalPoly base = eval_classical(*e.lhs);
            ClassicalPoly r = ClassicalPoly::constant(1);
            for (long i = 0; i < e.exponent; ++i) r = c_multiply(r, base);
            return r;
        }
        case K::Product:
            return c_multiply(eval_classical(*e.lhs), eval_classical(*e.rhs));
        case K::Sum: return eval_classical(*e.lhs) + eval_classical(*e.rhs);
        case K::Difference:
            return eval_classical(*e.lhs) - eval_classical(*e.rhs);
        case K::Negate: return -eval_classical(*e.lhs);
        case K::Group: return eval_classical(*e.lhs);
        case K::GenH:
            throw PreconditionError(
                "classical expressions may not contain h");
        default:
            throw PreconditionError(
                "not a classical expression: only q, p, rationals, +, -, *, "
                "^ and grouping are allowed");
    }
}

}  // namespace weyl
