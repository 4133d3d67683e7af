#include "lazyvor/expr.hpp"
#include "lazyvor/errors.hpp"

#include <algorithm>
#include <cctype>

namespace lazyvor {

namespace {

struct Token {
    enum class Kind { Integer, Ident, Plus, Minus, Star, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                digits.push_back(text[i++]);
            }
            tokens.push_back({Token::Kind::Integer, std::move(digits), col});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                name.push_back(text[i++]);
            }
            tokens.push_back({Token::Kind::Ident, std::move(name), col});
            continue;
        }
        Token::Kind kind;
        switch (c) {
        case '+': kind = Token::Kind::Plus; break;
        case '-': kind = Token::Kind::Minus; break;
        case '*': kind = Token::Kind::Star; break;
        case '/': kind = Token::Kind::Slash; break;
        case '(': kind = Token::Kind::LParen; break;
        case ')': kind = Token::Kind::RParen; break;
        default:
            throw SpecError("syntax error at column " + std::to_string(col) +
                            ": unexpected character '" + std::string(1, c) + "'");
        }
        tokens.push_back({kind, std::string(1, c), col});
        ++i;
    }
    tokens.push_back({Token::Kind::End, "", static_cast<int>(text.size()) + 1});
    return tokens;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const std::vector<std::string>& variables)
        : tokens_(std::move(tokens)), variables_(variables) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (peek().kind != Token::Kind::End) {
            fail("expected end of expression");
        }
        return e;
    }

private:
    std::vector<Token> tokens_;
    const std::vector<std::string>& variables_;
    size_t pos_ = 0;

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        const std::string got =
            t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw SpecError("syntax error at column " + std::to_string(t.column) + ": " + msg +
                        ", got " + got);
    }

    static ExprPtr make(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (peek().kind == Token::Kind::Plus) {
                next();
                e = make(Expr::Kind::Add, std::move(e), term());
            } else if (peek().kind == Token::Kind::Minus) {
                next();
                e = make(Expr::Kind::Sub, std::move(e), term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (peek().kind == Token::Kind::Star) {
                next();
                e = make(Expr::Kind::Mul, std::move(e), factor());
            } else if (peek().kind == Token::Kind::Slash) {
                next();
                e = make(Expr::Kind::Div, std::move(e), factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        if (peek().kind == Token::Kind::Minus) {
            next();
            return make(Expr::Kind::Neg, primary(), nullptr);
        }
        return primary();
    }

    ExprPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::Integer: {
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Literal;
            e->literal = Rational(BigInt(t.text));
            next();
            return e;
        }
        case Token::Kind::Ident: {
            if (std::find(variables_.begin(), variables_.end(), t.text) == variables_.end()) {
                throw SpecError("syntax error at column " + std::to_string(t.column) +
                                ": unknown variable '" + t.text + "'");
            }
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Var;
            e->var = t.text;
            next();
            return e;
        }
        case Token::Kind::LParen: {
            next();
            ExprPtr e = expr();
            if (peek().kind != Token::Kind::RParen) {
                fail("expected ')'");
            }
            next();
            return e;
        }
        default:
            fail("expected integer, variable, or '('");
        }
    }
};

} // namespace

ExprPtr parse_expr(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(tokenize(text), variables).parse();
}

Rational eval_expr(const Expr& e, const std::map<std::string, Rational>& env) {
    switch (e.kind) {
    case Expr::Kind::Literal:
        return e.literal;
    case Expr::Kind::Var: {
        const auto it = env.find(e.var);
        if (it == env.end()) {
            throw DomainError("unbound variable '" + e.var + "'");
        }
        return it->second;
    }
    case Expr::Kind::Neg:
        return -eval_expr(*e.lhs, env);
    case Expr::Kind::Add:
        return eval_expr(*e.lhs, env) + eval_expr(*e.rhs, env);
    case Expr::Kind::Sub:
        return eval_expr(*e.lhs, env) - eval_expr(*e.rhs, env);
    case Expr::Kind::Mul:
        return eval_expr(*e.lhs, env) * eval_expr(*e.rhs, env);
    case Expr::Kind::Div: {
        const Rational denom = eval_expr(*e.rhs, env);
        if (denom == 0) {
            throw DomainError("division by zero in coordinate expression");
        }
        return eval_expr(*e.lhs, env) / denom;
    }
    }
    throw DomainError("corrupt expression node");
}

namespace {

// Precedence levels: Add/Sub 1, Mul/Div 2, Neg 3, atoms 4.
int precedence(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    default: return 4;
    }
}

void print_rec(const Expr& e, std::string& out, int parent_prec, bool right_child) {
    const int prec = precedence(e.kind);
    // Parenthesize when binding looser than the context, or equally loose on
    // the right of a left-associative operator (keeps a - (b - c) intact).
    const bool parens = prec < parent_prec || (prec == parent_prec && right_child && prec < 3);
    if (parens) {
        out += "(";
    }
    switch (e.kind) {
    case Expr::Kind::Literal:
        out += to_string(e.literal);
        break;
    case Expr::Kind::Var:
        out += e.var;
        break;
    case Expr::Kind::Neg:
        out += "-";
        print_rec(*e.lhs, out, 4, false);
        break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
        print_rec(*e.lhs, out, prec, false);
        out += e.kind == Expr::Kind::Add ? " + " : " - ";
        print_rec(*e.rhs, out, prec, true);
        break;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
        print_rec(*e.lhs, out, prec, false);
        out += e.kind == Expr::Kind::Mul ? "*" : "/";
        print_rec(*e.rhs, out, prec, true);
        break;
    }
    if (parens) {
        out += ")";
    }
}

} // namespace

std::string print_expr(const Expr& e) {
    std::string out;
    print_rec(e, out, 0, false);
    return out;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
    case Expr::Kind::Literal:
        return a.literal == b.literal;
    case Expr::Kind::Var:
        return a.var == b.var;
    case Expr::Kind::Neg:
        return expr_equal(*a.lhs, *b.lhs);
    default:
        return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    }
}

ExprPtr clone_expr(const Expr& e) {
    auto out = std::make_unique<Expr>();
    out->kind = e.kind;
    out->literal = e.literal;
    out->var = e.var;
    if (e.lhs) {
        out->lhs = clone_expr(*e.lhs);
    }
    if (e.rhs) {
        out->rhs = clone_expr(*e.rhs);
    }
    return out;
}

} // namespace lazyvor
