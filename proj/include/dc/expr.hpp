#pragma once

#include "dc/congruence.hpp"
#include "dc/eisenstein.hpp"
#include "dc/errors.hpp"
#include "dc/series.hpp"
#include "dc/series2.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dc {

// Abstract syntax of the expression language: rational literals, the named
// Eisenstein series, field operations, integer powers, the tensor product,
// constant-term extraction and virtual-weight brackets.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, name, neg, add, sub, mul, div, tensor, pow, q0, bracket };

    Kind kind;
    Rational value;     // number
    std::string id;     // name
    ExprPtr a, b;       // operands; unary nodes use a only
    int n = 0;          // pow exponent or bracket weight

    static ExprPtr number(Rational v) {
        return std::make_shared<Expr>(Expr{Kind::number, std::move(v), {}, nullptr, nullptr, 0});
    }
    static ExprPtr name(std::string id) {
        return std::make_shared<Expr>(Expr{Kind::name, {}, std::move(id), nullptr, nullptr, 0});
    }
    static ExprPtr unary(Kind k, ExprPtr x, int n = 0) {
        return std::make_shared<Expr>(Expr{k, {}, {}, std::move(x), nullptr, n});
    }
    static ExprPtr binary(Kind k, ExprPtr x, ExprPtr y) {
        return std::make_shared<Expr>(Expr{k, {}, {}, std::move(x), std::move(y), 0});
    }
};

namespace detail {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

    bool at_ident() { return std::isalpha(static_cast<unsigned char>(peek())); }

    Int integer() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", pos);
        return Int(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

inline ExprPtr parse_expr(Lexer& lx);

inline ExprPtr parse_atom(Lexer& lx) {
    if (lx.accept('(')) {
        ExprPtr e = parse_expr(lx);
        lx.expect(')', "')'");
        return e;
    }
    if (lx.accept('[')) {
        ExprPtr e = parse_expr(lx);
        lx.expect(']', "']'");
        lx.expect('_', "'_' after bracket");
        Int w = lx.integer();
        ExprPtr node = Expr::unary(Expr::Kind::bracket, std::move(e),
                                   static_cast<int>(w));
        return node;
    }
    if (lx.at_digit()) return Expr::number(Rational(lx.integer()));
    if (lx.at_ident()) {
        std::size_t at = lx.pos;
        std::string id = lx.ident();
        if (id == "q0") {
            lx.expect('(', "'(' after q0");
            ExprPtr e = parse_expr(lx);
            lx.expect(')', "')'");
            return Expr::unary(Expr::Kind::q0, std::move(e));
        }
        if (id == "E1" || id == "G3" || id == "E4" || id == "E6") return Expr::name(id);
        throw ParseError("unknown name '" + id + "'", at);
    }
    throw ParseError("expected expression", lx.pos);
}

inline ExprPtr parse_factor(Lexer& lx) {
    if (lx.accept('-')) return Expr::unary(Expr::Kind::neg, parse_factor(lx));
    ExprPtr e = parse_atom(lx);
    if (lx.accept('^')) {
        bool negexp = lx.accept('-');
        Int w = lx.integer();
        int n = static_cast<int>(w);
        e = Expr::unary(Expr::Kind::pow, std::move(e), negexp ? -n : n);
    }
    return e;
}

inline ExprPtr parse_term(Lexer& lx) {
    ExprPtr e = parse_factor(lx);
    for (;;) {
        if (lx.accept('*'))
            e = Expr::binary(Expr::Kind::mul, std::move(e), parse_factor(lx));
        else if (lx.accept('/'))
            e = Expr::binary(Expr::Kind::div, std::move(e), parse_factor(lx));
        else if (lx.accept('@'))
            e = Expr::binary(Expr::Kind::tensor, std::move(e), parse_factor(lx));
        else
            return e;
    }
}

inline ExprPtr parse_expr(Lexer& lx) {
    ExprPtr e = parse_term(lx);
    for (;;) {
        if (lx.accept('+'))
            e = Expr::binary(Expr::Kind::add, std::move(e), parse_term(lx));
        else if (lx.accept('-'))
            e = Expr::binary(Expr::Kind::sub, std::move(e), parse_term(lx));
        else
            return e;
    }
}

}  // namespace detail

inline ExprPtr parse(const std::string& text) {
    detail::Lexer lx(text);
    ExprPtr e = detail::parse_expr(lx);
    if (!lx.eof()) throw ParseError("trailing input", lx.pos);
    return e;
}

namespace detail {

// binding strength used to decide parenthesization when printing
inline int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::add:
        case Expr::Kind::sub: return 1;
        case Expr::Kind::mul:
        case Expr::Kind::div:
        case Expr::Kind::tensor: return 2;
        case Expr::Kind::neg: return 3;
        case Expr::Kind::pow: return 4;
        default: return 5;
    }
}

inline void print_to(const ExprPtr& e, std::string& out);

inline void print_child(const ExprPtr& c, int min_prec, std::string& out) {
    if (precedence(c->kind) < min_prec) {
        out += '(';
        print_to(c, out);
        out += ')';
    } else {
        print_to(c, out);
    }
}

inline void print_to(const ExprPtr& e, std::string& out) {
    switch (e->kind) {
        case Expr::Kind::number:
            if (den(e->value) == 1) {
                out += num(e->value).str();
            } else {
                out += '(' + num(e->value).str() + '/' + den(e->value).str() + ')';
            }
            return;
        case Expr::Kind::name: out += e->id; return;
        case Expr::Kind::neg:
            out += '-';
            print_child(e->a, precedence(Expr::Kind::neg), out);
            return;
        case Expr::Kind::add:
        case Expr::Kind::sub:
            print_child(e->a, 1, out);
            out += e->kind == Expr::Kind::add ? " + " : " - ";
            print_child(e->b, 2, out);
            return;
        case Expr::Kind::mul:
        case Expr::Kind::div:
        case Expr::Kind::tensor:
            print_child(e->a, 2, out);
            out += e->kind == Expr::Kind::mul ? "*" : e->kind == Expr::Kind::div ? "/" : "@";
            print_child(e->b, 3, out);
            return;
        case Expr::Kind::pow:
            print_child(e->a, 5, out);
            out += '^';
            if (e->n < 0) out += '-';
            out += std::to_string(e->n < 0 ? -e->n : e->n);
            return;
        case Expr::Kind::q0:
            out += "q0(";
            print_to(e->a, out);
            out += ')';
            return;
        case Expr::Kind::bracket:
            out += '[';
            print_to(e->a, out);
            out += "]_" + std::to_string(e->n);
            return;
    }
}

}  // namespace detail

inline std::string print(const ExprPtr& e) {
    std::string out;
    detail::print_to(e, out);
    return out;
}

// Evaluation result: a plain rational, a one-variable expansion or a
// two-variable expansion.
using Value = std::variant<Rational, Series, Series2>;

namespace detail {

inline Series to_series(const Value& v, int prec) {
    if (std::holds_alternative<Rational>(v))
        return Series::constant(std::get<Rational>(v), prec);
    if (std::holds_alternative<Series>(v)) return std::get<Series>(v);
    throw EvalError("expected a one-variable operand");
}

inline Value eval_node(const ExprPtr& e, int level, int prec);

inline Value eval_binary(const ExprPtr& e, int level, int prec) {
    Value va = eval_node(e->a, level, prec);
    Value vb = eval_node(e->b, level, prec);
    Expr::Kind k = e->kind;

    if (k == Expr::Kind::tensor)
        return Series2::tensor(to_series(va, prec), to_series(vb, prec));

    if (k == Expr::Kind::div) {
        if (!std::holds_alternative<Rational>(vb))
            throw EvalError("division requires a rational divisor");
        Rational d = std::get<Rational>(vb);
        if (d == 0) throw EvalError("division by zero");
        if (std::holds_alternative<Rational>(va)) return std::get<Rational>(va) / d;
        if (std::holds_alternative<Series>(va)) return std::get<Series>(va) / d;
        return std::get<Series2>(va) / d;
    }

    // promote rationals, keep two-variable operands on their own side
    if (std::holds_alternative<Rational>(va) && std::holds_alternative<Rational>(vb)) {
        Rational x = std::get<Rational>(va), y = std::get<Rational>(vb);
        if (k == Expr::Kind::add) return x + y;
        if (k == Expr::Kind::sub) return x - y;
        return x * y;
    }
    if (std::holds_alternative<Series2>(va) || std::holds_alternative<Series2>(vb)) {
        auto promote = [&](const Value& v) -> Series2 {
            if (std::holds_alternative<Series2>(v)) return std::get<Series2>(v);
            if (std::holds_alternative<Rational>(v)) {
                Series c = Series::constant(1, prec);
                return std::get<Rational>(v) * Series2::tensor(c, c);
            }
            throw EvalError("cannot mix one- and two-variable operands");
        };
        if (k == Expr::Kind::mul &&
            (std::holds_alternative<Rational>(va) || std::holds_alternative<Rational>(vb))) {
            if (std::holds_alternative<Rational>(va))
                return std::get<Rational>(va) * std::get<Series2>(vb);
            return std::get<Series2>(va) * std::get<Rational>(vb);
        }
        Series2 x = promote(va), y = promote(vb);
        if (k == Expr::Kind::add) return x + y;
        if (k == Expr::Kind::sub) return x - y;
        return x * y;
    }
    Series x = to_series(va, prec), y = to_series(vb, prec);
    if (k == Expr::Kind::add) return x + y;
    if (k == Expr::Kind::sub) return x - y;
    return x * y;
}

inline Value eval_node(const ExprPtr& e, int level, int prec) {
    switch (e->kind) {
        case Expr::Kind::number: return e->value;
        case Expr::Kind::name: {
            if (e->id == "E4") return eisenstein(1, 4, prec);
            if (e->id == "E6") return eisenstein(1, 6, prec);
            if (e->id == "E1" || e->id == "G3") {
                if (level != 3)
                    throw EvalError("name '" + e->id + "' requires level 3");
                return eisenstein(3, e->id == "E1" ? 1 : 3, prec);
            }
            throw EvalError("unknown name '" + e->id + "'");
        }
        case Expr::Kind::neg: {
            Value v = eval_node(e->a, level, prec);
            if (std::holds_alternative<Rational>(v)) return -std::get<Rational>(v);
            if (std::holds_alternative<Series>(v)) return -std::get<Series>(v);
            return -std::get<Series2>(v);
        }
        case Expr::Kind::pow: {
            Value v = eval_node(e->a, level, prec);
            if (std::holds_alternative<Rational>(v)) {
                Rational base = std::get<Rational>(v);
                int n = e->n;
                if (n < 0) {
                    if (base == 0) throw EvalError("division by zero");
                    base = Rational(1) / base;
                    n = -n;
                }
                Rational r(1);
                for (int i = 0; i < n; ++i) r = r * base;
                return r;
            }
            if (e->n < 0) throw EvalError("negative power of a series");
            if (std::holds_alternative<Series>(v)) return std::get<Series>(v).pow(e->n);
            return std::get<Series2>(v).pow(e->n);
        }
        case Expr::Kind::q0: {
            Value v = eval_node(e->a, level, prec);
            if (std::holds_alternative<Rational>(v)) return std::get<Rational>(v);
            if (std::holds_alternative<Series>(v)) return std::get<Series>(v).q0();
            return chi0_left(std::get<Series2>(v));
        }
        case Expr::Kind::bracket: {
            Value v = eval_node(e->a, level, prec);
            if (std::holds_alternative<Series2>(v))
                return bracket2(std::get<Series2>(v), level, e->n);
            return bracket1(to_series(v, prec), level, e->n);
        }
        default: return eval_binary(e, level, prec);
    }
}

}  // namespace detail

inline Value eval(const ExprPtr& e, int level, int prec) {
    if (level != 1 && level != 3) throw EvalError("level must be 1 or 3");
    if (prec < 1) throw EvalError("precision must be positive");
    return detail::eval_node(e, level, prec);
}

inline Value eval(const std::string& text, int level, int prec) {
    return eval(parse(text), level, prec);
}

}  // namespace dc
