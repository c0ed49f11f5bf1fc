#pragma once

/**
 * Curve expression language.
 *
 * Grammar:
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := ('-')? power
 *   power  := atom ('^' power)?
 *   atom   := NUMBER | 'w' | 'pi' | FUNC '(' expr ')' | '(' expr ')'
 *   FUNC   := 'sin' | 'cos' | 'sqrt' | 'exp' | 'ln'
 *
 * The only variable is `w`. The exponent of `^` must fold to a constant.
 * Expressions are immutable trees with shared subtrees and evaluate over
 * Jet3, so every curve defined this way comes with exact derivatives.
 */

#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>

#include "errors.hpp"
#include "jet.hpp"

namespace isoasym {

enum class UnaryOp { neg, sin, cos, sqrt, exp, ln };
enum class BinaryOp { add, sub, mul, div, pow };

namespace expr_node {

struct Number {
    double value;
};
struct Var {};

} // namespace expr_node

class Expr {
public:
    struct Node;

    Expr() = default;

    static Expr number(double v);
    static Expr var();
    static Expr unary(UnaryOp op, Expr arg);
    static Expr binary(BinaryOp op, Expr lhs, Expr rhs);

    const Node& node() const { return *node_; }
    bool empty() const { return !node_; }

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

namespace expr_node {

struct Unary {
    UnaryOp op;
    Expr arg;
};
struct Binary {
    BinaryOp op;
    Expr lhs;
    Expr rhs;
};

} // namespace expr_node

struct Expr::Node {
    std::variant<expr_node::Number, expr_node::Var, expr_node::Unary, expr_node::Binary> v;
};

inline Expr Expr::number(double v)
{
    if (!std::isfinite(v))
        throw DomainError("non-finite literal");
    return Expr(std::make_shared<const Node>(Node{expr_node::Number{v}}));
}
inline Expr Expr::var() { return Expr(std::make_shared<const Node>(Node{expr_node::Var{}})); }
inline Expr Expr::unary(UnaryOp op, Expr arg)
{
    return Expr(std::make_shared<const Node>(Node{expr_node::Unary{op, std::move(arg)}}));
}
inline Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs)
{
    return Expr(std::make_shared<const Node>(Node{expr_node::Binary{op, std::move(lhs), std::move(rhs)}}));
}

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

/// Structural equality; numbers compare bitwise-equal as doubles.
inline bool operator==(const Expr& a, const Expr& b)
{
    using namespace expr_node;
    if (&a.node() == &b.node())
        return true;
    const auto& va = a.node().v;
    const auto& vb = b.node().v;
    if (va.index() != vb.index())
        return false;
    return std::visit(
        overloaded{
            [&](const Number& n) { return n.value == std::get<Number>(vb).value; },
            [&](const Var&) { return true; },
            [&](const Unary& u) {
                const auto& o = std::get<Unary>(vb);
                return u.op == o.op && u.arg == o.arg;
            },
            [&](const Binary& x) {
                const auto& o = std::get<Binary>(vb);
                return x.op == o.op && x.lhs == o.lhs && x.rhs == o.rhs;
            },
        },
        va);
}

inline bool depends_on_var(const Expr& e)
{
    using namespace expr_node;
    return std::visit(overloaded{
                          [](const Number&) { return false; },
                          [](const Var&) { return true; },
                          [](const Unary& u) { return depends_on_var(u.arg); },
                          [](const Binary& b) { return depends_on_var(b.lhs) || depends_on_var(b.rhs); },
                      },
                      e.node().v);
}

/// Value and first three w-derivatives of `e` at `omega`.
inline Jet3 eval_jet(const Expr& e, double omega)
{
    using namespace expr_node;
    return std::visit(
        overloaded{
            [](const Number& n) { return jet_const(n.value); },
            [&](const Var&) { return jet_var(omega); },
            [&](const Unary& u) {
                const Jet3 a = eval_jet(u.arg, omega);
                switch (u.op) {
                case UnaryOp::neg: return jet_elem(ElemFn::neg, a);
                case UnaryOp::sin: return jet_elem(ElemFn::sin, a);
                case UnaryOp::cos: return jet_elem(ElemFn::cos, a);
                case UnaryOp::sqrt: return jet_elem(ElemFn::sqrt, a);
                case UnaryOp::exp: return jet_elem(ElemFn::exp, a);
                case UnaryOp::ln: return jet_elem(ElemFn::ln, a);
                }
                return a;
            },
            [&](const Binary& b) {
                const Jet3 l = eval_jet(b.lhs, omega);
                if (b.op == BinaryOp::pow)
                    return jet_elem(ElemFn::pow_const, l, eval_jet(b.rhs, omega).v0);
                const Jet3 r = eval_jet(b.rhs, omega);
                switch (b.op) {
                case BinaryOp::add: return l + r;
                case BinaryOp::sub: return l - r;
                case BinaryOp::mul: return l * r;
                case BinaryOp::div: return l / r;
                case BinaryOp::pow: break;
                }
                return l;
            },
        },
        e.node().v);
}

inline double eval(const Expr& e, double omega) { return eval_jet(e, omega).v0; }

namespace detail {

inline const char* unary_name(UnaryOp op)
{
    switch (op) {
    case UnaryOp::neg: return "-";
    case UnaryOp::sin: return "sin";
    case UnaryOp::cos: return "cos";
    case UnaryOp::sqrt: return "sqrt";
    case UnaryOp::exp: return "exp";
    case UnaryOp::ln: return "ln";
    }
    return "?";
}

inline char binary_symbol(BinaryOp op)
{
    switch (op) {
    case BinaryOp::add: return '+';
    case BinaryOp::sub: return '-';
    case BinaryOp::mul: return '*';
    case BinaryOp::div: return '/';
    case BinaryOp::pow: return '^';
    }
    return '?';
}

inline std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline void print_to(std::string& out, const Expr& e)
{
    using namespace expr_node;
    std::visit(overloaded{
                   [&](const Number& n) {
                       // Negative literals never come out of the parser but may be
                       // built by hand; the parenthesized form reparses as neg(|x|).
                       if (std::signbit(n.value))
                           out += "(-" + format_double(-n.value) + ")";
                       else
                           out += format_double(n.value);
                   },
                   [&](const Var&) { out += 'w'; },
                   [&](const Unary& u) {
                       if (u.op == UnaryOp::neg) {
                           out += "(-";
                           print_to(out, u.arg);
                           out += ')';
                       } else {
                           out += unary_name(u.op);
                           out += '(';
                           print_to(out, u.arg);
                           out += ')';
                       }
                   },
                   [&](const Binary& b) {
                       out += '(';
                       print_to(out, b.lhs);
                       out += ' ';
                       out += binary_symbol(b.op);
                       out += ' ';
                       print_to(out, b.rhs);
                       out += ')';
                   },
               },
               e.node().v);
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Expr parse()
    {
        skip_ws();
        if (pos_ == s_.size())
            throw SyntaxError("expected expression, got end of input", pos_);
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            throw SyntaxError(std::string("unexpected '") + s_[pos_] + "', expected operator or end of input", pos_);
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r'))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            std::string got = pos_ < s_.size() ? std::string("'") + s_[pos_] + "'" : "end of input";
            throw SyntaxError(std::string("expected '") + c + "', got " + got, pos_);
        }
    }

    Expr parse_expr()
    {
        Expr lhs = parse_term();
        for (;;) {
            if (accept('+'))
                lhs = Expr::binary(BinaryOp::add, lhs, parse_term());
            else if (accept('-'))
                lhs = Expr::binary(BinaryOp::sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    Expr parse_term()
    {
        Expr lhs = parse_factor();
        for (;;) {
            if (accept('*'))
                lhs = Expr::binary(BinaryOp::mul, lhs, parse_factor());
            else if (accept('/'))
                lhs = Expr::binary(BinaryOp::div, lhs, parse_factor());
            else
                return lhs;
        }
    }

    Expr parse_factor()
    {
        if (accept('-'))
            return Expr::unary(UnaryOp::neg, parse_power());
        return parse_power();
    }

    Expr parse_power()
    {
        Expr base = parse_atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t exp_at = pos_;
            Expr exponent = parse_power();
            if (depends_on_var(exponent))
                throw SyntaxError("exponent must be constant", exp_at);
            return Expr::binary(BinaryOp::pow, base, exponent);
        }
        return base;
    }

    Expr parse_atom()
    {
        skip_ws();
        if (pos_ == s_.size())
            throw SyntaxError("expected expression, got end of input", pos_);
        const char c = s_[pos_];
        if ((c >= '0' && c <= '9') || c == '.')
            return parse_number();
        if (c == '(') {
            ++pos_;
            Expr inner = parse_expr();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_identifier();
        throw SyntaxError(std::string("unexpected '") + c + "', expected expression", pos_);
    }

    Expr parse_number()
    {
        double v = 0;
        const char* first = s_.data() + pos_;
        const char* last = s_.data() + s_.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec == std::errc::invalid_argument)
            throw SyntaxError("malformed number", pos_);
        if (ec == std::errc::result_out_of_range)
            throw SyntaxError("number out of range", pos_);
        pos_ += static_cast<std::size_t>(ptr - first);
        return Expr::number(v);
    }

    Expr parse_identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        const std::string_view name = s_.substr(start, pos_ - start);
        if (name == "w")
            return Expr::var();
        if (name == "pi")
            return Expr::number(std::numbers::pi);

        UnaryOp op;
        if (name == "sin") op = UnaryOp::sin;
        else if (name == "cos") op = UnaryOp::cos;
        else if (name == "sqrt") op = UnaryOp::sqrt;
        else if (name == "exp") op = UnaryOp::exp;
        else if (name == "ln") op = UnaryOp::ln;
        else throw UnknownIdentifier(std::string(name), start);

        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != '(')
            throw SyntaxError("expected '(' after function '" + std::string(name) + "'", pos_);
        ++pos_;
        Expr arg = parse_expr();
        expect(')');
        return Expr::unary(op, arg);
    }
};

} // namespace detail

/// Canonical, fully parenthesized rendering. Reparsing it yields an equal tree.
inline std::string to_string(const Expr& e)
{
    std::string out;
    detail::print_to(out, e);
    return out;
}

inline Expr parse_expr(std::string_view text)
{
    for (char c : text)
        if (static_cast<unsigned char>(c) > 127)
            throw SyntaxError("non-ASCII input", static_cast<std::size_t>(&c - text.data()));
    return detail::Parser(text).parse();
}

/// Parses and folds an expression that must not mention `w`.
inline double eval_constant(std::string_view text)
{
    Expr e = parse_expr(text);
    if (depends_on_var(e))
        throw SyntaxError("expected a constant expression", 0);
    return eval(e, 0.0);
}

} // namespace isoasym
