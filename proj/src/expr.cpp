#include "deskcalc/expr.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <sstream>
#include <utility>
#include <variant>
#include <vector>

namespace deskcalc::expr {

namespace detail {

struct Constant {
    double value;
};
struct Variable {};
struct Negate {
    std::shared_ptr<const Node> child;
};
struct Binary {
    BinaryOp op;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
};
struct Call {
    Func fn;
    std::shared_ptr<const Node> arg;
};

struct Node {
    std::variant<Constant, Variable, Negate, Binary, Call> kind;
};

using NodePtr = std::shared_ptr<const Node>;

namespace {

NodePtr make(std::variant<Constant, Variable, Negate, Binary, Call> kind) {
    return std::make_shared<const Node>(Node{std::move(kind)});
}

const char* func_name(Func fn) {
    switch (fn) {
        case Func::Sqrt: return "sqrt";
        case Func::Exp: return "exp";
        case Func::Ln: return "ln";
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Abs: return "abs";
    }
    return "?";
}

// Rendering with minimal parentheses. Precedence levels: + - (1),
// * / (2), unary - (3), ^ (4), atoms (5).
int precedence(const Node& n) {
    return std::visit(
        [](const auto& k) -> int {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return k.value < 0 ? 3 : 5;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return 5;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return 3;
            } else if constexpr (std::is_same_v<T, Binary>) {
                switch (k.op) {
                    case BinaryOp::Add:
                    case BinaryOp::Sub: return 1;
                    case BinaryOp::Mul:
                    case BinaryOp::Div: return 2;
                    case BinaryOp::Pow: return 4;
                }
                return 1;
            } else {
                return 5;
            }
        },
        n.kind);
}

void render_node(const Node& n, std::ostringstream& out);

void render_child(const Node& child, int min_prec, std::ostringstream& out) {
    if (precedence(child) < min_prec) {
        out << '(';
        render_node(child, out);
        out << ')';
    } else {
        render_node(child, out);
    }
}

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void render_node(const Node& n, std::ostringstream& out) {
    std::visit(
        [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Constant>) {
                out << format_number(k.value);
            } else if constexpr (std::is_same_v<T, Variable>) {
                out << 'x';
            } else if constexpr (std::is_same_v<T, Negate>) {
                out << '-';
                render_child(*k.child, 4, out);
            } else if constexpr (std::is_same_v<T, Binary>) {
                switch (k.op) {
                    case BinaryOp::Add:
                        render_child(*k.left, 1, out);
                        out << " + ";
                        render_child(*k.right, 2, out);
                        break;
                    case BinaryOp::Sub:
                        render_child(*k.left, 1, out);
                        out << " - ";
                        render_child(*k.right, 2, out);
                        break;
                    case BinaryOp::Mul:
                        render_child(*k.left, 2, out);
                        out << "*";
                        render_child(*k.right, 3, out);
                        break;
                    case BinaryOp::Div:
                        render_child(*k.left, 2, out);
                        out << "/";
                        render_child(*k.right, 3, out);
                        break;
                    case BinaryOp::Pow:
                        // ^ is right-associative; parenthesize a left
                        // child that is itself any compound expression.
                        render_child(*k.left, 5, out);
                        out << "^";
                        render_child(*k.right, 3, out);
                        break;
                }
            } else {
                out << func_name(k.fn) << '(';
                render_node(*k.arg, out);
                out << ')';
            }
        },
        n.kind);
}

std::string render_ptr(const NodePtr& n) {
    std::ostringstream out;
    render_node(*n, out);
    return out.str();
}

[[noreturn]] void domain_error(const std::string& what, const NodePtr& sub) {
    throw EvalError(what, render_ptr(sub));
}

double eval_node(const NodePtr& n, double x);

double eval_pow(const Binary& b, const NodePtr& self, double x) {
    double base = eval_node(b.left, x);
    double exponent = eval_node(b.right, x);
    if (base == 0.0 && exponent < 0.0) {
        domain_error("zero raised to a negative power", self);
    }
    double r = std::pow(base, exponent);
    if (std::isnan(r)) {
        domain_error("negative base with non-integer exponent", self);
    }
    return r;
}

double eval_node(const NodePtr& n, double x) {
    return std::visit(
        [&](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return k.value;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return x;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -eval_node(k.child, x);
            } else if constexpr (std::is_same_v<T, Binary>) {
                switch (k.op) {
                    case BinaryOp::Add: return eval_node(k.left, x) + eval_node(k.right, x);
                    case BinaryOp::Sub: return eval_node(k.left, x) - eval_node(k.right, x);
                    case BinaryOp::Mul: return eval_node(k.left, x) * eval_node(k.right, x);
                    case BinaryOp::Div: {
                        double denom = eval_node(k.right, x);
                        if (denom == 0.0) domain_error("division by zero", n);
                        return eval_node(k.left, x) / denom;
                    }
                    case BinaryOp::Pow: return eval_pow(k, n, x);
                }
                return 0.0;
            } else {
                double v = eval_node(k.arg, x);
                switch (k.fn) {
                    case Func::Sqrt:
                        if (v < 0.0) domain_error("sqrt of a negative value", n);
                        return std::sqrt(v);
                    case Func::Exp: return std::exp(v);
                    case Func::Ln:
                        if (v <= 0.0) domain_error("ln of a non-positive value", n);
                        return std::log(v);
                    case Func::Sin: return std::sin(v);
                    case Func::Cos: return std::cos(v);
                    case Func::Abs: return std::fabs(v);
                }
                return 0.0;
            }
        },
        n->kind);
}

std::optional<double> const_value(const NodePtr& n) {
    if (const auto* c = std::get_if<Constant>(&n->kind)) return c->value;
    return std::nullopt;
}

NodePtr simplify_node(const NodePtr& n);

NodePtr simplify_binary(BinaryOp op, NodePtr l, NodePtr r) {
    auto lc = const_value(l);
    auto rc = const_value(r);
    if (lc && rc) {
        // Fold unless the fold itself is a domain error; then leave the
        // node alone so evaluation reports it.
        switch (op) {
            case BinaryOp::Add: return make(Constant{*lc + *rc});
            case BinaryOp::Sub: return make(Constant{*lc - *rc});
            case BinaryOp::Mul: return make(Constant{*lc * *rc});
            case BinaryOp::Div:
                if (*rc != 0.0) return make(Constant{*lc / *rc});
                break;
            case BinaryOp::Pow: {
                double v = std::pow(*lc, *rc);
                if (!std::isnan(v) && !(*lc == 0.0 && *rc < 0.0)) return make(Constant{v});
                break;
            }
        }
    }
    switch (op) {
        case BinaryOp::Add:
            if (lc && *lc == 0.0) return r;
            if (rc && *rc == 0.0) return l;
            break;
        case BinaryOp::Sub:
            if (rc && *rc == 0.0) return l;
            if (lc && *lc == 0.0) return simplify_node(make(Negate{r}));
            break;
        case BinaryOp::Mul:
            if ((lc && *lc == 0.0) || (rc && *rc == 0.0)) return make(Constant{0.0});
            if (lc && *lc == 1.0) return r;
            if (rc && *rc == 1.0) return l;
            break;
        case BinaryOp::Div:
            if (lc && *lc == 0.0) return make(Constant{0.0});
            if (rc && *rc == 1.0) return l;
            break;
        case BinaryOp::Pow:
            if (rc && *rc == 1.0) return l;
            if (rc && *rc == 0.0) return make(Constant{1.0});  // caveat: undefined at base 0
            break;
    }
    return make(Binary{op, std::move(l), std::move(r)});
}

NodePtr simplify_node(const NodePtr& n) {
    return std::visit(
        [&](const auto& k) -> NodePtr {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Constant> || std::is_same_v<T, Variable>) {
                return n;
            } else if constexpr (std::is_same_v<T, Negate>) {
                NodePtr c = simplify_node(k.child);
                if (auto v = const_value(c)) return make(Constant{-*v});
                if (const auto* inner = std::get_if<Negate>(&c->kind)) return inner->child;
                return make(Negate{std::move(c)});
            } else if constexpr (std::is_same_v<T, Binary>) {
                return simplify_binary(k.op, simplify_node(k.left), simplify_node(k.right));
            } else {
                NodePtr a = simplify_node(k.arg);
                if (auto v = const_value(a)) {
                    switch (k.fn) {
                        case Func::Sqrt:
                            if (*v >= 0.0) return make(Constant{std::sqrt(*v)});
                            break;
                        case Func::Exp: return make(Constant{std::exp(*v)});
                        case Func::Ln:
                            if (*v > 0.0) return make(Constant{std::log(*v)});
                            break;
                        case Func::Sin: return make(Constant{std::sin(*v)});
                        case Func::Cos: return make(Constant{std::cos(*v)});
                        case Func::Abs: return make(Constant{std::fabs(*v)});
                    }
                }
                return make(Call{k.fn, std::move(a)});
            }
        },
        n->kind);
}

NodePtr kconst(double v) { return make(Constant{v}); }
NodePtr bin(BinaryOp op, NodePtr l, NodePtr r) { return make(Binary{op, std::move(l), std::move(r)}); }
NodePtr fn(Func f, NodePtr a) { return make(Call{f, std::move(a)}); }

NodePtr derive_node(const NodePtr& n) {
    return std::visit(
        [&](const auto& k) -> NodePtr {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return kconst(0.0);
            } else if constexpr (std::is_same_v<T, Variable>) {
                return kconst(1.0);
            } else if constexpr (std::is_same_v<T, Negate>) {
                return make(Negate{derive_node(k.child)});
            } else if constexpr (std::is_same_v<T, Binary>) {
                NodePtr u = k.left;
                NodePtr v = k.right;
                NodePtr du = derive_node(u);
                NodePtr dv = derive_node(v);
                switch (k.op) {
                    case BinaryOp::Add: return bin(BinaryOp::Add, du, dv);
                    case BinaryOp::Sub: return bin(BinaryOp::Sub, du, dv);
                    case BinaryOp::Mul:
                        return bin(BinaryOp::Add, bin(BinaryOp::Mul, du, v),
                                   bin(BinaryOp::Mul, u, dv));
                    case BinaryOp::Div:
                        return bin(BinaryOp::Div,
                                   bin(BinaryOp::Sub, bin(BinaryOp::Mul, du, v),
                                       bin(BinaryOp::Mul, u, dv)),
                                   bin(BinaryOp::Pow, v, kconst(2.0)));
                    case BinaryOp::Pow:
                        if (auto c = const_value(v)) {
                            // d(u^c) = c * u^(c-1) * u'
                            return bin(BinaryOp::Mul,
                                       bin(BinaryOp::Mul, kconst(*c),
                                           bin(BinaryOp::Pow, u, kconst(*c - 1.0))),
                                       du);
                        }
                        // General exponent: u^v = exp(v ln u), so
                        // d = u^v * (v' ln u + v u'/u).
                        return bin(BinaryOp::Mul, bin(BinaryOp::Pow, u, v),
                                   bin(BinaryOp::Add,
                                       bin(BinaryOp::Mul, dv, fn(Func::Ln, u)),
                                       bin(BinaryOp::Div, bin(BinaryOp::Mul, v, du), u)));
                }
                return kconst(0.0);
            } else {
                NodePtr u = k.arg;
                NodePtr du = derive_node(u);
                switch (k.fn) {
                    case Func::Sqrt:
                        return bin(BinaryOp::Div, du,
                                   bin(BinaryOp::Mul, kconst(2.0), fn(Func::Sqrt, u)));
                    case Func::Exp: return bin(BinaryOp::Mul, du, fn(Func::Exp, u));
                    case Func::Ln: return bin(BinaryOp::Div, du, u);
                    case Func::Sin: return bin(BinaryOp::Mul, du, fn(Func::Cos, u));
                    case Func::Cos:
                        return make(Negate{bin(BinaryOp::Mul, du, fn(Func::Sin, u))});
                    case Func::Abs:
                        // sign(u) * u', undefined at u = 0
                        return bin(BinaryOp::Mul, bin(BinaryOp::Div, u, fn(Func::Abs, u)), du);
                }
                return kconst(0.0);
            }
        },
        n->kind);
}

bool same_node(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (a->kind.index() != b->kind.index()) return false;
    return std::visit(
        [&](const auto& ka) -> bool {
            using T = std::decay_t<decltype(ka)>;
            const auto& kb = std::get<T>(b->kind);
            if constexpr (std::is_same_v<T, Constant>) {
                return ka.value == kb.value;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return true;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return same_node(ka.child, kb.child);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return ka.op == kb.op && same_node(ka.left, kb.left) &&
                       same_node(ka.right, kb.right);
            } else {
                return ka.fn == kb.fn && same_node(ka.arg, kb.arg);
            }
        },
        a->kind);
}

}  // namespace
}  // namespace detail

using detail::NodePtr;

Expr Expr::constant(double value) { return Expr(detail::kconst(value)); }
Expr Expr::variable() { return Expr(detail::make(detail::Variable{})); }
Expr Expr::negate(Expr child) { return Expr(detail::make(detail::Negate{std::move(child.node_)})); }
Expr Expr::binary(BinaryOp op, Expr left, Expr right) {
    return Expr(detail::bin(op, std::move(left.node_), std::move(right.node_)));
}
Expr Expr::call(Func f, Expr arg) { return Expr(detail::fn(f, std::move(arg.node_))); }

double Expr::evaluate(double x) const { return detail::eval_node(node_, x); }

Expr Expr::derivative() const { return Expr(detail::simplify_node(detail::derive_node(node_))); }

Expr Expr::simplify() const { return Expr(detail::simplify_node(node_)); }

std::string Expr::render() const { return detail::render_ptr(node_); }

bool Expr::is_constant() const {
    return std::holds_alternative<detail::Constant>(node_->kind);
}

double Expr::constant_value() const {
    return std::get<detail::Constant>(node_->kind).value;
}

bool Expr::same_tree(const Expr& other) const { return detail::same_node(node_, other.node_); }

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse_all() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty expression", 0);
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ < text_.size()) {
            throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
        }
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parse_sum() {
        NodePtr left = parse_term();
        for (;;) {
            if (consume('+')) {
                left = detail::bin(BinaryOp::Add, left, parse_term());
            } else if (consume('-')) {
                left = detail::bin(BinaryOp::Sub, left, parse_term());
            } else {
                return left;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr left = parse_unary();
        for (;;) {
            if (consume('*')) {
                left = detail::bin(BinaryOp::Mul, left, parse_unary());
            } else if (consume('/')) {
                left = detail::bin(BinaryOp::Div, left, parse_unary());
            } else {
                return left;
            }
        }
    }

    NodePtr parse_unary() {
        if (consume('-')) {
            return detail::make(detail::Negate{parse_unary()});
        }
        return parse_power();
    }

    // Right-associative: 2^3^2 = 2^(3^2). The exponent re-enters at the
    // unary level so 2^-3 parses.
    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (consume('^')) {
            return detail::bin(BinaryOp::Pow, base, parse_unary());
        }
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return parse_ident();
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            ++pos_;
        }
        // scientific notation
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    ++pos_;
                }
            } else {
                pos_ = mark;  // 'e' belonged to something else
            }
        }
        std::string tok(text_.substr(start, pos_ - start));
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) throw ParseError("malformed number '" + tok + "'", start);
            return detail::kconst(v);
        } catch (const std::logic_error&) {
            throw ParseError("malformed number '" + tok + "'", start);
        }
    }

    NodePtr parse_ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        std::string name(text_.substr(start, pos_ - start));
        if (name == "x") return detail::make(detail::Variable{});
        Func f;
        if (name == "sqrt") f = Func::Sqrt;
        else if (name == "exp") f = Func::Exp;
        else if (name == "ln") f = Func::Ln;
        else if (name == "sin") f = Func::Sin;
        else if (name == "cos") f = Func::Cos;
        else if (name == "abs") f = Func::Abs;
        else if (peek() == '(') throw ParseError("unknown function '" + name + "'", start);
        else throw ParseError("unknown identifier '" + name + "'", start);
        if (!consume('(')) throw ParseError("expected '(' after '" + name + "'", pos_);
        NodePtr arg = parse_sum();
        if (!consume(')')) throw ParseError("expected ')'", pos_);
        return detail::fn(f, arg);
    }
};

}  // namespace

Expr parse(std::string_view text) { return Expr(Parser(text).parse_all()); }

}  // namespace deskcalc::expr
