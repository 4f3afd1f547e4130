#include "isokit/expr.hpp"

#include "isokit/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

namespace isokit {

struct Expr::Node {
    enum class Op { Const, Var, Neg, Add, Sub, Mul, Div, Sin, Cos, Sinh, Cosh, Exp, Pow };
    Op op = Op::Const;
    double value = 0.0;
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double value = 0.0) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->value = value;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    NodePtr run() {
        NodePtr e = expression();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorCode::ValidationError,
                    "expression error at position " + std::to_string(pos_) + ": " + what,
                    src_);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr expression() {
        NodePtr lhs = term();
        for (;;) {
            if (consume('+')) lhs = make(Node::Op::Add, lhs, term());
            else if (consume('-')) lhs = make(Node::Op::Sub, lhs, term());
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            if (consume('*')) lhs = make(Node::Op::Mul, lhs, factor());
            else if (consume('/')) lhs = make(Node::Op::Div, lhs, factor());
            else return lhs;
        }
    }

    NodePtr factor() {
        if (consume('-')) return make(Node::Op::Neg, factor());
        if (consume('+')) return factor();
        return primary();
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        if (consume('(')) {
            NodePtr e = expression();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr number() {
        const char* begin = src_.data() + pos_;
        const char* end = src_.data() + src_.size();
        double value = 0.0;
        auto res = std::from_chars(begin, end, value);
        if (res.ec != std::errc{}) fail("malformed number");
        pos_ += static_cast<std::size_t>(res.ptr - begin);
        return make(Node::Op::Const, nullptr, nullptr, value);
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name = src_.substr(start, pos_ - start);
        if (name == "t") return make(Node::Op::Var);
        if (name == "pi") return make(Node::Op::Const, nullptr, nullptr, M_PI);

        Node::Op op;
        if (name == "sin") op = Node::Op::Sin;
        else if (name == "cos") op = Node::Op::Cos;
        else if (name == "sinh") op = Node::Op::Sinh;
        else if (name == "cosh") op = Node::Op::Cosh;
        else if (name == "exp") op = Node::Op::Exp;
        else if (name == "pow") op = Node::Op::Pow;
        else fail("unknown identifier '" + name + "'");

        if (!consume('(')) fail("expected '(' after function name");
        NodePtr first = expression();
        NodePtr second;
        if (op == Node::Op::Pow) {
            if (!consume(',')) fail("pow expects two arguments");
            second = expression();
        }
        if (!consume(')')) fail("expected ')'");
        return make(op, first, second);
    }
};

double eval(const Node* n, double t) {
    switch (n->op) {
        case Node::Op::Const: return n->value;
        case Node::Op::Var: return t;
        case Node::Op::Neg: return -eval(n->lhs.get(), t);
        case Node::Op::Add: return eval(n->lhs.get(), t) + eval(n->rhs.get(), t);
        case Node::Op::Sub: return eval(n->lhs.get(), t) - eval(n->rhs.get(), t);
        case Node::Op::Mul: return eval(n->lhs.get(), t) * eval(n->rhs.get(), t);
        case Node::Op::Div: return eval(n->lhs.get(), t) / eval(n->rhs.get(), t);
        case Node::Op::Sin: return std::sin(eval(n->lhs.get(), t));
        case Node::Op::Cos: return std::cos(eval(n->lhs.get(), t));
        case Node::Op::Sinh: return std::sinh(eval(n->lhs.get(), t));
        case Node::Op::Cosh: return std::cosh(eval(n->lhs.get(), t));
        case Node::Op::Exp: return std::exp(eval(n->lhs.get(), t));
        case Node::Op::Pow: return std::pow(eval(n->lhs.get(), t), eval(n->rhs.get(), t));
    }
    return 0.0;
}

}  // namespace

Expr Expr::parse(const std::string& source) {
    Expr e;
    e.source_ = source;
    e.root_ = Parser(source).run();
    return e;
}

double Expr::operator()(double t) const { return eval(root_.get(), t); }

}  // namespace isokit
