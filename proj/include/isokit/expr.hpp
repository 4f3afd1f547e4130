#pragma once

#include <memory>
#include <string>

namespace isokit {

/// A parsed arithmetic expression in the variable t. Grammar: numeric
/// literals, t, + - * /, unary minus, parentheses, and the functions
/// sin, cos, sinh, cosh, exp, pow(a, b).
class Expr {
public:
    static Expr parse(const std::string& source);  // throws ValidationError

    double operator()(double t) const;
    const std::string& source() const { return source_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string source_;
};

}  // namespace isokit
