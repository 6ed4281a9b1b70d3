#ifndef MCFS_EXPRESSION_HPP
#define MCFS_EXPRESSION_HPP

#include <memory>
#include <string>

namespace mcfs {

// A scalar function of one variable t, parsed from a small arithmetic
// grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?            (right associative)
//   atom   := number | 't' | name '(' expr ')' | '(' expr ')'
//   name   := exp | log | sin | cos | sinh | cosh
//
// Numbers are ordinary decimal literals (1, 0.5, 2e-3). Whitespace is
// ignored. Parse errors raise config_error with a position message.
class Expression {
public:
    explicit Expression(const std::string& text);
    ~Expression();
    Expression(Expression&&) noexcept;
    Expression& operator=(Expression&&) noexcept;
    Expression(const Expression&);
    Expression& operator=(const Expression&);

    double operator()(double t) const;
    const std::string& text() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

} // namespace mcfs

#endif
