#include "mcfs/expression.hpp"
#include "mcfs/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace mcfs {

struct Expression::Node {
    enum class Kind { Number, Var, Add, Sub, Mul, Div, Pow, Neg, Call };
    Kind kind;
    double value = 0.0;                 // Number
    double (*fn)(double) = nullptr;     // Call
    std::shared_ptr<const Node> a, b;

    double eval(double t) const {
        switch (kind) {
        case Kind::Number: return value;
        case Kind::Var:    return t;
        case Kind::Add:    return a->eval(t) + b->eval(t);
        case Kind::Sub:    return a->eval(t) - b->eval(t);
        case Kind::Mul:    return a->eval(t) * b->eval(t);
        case Kind::Div:    return a->eval(t) / b->eval(t);
        case Kind::Pow:    return std::pow(a->eval(t), b->eval(t));
        case Kind::Neg:    return -a->eval(t);
        case Kind::Call:   return fn(a->eval(t));
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw config_error("expression parse error at position " +
                           std::to_string(pos_) + ": " + msg + " in '" + s_ + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    static NodePtr make(Expression::Node&& n) {
        return std::make_shared<Expression::Node>(std::move(n));
    }

    NodePtr expr() {
        NodePtr left = term();
        for (;;) {
            if (eat('+'))
                left = make({Expression::Node::Kind::Add, 0, nullptr, left, term()});
            else if (eat('-'))
                left = make({Expression::Node::Kind::Sub, 0, nullptr, left, term()});
            else
                return left;
        }
    }

    NodePtr term() {
        NodePtr left = factor();
        for (;;) {
            if (eat('*'))
                left = make({Expression::Node::Kind::Mul, 0, nullptr, left, factor()});
            else if (eat('/'))
                left = make({Expression::Node::Kind::Div, 0, nullptr, left, factor()});
            else
                return left;
        }
    }

    NodePtr factor() {
        if (eat('-'))
            return make({Expression::Node::Kind::Neg, 0, nullptr, factor(), nullptr});
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (eat('^'))
            return make({Expression::Node::Kind::Pow, 0, nullptr, base, factor()});
        return base;
    }

    NodePtr atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            NodePtr e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* start = s_.c_str() + pos_;
            char* end = nullptr;
            double v = std::strtod(start, &end);
            if (end == start)
                fail("bad number");
            pos_ += static_cast<size_t>(end - start);
            return make({Expression::Node::Kind::Number, v, nullptr, nullptr, nullptr});
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (name == "t")
                return make({Expression::Node::Kind::Var, 0, nullptr, nullptr, nullptr});
            double (*fn)(double) = nullptr;
            if (name == "exp") fn = [](double x) { return std::exp(x); };
            else if (name == "log") fn = [](double x) { return std::log(x); };
            else if (name == "sin") fn = [](double x) { return std::sin(x); };
            else if (name == "cos") fn = [](double x) { return std::cos(x); };
            else if (name == "sinh") fn = [](double x) { return std::sinh(x); };
            else if (name == "cosh") fn = [](double x) { return std::cosh(x); };
            else fail("unknown function '" + name + "'");
            if (!eat('('))
                fail("expected '(' after '" + name + "'");
            NodePtr arg = expr();
            if (!eat(')'))
                fail("expected ')'");
            return make({Expression::Node::Kind::Call, 0, fn, arg, nullptr});
        }
        fail("expected number, 't', function, or '('");
    }
};

} // namespace

Expression::Expression(const std::string& text)
    : root_(Parser(text).parse()), text_(text) {}

Expression::~Expression() = default;
Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;
Expression::Expression(const Expression&) = default;
Expression& Expression::operator=(const Expression&) = default;

double Expression::operator()(double t) const { return root_->eval(t); }

} // namespace mcfs
