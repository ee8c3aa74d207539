#include "sliceconf/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace sliceconf {

struct Expression::Node {
  enum class Op { literal, var, add, sub, mul, div, neg, call } op;
  double value = 0.0;
  std::string name;  // function name for calls
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_space();
    if (pos_ != text_.size())
      fail(ErrorKind::config, "expression: trailing input at position " +
                                  std::to_string(pos_) + " in '" + text_ + "'");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(uc(text_[pos_]))) ++pos_;
  }
  static unsigned char uc(char c) { return static_cast<unsigned char>(c); }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (eat('+'))
        lhs = make(Node::Op::add, lhs, term());
      else if (eat('-'))
        lhs = make(Node::Op::sub, lhs, term());
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (eat('*'))
        lhs = make(Node::Op::mul, lhs, unary());
      else if (eat('/'))
        lhs = make(Node::Op::div, lhs, unary());
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (eat('-')) return make(Node::Op::neg, unary());
    return atom();
  }

  NodePtr atom() {
    skip_space();
    if (pos_ >= text_.size())
      fail(ErrorKind::config, "expression: unexpected end of '" + text_ + "'");
    const char c = text_[pos_];
    if (eat('(')) {
      NodePtr e = expr();
      if (!eat(')'))
        fail(ErrorKind::config, "expression: missing ')' in '" + text_ + "'");
      return e;
    }
    if (std::isdigit(uc(c)) || c == '.') {
      const char* start = text_.c_str() + pos_;
      char* end = nullptr;
      const double v = std::strtod(start, &end);
      pos_ += end - start;
      auto n = std::make_shared<Node>();
      n->op = Node::Op::literal;
      n->value = v;
      return n;
    }
    if (std::isalpha(uc(c))) {
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(uc(text_[pos_])) || text_[pos_] == '_'))
        ident += text_[pos_++];
      if (ident == "chi") return make(Node::Op::var);
      static const char* fns[] = {"sin", "cos",  "sinh", "cosh",
                                  "exp", "log", "pow"};
      bool known = false;
      for (const char* f : fns) known = known || ident == f;
      if (!known)
        fail(ErrorKind::config,
             "expression: unknown identifier '" + ident + "'");
      if (!eat('('))
        fail(ErrorKind::config,
             "expression: expected '(' after '" + ident + "'");
      NodePtr a = expr();
      NodePtr b;
      if (ident == "pow") {
        if (!eat(','))
          fail(ErrorKind::config, "expression: pow needs two arguments");
        b = expr();
      }
      if (!eat(')'))
        fail(ErrorKind::config, "expression: missing ')' in '" + text_ + "'");
      auto n = std::make_shared<Node>();
      n->op = Node::Op::call;
      n->name = ident;
      n->lhs = a;
      n->rhs = b;
      return n;
    }
    fail(ErrorKind::config, std::string("expression: unexpected character '") +
                                c + "' in '" + text_ + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

double eval_node(const Node& n, double chi) {
  switch (n.op) {
    case Node::Op::literal: return n.value;
    case Node::Op::var: return chi;
    case Node::Op::add: return eval_node(*n.lhs, chi) + eval_node(*n.rhs, chi);
    case Node::Op::sub: return eval_node(*n.lhs, chi) - eval_node(*n.rhs, chi);
    case Node::Op::mul: return eval_node(*n.lhs, chi) * eval_node(*n.rhs, chi);
    case Node::Op::div: return eval_node(*n.lhs, chi) / eval_node(*n.rhs, chi);
    case Node::Op::neg: return -eval_node(*n.lhs, chi);
    case Node::Op::call: {
      const double a = eval_node(*n.lhs, chi);
      if (n.name == "sin") return std::sin(a);
      if (n.name == "cos") return std::cos(a);
      if (n.name == "sinh") return std::sinh(a);
      if (n.name == "cosh") return std::cosh(a);
      if (n.name == "exp") return std::exp(a);
      if (n.name == "log") return std::log(a);
      return std::pow(a, eval_node(*n.rhs, chi));
    }
  }
  return 0.0;
}

}  // namespace

Expression::Expression(std::shared_ptr<const Node> root)
    : root_(std::move(root)) {}

Expression Expression::parse(const std::string& text) {
  return Expression(Parser(text).run());
}

double Expression::eval(double chi) const { return eval_node(*root_, chi); }

Profile Expression::sample(const Grid& grid) const {
  std::vector<double> v(grid.n());
  for (int i = 0; i < grid.n(); ++i) v[i] = eval(grid.chi(i));
  return Profile::from_values(grid, std::move(v));
}

}  // namespace sliceconf
