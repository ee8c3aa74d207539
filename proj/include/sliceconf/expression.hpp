#ifndef SLICECONF_EXPRESSION_HPP
#define SLICECONF_EXPRESSION_HPP

#include <memory>
#include <string>

#include "sliceconf/profile.hpp"

namespace sliceconf {

/// Parsed closed-form expression in the variable chi.  Grammar: numeric
/// literals, chi, + - * /, unary minus, parentheses, pow(a, b) and the
/// functions sin, cos, sinh, cosh, exp, log.
class Expression {
 public:
  static Expression parse(const std::string& text);
  double eval(double chi) const;
  Profile sample(const Grid& grid) const;

  struct Node;

 private:
  explicit Expression(std::shared_ptr<const Node> root);
  std::shared_ptr<const Node> root_;
};

}  // namespace sliceconf

#endif
