#include "credal/expression.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

namespace credal {

struct Expression::Node {
  enum class Kind { Constant, Coordinate, Negate, Add, Subtract, Multiply, Divide, Min, Max, Abs, Square };
  Kind kind;
  Rational value;
  std::size_t category = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = Node::Kind;

NodePtr make(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
public:
  Parser(std::string_view text, const CategorySpace& space) : text_(text), space_(space) {}

  NodePtr parse() {
    auto root = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("expression '" + std::string(text_) + "' at column " +
                          std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) lhs = make(Kind::Add, lhs, term());
      else if (accept('-')) lhs = make(Kind::Subtract, lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    auto lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make(Kind::Multiply, lhs, unary());
      else if (accept('/')) lhs = make(Kind::Divide, lhs, unary());
      else return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Kind::Negate, unary());
    return atom();
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  NodePtr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      auto n = std::make_shared<Node>();
      n->kind = Kind::Constant;
      n->value = parse_rational(text_.substr(start, pos_ - start));
      return n;
    }
    if (accept('(')) {
      auto inner = expr();
      expect(')');
      return inner;
    }
    auto name = identifier();
    if (name.empty()) fail("unexpected '" + std::string(1, c) + "'");
    if (name == "theta") {
      expect('.');
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             std::string_view("+-*/(),").find(text_[pos_]) == std::string_view::npos)
        ++pos_;
      auto label = text_.substr(start, pos_ - start);
      if (!space_.contains(label)) fail("unknown category '" + std::string(label) + "'");
      auto n = std::make_shared<Node>();
      n->kind = Kind::Coordinate;
      n->category = space_.index_of(label);
      return n;
    }
    if (name == "min" || name == "max") {
      expect('(');
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(')');
      return make(name == "min" ? Kind::Min : Kind::Max, a, b);
    }
    if (name == "abs" || name == "sq") {
      expect('(');
      auto a = expr();
      expect(')');
      return make(name == "abs" ? Kind::Abs : Kind::Square, a);
    }
    fail("unknown function '" + name + "'");
  }

  std::string_view text_;
  const CategorySpace& space_;
  std::size_t pos_ = 0;
};

Rational evaluate_node(const Node& n, const SimplexPoint& theta) {
  switch (n.kind) {
    case Kind::Constant: return n.value;
    case Kind::Coordinate: return theta[n.category];
    case Kind::Negate: return -evaluate_node(*n.lhs, theta);
    case Kind::Add: return evaluate_node(*n.lhs, theta) + evaluate_node(*n.rhs, theta);
    case Kind::Subtract: return evaluate_node(*n.lhs, theta) - evaluate_node(*n.rhs, theta);
    case Kind::Multiply: return evaluate_node(*n.lhs, theta) * evaluate_node(*n.rhs, theta);
    case Kind::Divide: {
      Rational d = evaluate_node(*n.rhs, theta);
      if (d == 0) throw EvaluationError("division by zero");
      return evaluate_node(*n.lhs, theta) / d;
    }
    case Kind::Min: return std::min(evaluate_node(*n.lhs, theta), evaluate_node(*n.rhs, theta));
    case Kind::Max: return std::max(evaluate_node(*n.lhs, theta), evaluate_node(*n.rhs, theta));
    case Kind::Abs: return abs(evaluate_node(*n.lhs, theta));
    case Kind::Square: {
      Rational v = evaluate_node(*n.lhs, theta);
      return v * v;
    }
  }
  throw Error("corrupt expression node");
}

// Sparse polynomial: exponent vector -> coefficient, zero terms removed.
using Poly = std::map<std::vector<unsigned>, Rational>;

Poly poly_constant(const Rational& c, std::size_t cats) {
  Poly p;
  if (c != 0) p[std::vector<unsigned>(cats, 0)] = c;
  return p;
}

std::optional<Rational> as_constant(const Poly& p) {
  if (p.empty()) return Rational(0);
  if (p.size() == 1) {
    const auto& [e, c] = *p.begin();
    bool zero = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    if (zero) return c;
  }
  return std::nullopt;
}

Poly poly_add(Poly a, const Poly& b, const Rational& scale) {
  for (const auto& [e, c] : b) {
    a[e] += scale * c;
    if (a[e] == 0) a.erase(e);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
      if (out[e] == 0) out.erase(e);
    }
  return out;
}

std::optional<Poly> to_poly(const Node& n, std::size_t cats) {
  auto both = [&]() -> std::optional<std::pair<Poly, Poly>> {
    auto a = to_poly(*n.lhs, cats);
    auto b = to_poly(*n.rhs, cats);
    if (!a || !b) return std::nullopt;
    return std::make_pair(std::move(*a), std::move(*b));
  };
  switch (n.kind) {
    case Kind::Constant: return poly_constant(n.value, cats);
    case Kind::Coordinate: {
      std::vector<unsigned> e(cats, 0);
      e[n.category] = 1;
      return Poly{{e, Rational(1)}};
    }
    case Kind::Negate: {
      auto a = to_poly(*n.lhs, cats);
      if (!a) return std::nullopt;
      return poly_add(Poly{}, *a, Rational(-1));
    }
    case Kind::Add:
    case Kind::Subtract: {
      auto ab = both();
      if (!ab) return std::nullopt;
      return poly_add(ab->first, ab->second, Rational(n.kind == Kind::Add ? 1 : -1));
    }
    case Kind::Multiply: {
      auto ab = both();
      if (!ab) return std::nullopt;
      return poly_mul(ab->first, ab->second);
    }
    case Kind::Square: {
      auto a = to_poly(*n.lhs, cats);
      if (!a) return std::nullopt;
      return poly_mul(*a, *a);
    }
    case Kind::Divide: {
      auto ab = both();
      if (!ab) return std::nullopt;
      auto d = as_constant(ab->second);
      if (!d) return std::nullopt;
      if (*d == 0) throw EvaluationError("division by zero");
      return poly_add(Poly{}, ab->first, Rational(1 / *d));
    }
    case Kind::Min:
    case Kind::Max: {
      auto ab = both();
      if (!ab) return std::nullopt;
      auto a = as_constant(ab->first), b = as_constant(ab->second);
      if (!a || !b) return std::nullopt;
      return poly_constant(n.kind == Kind::Min ? std::min(*a, *b) : std::max(*a, *b), cats);
    }
    case Kind::Abs: {
      auto a = to_poly(*n.lhs, cats);
      if (!a) return std::nullopt;
      auto c = as_constant(*a);
      if (!c) return std::nullopt;
      return poly_constant(abs(*c), cats);
    }
  }
  return std::nullopt;
}

}  // namespace

Expression::Expression(std::string text, CategorySpace space, std::shared_ptr<const Node> root)
    : text_(std::move(text)), space_(std::move(space)), root_(std::move(root)) {}

Expression Expression::parse(std::string_view text, const CategorySpace& space) {
  auto root = Parser(text, space).parse();
  return Expression(std::string(text), space, std::move(root));
}

Rational Expression::evaluate(const SimplexPoint& theta) const {
  if (!(theta.space() == space_))
    throw DomainMismatchError("expression evaluated on a different category space");
  return evaluate_node(*root_, theta);
}

SimplexFunction Expression::function() const {
  return [self = *this](const SimplexPoint& theta) { return self.evaluate(theta); };
}

std::optional<MonomialForm> Expression::as_polynomial() const {
  auto p = to_poly(*root_, space_.size());
  if (!p) return std::nullopt;
  std::vector<MonomialTerm> terms;
  for (auto& [e, c] : *p) terms.push_back({e, c});
  return MonomialForm(space_, std::move(terms));
}

BernsteinPoly bernstein_approximant(const Expression& h, unsigned degree) {
  return bernstein_approximant(h.function(), h.space(), degree);
}

}  // namespace credal
