#include "carma/expr.hpp"

#include "carma/hashing.hpp"

namespace carma {

const char* unaryOpSymbol(UnaryOp op) { return op == UnaryOp::Neg ? "-" : "!"; }

const char* binaryOpSymbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

bool isBuiltinFunction(std::string_view name) {
  return name == "min" || name == "max" || name == "abs" || name == "distance";
}

Expr Expr::make(Node n) {
  std::uint64_t h = hashing::combine(hashing::mix(static_cast<std::uint64_t>(n.kind)), n.op);
  h = hashing::combine(h, n.value.hash());
  h = hashing::combine(h, hashing::bytes(n.name));
  for (const auto& a : n.args) h = hashing::combine(h, a.hash());
  n.hash = h;
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr::Expr() {
  static const Expr t = constant(Value::boolean(true));
  node_ = t.node_;
}

Expr Expr::constant(Value v) {
  Node n;
  n.kind = ExprKind::Constant;
  n.value = std::move(v);
  return make(std::move(n));
}

#define CARMA_NAMED_EXPR(FN, KIND)   \
  Expr Expr::FN(std::string name) {  \
    Node n;                          \
    n.kind = ExprKind::KIND;         \
    n.name = std::move(name);        \
    return make(std::move(n));       \
  }
CARMA_NAMED_EXPR(attribute, Attribute)
CARMA_NAMED_EXPR(self, This)
CARMA_NAMED_EXPR(variable, Variable)
CARMA_NAMED_EXPR(global, Global)
CARMA_NAMED_EXPR(sender, Sender)
CARMA_NAMED_EXPR(receiver, Receiver)
CARMA_NAMED_EXPR(inState, InState)
#undef CARMA_NAMED_EXPR

Expr Expr::count(Expr predicate) {
  Node n;
  n.kind = ExprKind::Count;
  n.args.push_back(std::move(predicate));
  return make(std::move(n));
}

Expr Expr::unary(UnaryOp op, Expr operand) {
  Node n;
  n.kind = ExprKind::Unary;
  n.op = static_cast<std::uint8_t>(op);
  n.args.push_back(std::move(operand));
  return make(std::move(n));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  Node n;
  n.kind = ExprKind::Binary;
  n.op = static_cast<std::uint8_t>(op);
  n.args.push_back(std::move(lhs));
  n.args.push_back(std::move(rhs));
  return make(std::move(n));
}

Expr Expr::call(std::string function, std::vector<Expr> args) {
  Node n;
  n.kind = ExprKind::Call;
  n.name = std::move(function);
  n.args = std::move(args);
  return make(std::move(n));
}

bool Expr::isTop() const {
  return isConstant() && value().kind() == Value::Kind::Boolean && value().asBoolean();
}

bool Expr::isBottom() const {
  return isConstant() && value().kind() == Value::Kind::Boolean && !value().asBoolean();
}

bool Expr::mentions(ExprKind k) const {
  if (kind() == k) return true;
  for (const auto& a : args()) {
    if (a.mentions(k)) return true;
  }
  return false;
}

std::strong_ordering Expr::compare(const Expr& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.op <=> b.op; c != 0) return c;
  if (auto c = a.value.compare(b.value); c != 0) return c;
  if (auto c = a.name.compare(b.name) <=> 0; c != 0) return c;
  for (std::size_t i = 0; i < a.args.size() && i < b.args.size(); ++i) {
    if (auto c = a.args[i].compare(b.args[i]); c != 0) return c;
  }
  return a.args.size() <=> b.args.size();
}

}  // namespace carma
