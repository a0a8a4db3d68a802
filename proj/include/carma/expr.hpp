#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "carma/value.hpp"

namespace carma {

enum class ExprKind : std::uint8_t {
  Constant,
  Attribute,  // a        : the local store (receiver side inside action predicates)
  This,       // this.a   : the store of the component owning the term
  Variable,   // x        : bound by an input prefix, or a component parameter
  Global,     // global.a : environment store
  Sender,     // sender.a : sender store inside environment rules
  Receiver,   // receiver.a
  Count,      // count[pi]: components of the current collective satisfying pi
  InState,    // @A       : component behaviour has constant A at top level
  Unary,
  Binary,
  Call,       // built-in functions: min, max, abs, distance
};

enum class UnaryOp : std::uint8_t { Neg, Not };
enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Le, Gt, Ge, And, Or };

const char* unaryOpSymbol(UnaryOp op);
const char* binaryOpSymbol(BinaryOp op);
bool isBuiltinFunction(std::string_view name);

/// Immutable expression tree. Predicates are expressions of boolean type;
/// true and false play the role of the top and bottom predicates.
class Expr {
 public:
  Expr();  // the constant `true`

  static Expr constant(Value v);
  static Expr top() { return constant(Value::boolean(true)); }
  static Expr bottom() { return constant(Value::boolean(false)); }
  static Expr attribute(std::string name);
  static Expr self(std::string name);
  static Expr variable(std::string name);
  static Expr global(std::string name);
  static Expr sender(std::string name);
  static Expr receiver(std::string name);
  static Expr count(Expr predicate);
  static Expr inState(std::string constant);
  static Expr unary(UnaryOp op, Expr operand);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr call(std::string function, std::vector<Expr> args);

  ExprKind kind() const { return node_->kind; }
  const Value& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  UnaryOp unaryOp() const { return static_cast<UnaryOp>(node_->op); }
  BinaryOp binaryOp() const { return static_cast<BinaryOp>(node_->op); }
  std::span<const Expr> args() const { return node_->args; }
  const Expr& arg(std::size_t i) const { return node_->args[i]; }

  bool isConstant() const { return kind() == ExprKind::Constant; }
  bool isTop() const;
  bool isBottom() const;

  /// True iff some node satisfies the kind test; used for well-formedness checks.
  bool mentions(ExprKind k) const;

  std::uint64_t hash() const { return node_->hash; }
  bool sameNode(const Expr& other) const { return node_ == other.node_; }

  std::strong_ordering compare(const Expr& other) const;
  friend bool operator==(const Expr& a, const Expr& b) { return a.compare(b) == 0; }
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b) { return a.compare(b); }

 private:
  struct Node {
    ExprKind kind = ExprKind::Constant;
    std::uint8_t op = 0;
    Value value;
    std::string name;
    std::vector<Expr> args;
    std::uint64_t hash = 0;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Node n);

  std::shared_ptr<const Node> node_;
};

using Predicate = Expr;

}  // namespace carma
