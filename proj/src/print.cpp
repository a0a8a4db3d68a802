#include "carma/print.hpp"

#include <cmath>
#include <span>

namespace carma {

namespace {

enum Level { kOr = 1, kAnd, kCmp, kAdd, kMul, kUnary, kPrimary };

int binaryLevel(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return kOr;
    case BinaryOp::And: return kAnd;
    case BinaryOp::Eq:
    case BinaryOp::Ne:
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: return kCmp;
    case BinaryOp::Add:
    case BinaryOp::Sub: return kAdd;
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: return kMul;
  }
  return kPrimary;
}

int exprLevel(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Binary: return binaryLevel(e.binaryOp());
    case ExprKind::Unary: return kUnary;
    case ExprKind::Constant: {
      // A negative literal reads back as unary minus applied to a literal.
      const Value& v = e.value();
      if (v.kind() == Value::Kind::Integer && v.asInteger() < 0) return kUnary;
      if (v.kind() == Value::Kind::Real && std::signbit(v.asReal())) return kUnary;
      return kPrimary;
    }
    default: return kPrimary;
  }
}

void printExprAt(std::string& out, const Expr& e, int level);

void printArgs(std::string& out, std::span<const Expr> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    printExprAt(out, args[i], kOr);
  }
}

void printExprAt(std::string& out, const Expr& e, int level) {
  bool parens = exprLevel(e) < level;
  if (parens) out += '(';
  switch (e.kind()) {
    case ExprKind::Constant: out += e.value().toString(); break;
    case ExprKind::Attribute:
    case ExprKind::Variable: out += e.name(); break;
    case ExprKind::This: out += "this." + e.name(); break;
    case ExprKind::Global: out += "global." + e.name(); break;
    case ExprKind::Sender: out += "sender." + e.name(); break;
    case ExprKind::Receiver: out += "receiver." + e.name(); break;
    case ExprKind::InState: out += "@" + e.name(); break;
    case ExprKind::Count:
      out += "count[";
      printExprAt(out, e.arg(0), kOr);
      out += ']';
      break;
    case ExprKind::Call:
      out += e.name();
      out += '(';
      printArgs(out, e.args());
      out += ')';
      break;
    case ExprKind::Unary: {
      out += unaryOpSymbol(e.unaryOp());
      const Expr& a = e.arg(0);
      // Keep `-(1)` distinct from the literal -1.
      bool literal = a.isConstant() && a.value().isNumeric();
      printExprAt(out, a, literal ? kPrimary + 1 : kUnary);
      break;
    }
    case ExprKind::Binary: {
      int l = binaryLevel(e.binaryOp());
      printExprAt(out, e.arg(0), l == kCmp ? kCmp + 1 : l);
      out += ' ';
      out += binaryOpSymbol(e.binaryOp());
      out += ' ';
      printExprAt(out, e.arg(1), l + 1);
      break;
    }
  }
  if (parens) out += ')';
}

void printProcessAt(std::string& out, const Process& p, int level);

void printAssignment(std::string& out, const Assignment& a) {
  out += a.attribute + " := ";
  if (a.uniform) {
    out += "U(";
    printArgs(out, a.choices);
    out += ')';
  } else {
    printExprAt(out, a.choices.front(), kOr);
  }
}

// 0: choice, 1: parallel, 2: guard / prefix / atom
void printProcessAt(std::string& out, const Process& p, int level) {
  switch (p.kind()) {
    case ProcessKind::Nil: out += "nil"; return;
    case ProcessKind::Kill: out += "kill"; return;
    case ProcessKind::Constant: out += p.name(); return;
    case ProcessKind::Prefix:
      out += printAction(p.action());
      out += '.';
      printProcessAt(out, *p.body(), 2);
      return;
    case ProcessKind::Guard:
      out += '[';
      printExprAt(out, p.guardPredicate(), kOr);
      out += "] ";
      printProcessAt(out, *p.body(), 2);
      return;
    case ProcessKind::Choice:
    case ProcessKind::Parallel: {
      int mine = p.kind() == ProcessKind::Choice ? 0 : 1;
      bool parens = level > mine;
      if (parens) out += '(';
      printProcessAt(out, *p.left(), mine);
      out += p.kind() == ProcessKind::Choice ? " + " : " | ";
      printProcessAt(out, *p.right(), mine + 1);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string printExpr(const Expr& e) {
  std::string out;
  printExprAt(out, e, kOr);
  return out;
}

std::string printPayloadExpr(const Expr& e) {
  std::string out;
  printExprAt(out, e, kAdd);
  return out;
}

std::string printUpdate(const Update& u) {
  if (u.isIdentity()) return "{}";
  std::string out = "{";
  const auto& branches = u.branches();
  bool plain = branches.size() == 1 && branches[0].weight == 1.0 && !branches[0].assignments.empty();
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (i) out += " ;";
    if (!plain) out += " " + formatReal(branches[i].weight) + " :";
    const auto& as = branches[i].assignments;
    for (std::size_t j = 0; j < as.size(); ++j) {
      out += j ? ", " : " ";
      printAssignment(out, as[j]);
    }
  }
  out += " }";
  return out;
}

std::string printAction(const ActionPrefix& a) {
  std::string out = a.action;
  if (isBroadcast(a.kind)) out += '*';
  if (!a.predicate.isTop()) {
    out += '[';
    printExprAt(out, a.predicate, kOr);
    out += ']';
  }
  if (isOutput(a.kind)) {
    out += '<';
    for (std::size_t i = 0; i < a.outputs.size(); ++i) {
      if (i) out += ", ";
      printExprAt(out, a.outputs[i], kAdd);
    }
    out += '>';
  } else {
    out += '(';
    for (std::size_t i = 0; i < a.inputs.size(); ++i) {
      if (i) out += ", ";
      out += a.inputs[i] ? *a.inputs[i] : "unit";
    }
    out += ')';
  }
  if (!a.update.isIdentity()) out += printUpdate(a.update);
  return out;
}

std::string printProcess(const ProcessPtr& p) {
  std::string out;
  printProcessAt(out, *p, 0);
  return out;
}

std::string printComponent(const ComponentPtr& c) {
  if (c->isNull()) return "0";
  return "(" + printProcess(c->process()) + ", " + c->store().toString() + ")";
}

std::string printCollective(const Collective& n) {
  if (n.empty()) return "empty";
  std::string out;
  for (const auto& [c, k] : n.entries()) {
    if (!out.empty()) out += " || ";
    out += printComponent(c);
    if (k != 1) out += " * " + std::to_string(k);
  }
  return out;
}

}  // namespace carma
