#include "carma/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "carma/errors.hpp"

namespace carma {

namespace {

[[noreturn]] void unbound(const std::string& what) { throw ModelError(ErrorKind::UnboundName, what + " is not available here"); }

const Value& lookup(const Store* store, const std::string& name, const char* prefix) {
  if (!store) unbound(std::string(prefix) + name);
  const Value* v = store->find(name);
  if (!v) throw ModelError(ErrorKind::UnboundAttribute, "attribute '" + std::string(prefix) + name + "' is not defined");
  return *v;
}

std::int64_t wrapAdd(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}
std::int64_t wrapSub(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}
std::int64_t wrapMul(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}

void requireNumeric(const Value& v, const char* op) {
  if (!v.isNumeric()) {
    throw ModelError(ErrorKind::TypeMismatch, std::string("operator ") + op + " expects numbers, got " + kindName(v.kind()));
  }
}

bool bothIntegers(const Value& a, const Value& b) {
  return a.kind() == Value::Kind::Integer && b.kind() == Value::Kind::Integer;
}

// Numbers compare by value across integer and real; other kinds must match.
int compareValues(const Value& a, const Value& b, BinaryOp op) {
  if (a.isNumeric() && b.isNumeric()) {
    if (bothIntegers(a, b)) {
      auto x = a.asInteger(), y = b.asInteger();
      return x < y ? -1 : (x > y ? 1 : 0);
    }
    double x = a.asReal(), y = b.asReal();
    if (std::isnan(x) || std::isnan(y)) return 2;
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  if (a.kind() != b.kind()) {
    if (op == BinaryOp::Eq || op == BinaryOp::Ne) return 2;
    throw ModelError(ErrorKind::TypeMismatch, std::string("cannot order ") + kindName(a.kind()) + " and " + kindName(b.kind()));
  }
  auto c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Value evalBinary(BinaryOp op, const Value& a, const Value& b) {
  switch (op) {
    case BinaryOp::Add:
    case BinaryOp::Sub:
    case BinaryOp::Mul:
      requireNumeric(a, binaryOpSymbol(op));
      requireNumeric(b, binaryOpSymbol(op));
      if (bothIntegers(a, b)) {
        auto x = a.asInteger(), y = b.asInteger();
        return Value::integer(op == BinaryOp::Add ? wrapAdd(x, y) : op == BinaryOp::Sub ? wrapSub(x, y) : wrapMul(x, y));
      } else {
        double x = a.asReal(), y = b.asReal();
        return Value::real(op == BinaryOp::Add ? x + y : op == BinaryOp::Sub ? x - y : x * y);
      }
    case BinaryOp::Div: {
      requireNumeric(a, "/");
      requireNumeric(b, "/");
      double y = b.asReal();
      if (y == 0.0) throw ModelError(ErrorKind::DivisionByZero, "division by zero");
      return Value::real(a.asReal() / y);
    }
    case BinaryOp::Mod: {
      if (!bothIntegers(a, b)) throw ModelError(ErrorKind::TypeMismatch, "operator % expects integers");
      auto x = a.asInteger(), y = b.asInteger();
      if (y == 0) throw ModelError(ErrorKind::DivisionByZero, "modulo by zero");
      if (y == -1) return Value::integer(0);
      return Value::integer(x % y);
    }
    case BinaryOp::Eq:
    case BinaryOp::Ne: {
      int c = compareValues(a, b, op);
      return Value::boolean((c == 0) == (op == BinaryOp::Eq));
    }
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge: {
      int c = compareValues(a, b, op);
      if (c == 2) return Value::boolean(false);
      switch (op) {
        case BinaryOp::Lt: return Value::boolean(c < 0);
        case BinaryOp::Le: return Value::boolean(c <= 0);
        case BinaryOp::Gt: return Value::boolean(c > 0);
        default: return Value::boolean(c >= 0);
      }
    }
    case BinaryOp::And:
    case BinaryOp::Or: break;  // short-circuited by the caller
  }
  return Value::boolean(false);
}

Value evalCall(const std::string& name, const std::vector<Value>& args) {
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw ModelError(ErrorKind::ArityMismatch, "wrong number of arguments to " + name);
    }
  };
  if (name == "min" || name == "max") {
    arity(1, static_cast<std::size_t>(-1));
    Value best = args[0];
    requireNumeric(best, name.c_str());
    for (std::size_t i = 1; i < args.size(); ++i) {
      requireNumeric(args[i], name.c_str());
      int c = compareValues(args[i], best, BinaryOp::Lt);
      if ((name == "min" && c < 0) || (name == "max" && c > 0)) best = args[i];
    }
    return best;
  }
  if (name == "abs") {
    arity(1, 1);
    requireNumeric(args[0], "abs");
    if (args[0].kind() == Value::Kind::Integer) {
      auto x = args[0].asInteger();
      return Value::integer(x < 0 ? wrapSub(0, x) : x);
    }
    return Value::real(std::fabs(args[0].asReal()));
  }
  if (name == "distance") {
    arity(2, 2);
    const Value& a = args[0];
    const Value& b = args[1];
    if (a.isNumeric() && b.isNumeric()) return Value::real(std::fabs(a.asReal() - b.asReal()));
    const auto& xs = a.asTuple();
    const auto& ys = b.asTuple();
    if (xs.size() != ys.size()) throw ModelError(ErrorKind::TypeMismatch, "distance between tuples of different length");
    double s = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      requireNumeric(xs[i], "distance");
      requireNumeric(ys[i], "distance");
      double d = xs[i].asReal() - ys[i].asReal();
      s += d * d;
    }
    return Value::real(std::sqrt(s));
  }
  throw ModelError(ErrorKind::UnboundName, "unknown function '" + name + "'");
}

bool asCondition(const Value& v) {
  if (v.kind() != Value::Kind::Boolean) {
    throw ModelError(ErrorKind::TypeMismatch, std::string("expected a boolean, got ") + kindName(v.kind()));
  }
  return v.asBoolean();
}

}  // namespace

bool inState(const Process& p, const std::string& name) {
  switch (p.kind()) {
    case ProcessKind::Constant: return p.name() == name;
    case ProcessKind::Parallel: return inState(*p.left(), name) || inState(*p.right(), name);
    default: return false;
  }
}

Value evalExpr(const Expr& e, const EvalScope& scope) {
  switch (e.kind()) {
    case ExprKind::Constant: return e.value();
    case ExprKind::Attribute: return lookup(scope.local, e.name(), "");
    case ExprKind::This: return lookup(scope.self, e.name(), "this.");
    case ExprKind::Global: return lookup(scope.global, e.name(), "global.");
    case ExprKind::Sender: return lookup(scope.sender, e.name(), "sender.");
    case ExprKind::Receiver: return lookup(scope.receiver, e.name(), "receiver.");
    case ExprKind::Variable: {
      if (scope.variables) {
        const auto& vars = *scope.variables;
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
          if (it->first == e.name()) return it->second;
        }
      }
      throw ModelError(ErrorKind::UnboundName, "variable '" + e.name() + "' is not bound");
    }
    case ExprKind::InState:
      if (!scope.behaviour) unbound("@" + e.name());
      return Value::boolean(inState(*scope.behaviour, e.name()));
    case ExprKind::Count: {
      if (!scope.collective) unbound("count");
      std::int64_t n = 0;
      for (const auto& [c, k] : scope.collective->entries()) {
        EvalScope inner = scope;
        inner.local = &c->store();
        inner.self = &c->store();
        inner.behaviour = c->process().get();
        if (evalPredicate(e.arg(0), inner)) n += k;
      }
      return Value::integer(n);
    }
    case ExprKind::Unary: {
      Value v = evalExpr(e.arg(0), scope);
      if (e.unaryOp() == UnaryOp::Not) return Value::boolean(!asCondition(v));
      requireNumeric(v, "-");
      if (v.kind() == Value::Kind::Integer) return Value::integer(wrapSub(0, v.asInteger()));
      return Value::real(-v.asReal());
    }
    case ExprKind::Binary: {
      BinaryOp op = e.binaryOp();
      if (op == BinaryOp::And || op == BinaryOp::Or) {
        bool l = asCondition(evalExpr(e.arg(0), scope));
        if (op == BinaryOp::And && !l) return Value::boolean(false);
        if (op == BinaryOp::Or && l) return Value::boolean(true);
        return Value::boolean(asCondition(evalExpr(e.arg(1), scope)));
      }
      return evalBinary(op, evalExpr(e.arg(0), scope), evalExpr(e.arg(1), scope));
    }
    case ExprKind::Call: {
      std::vector<Value> args;
      args.reserve(e.args().size());
      for (const auto& a : e.args()) args.push_back(evalExpr(a, scope));
      return evalCall(e.name(), args);
    }
  }
  throw ModelError(ErrorKind::Semantic, "malformed expression");
}

bool evalPredicate(const Predicate& p, const EvalScope& scope) {
  if (p.isConstant()) return asCondition(p.value());
  try {
    return asCondition(evalExpr(p, scope));
  } catch (const ModelError& err) {
    if (err.kind() == ErrorKind::UnboundAttribute) return false;
    throw;
  }
}

bool satisfies(const Store& store, const Predicate& p) {
  EvalScope s;
  s.local = &store;
  return evalPredicate(p, s);
}

namespace {

using Leaf = std::function<std::optional<Expr>(const Expr&)>;

// Rewrites leaves; returns the same node when nothing changed.
Expr rewrite(const Expr& e, const Leaf& leaf) {
  switch (e.kind()) {
    case ExprKind::Unary: {
      Expr a = rewrite(e.arg(0), leaf);
      return a.sameNode(e.arg(0)) ? e : Expr::unary(e.unaryOp(), a);
    }
    case ExprKind::Binary: {
      Expr a = rewrite(e.arg(0), leaf);
      Expr b = rewrite(e.arg(1), leaf);
      return a.sameNode(e.arg(0)) && b.sameNode(e.arg(1)) ? e : Expr::binary(e.binaryOp(), a, b);
    }
    case ExprKind::Call: {
      std::vector<Expr> args;
      bool same = true;
      for (const auto& x : e.args()) {
        args.push_back(rewrite(x, leaf));
        same = same && args.back().sameNode(x);
      }
      return same ? e : Expr::call(e.name(), std::move(args));
    }
    case ExprKind::Count: {
      // Inside count[...] `this` denotes the counted component; only variables are replaced.
      Expr a = rewrite(e.arg(0), Leaf([&](const Expr& x) -> std::optional<Expr> {
        if (x.kind() == ExprKind::This) return std::nullopt;
        return leaf(x);
      }));
      return a.sameNode(e.arg(0)) ? e : Expr::count(a);
    }
    default: {
      std::optional<Expr> r = leaf(e);
      return r ? *r : e;
    }
  }
}

const Value* findBinding(const Bindings& b, const std::string& name) {
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    if (it->first == name) return &it->second;
  }
  return nullptr;
}

}  // namespace

Predicate closePredicate(const Predicate& p, const Store& self, const Bindings* variables) {
  if (p.isConstant()) return p;
  try {
    return rewrite(p, [&](const Expr& x) -> std::optional<Expr> {
      if (x.kind() == ExprKind::This) {
        const Value* v = self.find(x.name());
        if (!v) throw ModelError(ErrorKind::UnboundAttribute, "attribute 'this." + x.name() + "' is not defined");
        return Expr::constant(*v);
      }
      if (x.kind() == ExprKind::Variable && variables) {
        if (const Value* v = findBinding(*variables, x.name())) return Expr::constant(*v);
      }
      return std::nullopt;
    });
  } catch (const ModelError& err) {
    if (err.kind() == ErrorKind::UnboundAttribute) return Expr::bottom();
    throw;
  }
}

Expr substitute(const Expr& e, const Bindings& values) {
  if (values.empty() || !e.mentions(ExprKind::Variable)) return e;
  return rewrite(e, [&](const Expr& x) -> std::optional<Expr> {
    if (x.kind() != ExprKind::Variable) return std::nullopt;
    if (const Value* v = findBinding(values, x.name())) return Expr::constant(*v);
    return std::nullopt;
  });
}

Update substitute(const Update& u, const Bindings& values) {
  if (values.empty() || u.isIdentity()) return u;
  std::vector<UpdateBranch> branches = u.branches();
  for (auto& b : branches) {
    for (auto& a : b.assignments) {
      for (auto& c : a.choices) c = substitute(c, values);
    }
  }
  return Update(std::move(branches));
}

ProcessPtr substitute(const ProcessPtr& p, const Bindings& values) {
  if (values.empty()) return p;
  switch (p->kind()) {
    case ProcessKind::Nil:
    case ProcessKind::Kill:
    case ProcessKind::Constant: return p;
    case ProcessKind::Guard:
      return Process::guard(substitute(p->guardPredicate(), values), substitute(p->body(), values));
    case ProcessKind::Choice: return Process::choice(substitute(p->left(), values), substitute(p->right(), values));
    case ProcessKind::Parallel: return Process::parallel(substitute(p->left(), values), substitute(p->right(), values));
    case ProcessKind::Prefix: {
      ActionPrefix a = p->action();
      Bindings inner;
      for (const auto& b : values) {
        bool shadowed = std::any_of(a.inputs.begin(), a.inputs.end(), [&](const InputSlot& s) { return s && *s == b.first; });
        if (!shadowed) inner.push_back(b);
      }
      for (auto& e : a.outputs) e = substitute(e, values);
      a.predicate = substitute(a.predicate, inner);
      a.update = substitute(a.update, inner);
      return Process::prefix(std::move(a), substitute(p->body(), inner));
    }
  }
  return p;
}

ProcessPtr substitute(const ProcessPtr& p, const std::vector<std::string>& vars, const std::vector<Value>& vals) {
  if (vars.size() != vals.size()) {
    throw ModelError(ErrorKind::ArityMismatch, "substitution of " + std::to_string(vals.size()) + " values for " +
                                                   std::to_string(vars.size()) + " variables");
  }
  Bindings b;
  for (std::size_t i = 0; i < vars.size(); ++i) b.emplace_back(vars[i], vals[i]);
  return substitute(p, b);
}

StoreDistribution applyUpdate(const Update& u, const Store& target, const EvalScope& scope) {
  if (u.isIdentity()) return {{target, 1.0}};
  StoreDistribution out;
  const double total = u.totalWeight();
  for (const auto& branch : u.branches()) {
    if (branch.weight == 0.0) continue;
    // Right-hand sides all read the pre-update store.
    std::vector<std::vector<Value>> choices;
    for (const auto& a : branch.assignments) {
      std::vector<Value> vs;
      for (const auto& c : a.choices) vs.push_back(evalExpr(c, scope));
      choices.push_back(std::move(vs));
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    double per = branch.weight / total;
    for (const auto& vs : choices) per /= static_cast<double>(vs.size());
    while (true) {
      Store s = target;
      for (std::size_t i = 0; i < choices.size(); ++i) s = s.with(branch.assignments[i].attribute, choices[i][idx[i]]);
      out.emplace_back(std::move(s), per);
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  StoreDistribution merged;
  for (auto& [s, w] : out) {
    if (!merged.empty() && merged.back().first == s) {
      merged.back().second += w;
    } else {
      merged.emplace_back(std::move(s), w);
    }
  }
  return merged;
}

StoreDistribution applyUpdate(const Update& u, const Store& target) { return applyUpdate(u, target, EvalScope::own(target)); }

}  // namespace carma
