#pragma once

#include <string>
#include <utility>
#include <vector>

#include "carma/component.hpp"

namespace carma {

/// Values of bound variables; later bindings shadow earlier ones.
using Bindings = std::vector<std::pair<std::string, Value>>;

/// Where each kind of name is resolved. A null pointer means the name kind
/// is not available in this position.
struct EvalScope {
  const Store* local = nullptr;     // a
  const Store* self = nullptr;      // this.a
  const Store* sender = nullptr;    // sender.a
  const Store* receiver = nullptr;  // receiver.a
  const Store* global = nullptr;    // global.a
  const Bindings* variables = nullptr;
  const Collective* collective = nullptr;  // count[pi]
  const Process* behaviour = nullptr;      // @A

  /// Own-store scope: both `a` and `this.a` read `store`.
  static EvalScope own(const Store& store) {
    EvalScope s;
    s.local = &store;
    s.self = &store;
    return s;
  }
};

Value evalExpr(const Expr& e, const EvalScope& scope);

/// Evaluates a boolean expression. A reference to an attribute missing from
/// an otherwise available store makes the whole predicate false.
bool evalPredicate(const Predicate& p, const EvalScope& scope);

/// gamma |= pi for a closed predicate: bare attributes read `store`.
bool satisfies(const Store& store, const Predicate& p);

/// Replaces `this.a` by the value of a in `self` and bound variables by their
/// values. If `self` lacks a referenced attribute the result is false.
Predicate closePredicate(const Predicate& p, const Store& self, const Bindings* variables = nullptr);

Expr substitute(const Expr& e, const Bindings& values);
Update substitute(const Update& u, const Bindings& values);
/// Capture-avoiding: an input prefix binding x stops the substitution of x
/// in its own predicate, update and continuation. Constants are not unfolded.
ProcessPtr substitute(const ProcessPtr& p, const Bindings& values);
/// Pairs `vars` with `vals`; throws ModelError(ArityMismatch) on different lengths.
ProcessPtr substitute(const ProcessPtr& p, const std::vector<std::string>& vars, const std::vector<Value>& vals);

using StoreDistribution = std::vector<std::pair<Store, double>>;

/// Applies the update to `target`, evaluating right-hand sides in `scope`.
/// Equal outcomes are merged; the result is sorted by store and sums to 1.
StoreDistribution applyUpdate(const Update& u, const Store& target, const EvalScope& scope);
StoreDistribution applyUpdate(const Update& u, const Store& target);

/// True iff one of the top-level parallel operands of `p` is the constant `name`.
bool inState(const Process& p, const std::string& name);

}  // namespace carma
