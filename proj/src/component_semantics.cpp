#include "carma/component_semantics.hpp"

#include "carma/errors.hpp"

namespace carma {

ComponentFunction liftContinuation(const ProcessPtr& p, const StoreDistribution& stores) {
  ComponentFunction f;
  if (hasTopLevelKill(p)) {
    f.add(Component::null(), 1.0);
    return f;
  }
  ProcessPtr canon = canonicalize(p);
  for (const auto& [s, w] : stores) f.add(Component::active(canon, s), w);
  return f;
}

namespace {

// Processes running in parallel with the one being explored: a
// continuation P' becomes P' | siblings.
using Siblings = std::vector<ProcessPtr>;

ProcessPtr wrap(ProcessPtr p, const Siblings& siblings) {
  for (const auto& s : siblings) p = Process::parallel(std::move(p), s);
  return p;
}

Siblings with(const Siblings& siblings, const ProcessPtr& p) {
  Siblings out = siblings;
  out.push_back(p);
  return out;
}

bool guardHolds(const Process& p, const Store& store) { return evalPredicate(p.guardPredicate(), EvalScope::own(store)); }

// Binds received values to input slots; false when the payload does not fit.
bool bindInputs(const ActionPrefix& a, const std::vector<Value>& values, Bindings& out) {
  if (a.inputs.size() != values.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (a.inputs[i]) {
      out.emplace_back(*a.inputs[i], values[i]);
    } else if (values[i].kind() != Value::Kind::Unit) {
      return false;
    }
  }
  return true;
}

struct Walker {
  const ComponentSemantics& sem;
  const Store& store;

  void outputs(const ProcessPtr& p, const Siblings& sib,
               std::vector<std::pair<TransitionLabel, ComponentFunction>>& out) const {
    switch (p->kind()) {
      case ProcessKind::Nil:
      case ProcessKind::Kill: return;
      case ProcessKind::Constant: outputs(sem.definitions.body(p->name()), sib, out); return;
      case ProcessKind::Guard:
        if (guardHolds(*p, store)) outputs(p->body(), sib, out);
        return;
      case ProcessKind::Choice:
        outputs(p->left(), sib, out);
        outputs(p->right(), sib, out);
        return;
      case ProcessKind::Parallel:
        outputs(p->left(), with(sib, p->right()), out);
        outputs(p->right(), with(sib, p->left()), out);
        return;
      case ProcessKind::Prefix: {
        const ActionPrefix& a = p->action();
        if (!isOutput(a.kind)) return;
        bool bcast = isBroadcast(a.kind);
        double rate = sem.context.rateOf(store, Action{a.action, bcast});
        if (rate == 0.0) return;
        TransitionLabel l;
        l.kind = bcast ? LabelKind::BroadcastOut : LabelKind::UnicastOut;
        l.action = a.action;
        l.predicate = closePredicate(a.predicate, store);
        EvalScope own = EvalScope::own(store);
        for (const auto& e : a.outputs) l.values.push_back(evalExpr(e, own));
        l.sender = store;
        ComponentFunction f = liftContinuation(wrap(p->body(), sib), applyUpdate(a.update, store)).scaled(rate);
        out.emplace_back(std::move(l), std::move(f));
        return;
      }
    }
  }

  // Accumulates the input function into `input` and returns the refusal weight.
  double inputs(const ProcessPtr& p, const Siblings& sib, const TransitionLabel& l, bool bcast,
                ComponentFunction& input) const {
    switch (p->kind()) {
      case ProcessKind::Nil:
      case ProcessKind::Kill: return 1.0;
      case ProcessKind::Constant: return inputs(sem.definitions.body(p->name()), sib, l, bcast, input);
      case ProcessKind::Guard:
        if (!guardHolds(*p, store)) return 1.0;
        return inputs(p->body(), sib, l, bcast, input);
      case ProcessKind::Choice:
        return inputs(p->left(), sib, l, bcast, input) * inputs(p->right(), sib, l, bcast, input);
      case ProcessKind::Parallel:
        return inputs(p->left(), with(sib, p->right()), l, bcast, input) *
               inputs(p->right(), with(sib, p->left()), l, bcast, input);
      case ProcessKind::Prefix: {
        const ActionPrefix& a = p->action();
        ActionKind wanted = bcast ? ActionKind::BroadcastIn : ActionKind::UnicastIn;
        if (a.kind != wanted || a.action != l.action) return 1.0;
        Bindings vars;
        if (!bindInputs(a, l.values, vars)) return 1.0;
        EvalScope check;
        check.local = &l.sender;
        check.self = &store;
        check.variables = &vars;
        if (!evalPredicate(a.predicate, check) || !satisfies(store, l.predicate)) return 1.0;
        double prob = sem.context.probability(l.sender, store, Action{a.action, bcast});
        if (prob > 0.0) {
          EvalScope own = EvalScope::own(store);
          own.variables = &vars;
          ProcessPtr next = wrap(substitute(p->body(), vars), sib);
          input += liftContinuation(next, applyUpdate(a.update, store, own)).scaled(prob);
        }
        return 1.0 - prob;
      }
    }
    return 1.0;
  }
};

bool reachesInput(const ComponentSemantics& sem, const Process& p, const std::string& action, ActionKind kind) {
  switch (p.kind()) {
    case ProcessKind::Nil:
    case ProcessKind::Kill: return false;
    case ProcessKind::Constant: return reachesInput(sem, *sem.definitions.body(p.name()), action, kind);
    case ProcessKind::Guard: return reachesInput(sem, *p.body(), action, kind);
    case ProcessKind::Choice:
    case ProcessKind::Parallel:
      return reachesInput(sem, *p.left(), action, kind) || reachesInput(sem, *p.right(), action, kind);
    case ProcessKind::Prefix: return p.action().kind == kind && p.action().action == action;
  }
  return false;
}

}  // namespace

std::vector<std::pair<TransitionLabel, ComponentFunction>> ComponentSemantics::outputs(const ComponentPtr& c) const {
  std::vector<std::pair<TransitionLabel, ComponentFunction>> out;
  if (c->isNull()) return out;
  Walker{*this, c->store()}.outputs(c->process(), {}, out);
  return out;
}

ComponentSemantics::BroadcastResponse ComponentSemantics::broadcastResponse(const ComponentPtr& c,
                                                                            const TransitionLabel& out) const {
  BroadcastResponse r;
  if (c->isNull()) {
    r.refusal = 0.0;
    return r;
  }
  r.refusal = Walker{*this, c->store()}.inputs(c->process(), {}, out, true, r.input);
  return r;
}

ComponentFunction ComponentSemantics::broadcastInput(const ComponentPtr& c, const TransitionLabel& out) const {
  return broadcastResponse(c, out).input;
}

ComponentFunction ComponentSemantics::refusal(const ComponentPtr& c, const TransitionLabel& out) const {
  ComponentFunction f;
  if (!c->isNull()) f.add(c, broadcastResponse(c, out).refusal);
  return f;
}

ComponentFunction ComponentSemantics::unicastInput(const ComponentPtr& c, const TransitionLabel& out) const {
  ComponentFunction f;
  if (c->isNull()) return f;
  Walker{*this, c->store()}.inputs(c->process(), {}, out, false, f);
  return f;
}

bool ComponentSemantics::canReceiveBroadcast(const ComponentPtr& c, const std::string& action) const {
  return !c->isNull() && reachesInput(*this, *c->process(), action, ActionKind::BroadcastIn);
}

bool ComponentSemantics::canReceiveUnicast(const ComponentPtr& c, const std::string& action) const {
  return !c->isNull() && reachesInput(*this, *c->process(), action, ActionKind::UnicastIn);
}

}  // namespace carma
