#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "carma/evaluator.hpp"
#include "carma/print.hpp"
#include "carma/parser.hpp"
#include "carma/system_semantics.hpp"

namespace oracle {

using namespace carma;

std::string Term::key() const {
  if (isNull()) return "0";
  return "(" + printProcess(process) + ", " + store.toString() + ")";
}

TreePtr leaf(Term t) {
  auto n = std::make_shared<Tree>();
  n->leaf = std::move(t);
  return n;
}

TreePtr join(TreePtr a, TreePtr b) {
  auto n = std::make_shared<Tree>();
  n->left = std::move(a);
  n->right = std::move(b);
  return n;
}

namespace {

TreePtr build(const std::vector<Term>& ts, std::size_t lo, std::size_t hi, std::mt19937_64* rng) {
  if (hi - lo == 1) return leaf(ts[lo]);
  std::size_t mid = lo + (hi - lo) / 2;
  if (rng) mid = lo + 1 + std::uniform_int_distribution<std::size_t>(0, hi - lo - 2)(*rng);
  return join(build(ts, lo, mid, rng), build(ts, mid, hi, rng));
}

}  // namespace

// The empty collective is the single inactive component.
TreePtr balanced(const std::vector<Term>& terms) {
  if (terms.empty()) return leaf(Term{});
  return build(terms, 0, terms.size(), nullptr);
}

TreePtr shuffled(std::vector<Term> terms, std::mt19937_64& rng) {
  if (terms.empty()) return leaf(Term{});
  std::shuffle(terms.begin(), terms.end(), rng);
  return build(terms, 0, terms.size(), &rng);
}

std::vector<Term> termsOf(const Collective& n) {
  std::vector<Term> out;
  for (const auto& c : n.components()) out.push_back(Term{c->process(), c->store()});
  return out;
}

std::string stateKey(const std::shared_ptr<const Model>& model, const std::vector<Term>& leaves, const Store& global) {
  std::vector<Collective::Entry> entries;
  for (const auto& t : leaves) {
    if (!t.isNull()) entries.emplace_back(Component::active(t.process, t.store), 1);
  }
  SystemState s{Collective::fromEntries(std::move(entries)), global, model};
  return s.toString();
}

namespace {

// ------------------------------------------------------------- functions

// Component-level function: term key -> (term, weight).
using CompFn = std::map<std::string, std::pair<Term, double>>;
// Collective-level function: key -> (leaves in tree order, weight).
using ColFn = std::map<std::string, std::pair<std::vector<Term>, double>>;

void addTo(CompFn& f, const Term& t, double w) {
  if (w == 0.0) return;
  auto [it, fresh] = f.try_emplace(t.key(), t, 0.0);
  it->second.second += w;
}

void addTo(ColFn& f, const std::vector<Term>& ts, double w) {
  if (w == 0.0) return;
  std::string k;
  for (const auto& t : ts) k += t.key() + " || ";
  auto [it, fresh] = f.try_emplace(k, ts, 0.0);
  it->second.second += w;
}

CompFn plus(CompFn a, const CompFn& b) {
  for (const auto& [k, tw] : b) addTo(a, tw.first, tw.second);
  return a;
}

ColFn plus(ColFn a, const ColFn& b) {
  for (const auto& [k, tw] : b) addTo(a, tw.first, tw.second);
  return a;
}

double total(const ColFn& f) {
  double s = 0.0;
  for (const auto& [k, tw] : f) s += tw.second;
  return s;
}

double total(const CompFn& f) {
  double s = 0.0;
  for (const auto& [k, tw] : f) s += tw.second;
  return s;
}

double at(const CompFn& f, const Term& t) {
  auto it = f.find(t.key());
  return it == f.end() ? 0.0 : it->second.second;
}

ColFn scaled(const ColFn& f, double r) {
  ColFn out;
  for (const auto& [k, tw] : f) addTo(out, tw.first, tw.second * r);
  return out;
}

// N1 || N2 on functions.
ColFn par(const ColFn& a, const ColFn& b) {
  ColFn out;
  for (const auto& [ka, x] : a) {
    for (const auto& [kb, y] : b) {
      std::vector<Term> ts = x.first;
      ts.insert(ts.end(), y.first.begin(), y.first.end());
      addTo(out, ts, x.second * y.second);
    }
  }
  return out;
}

std::vector<Term> leaves(const TreePtr& t) {
  if (t->isLeaf()) return {t->leaf};
  auto l = leaves(t->left);
  auto r = leaves(t->right);
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

ColFn point(const TreePtr& t) {
  ColFn f;
  addTo(f, leaves(t), 1.0);
  return f;
}

ColFn lift(const CompFn& f) {
  ColFn out;
  for (const auto& [k, tw] : f) addTo(out, {tw.first}, tw.second);
  return out;
}

// ------------------------------------------------------------ components

struct Rules {
  const Model& model;
  const EvaluationContext& ctx;

  const ProcessPtr& body(const std::string& a) const { return model.definitions.body(a); }

  // (P, p): all mass on 0 when P = Q | kill.
  CompFn continuation(const ProcessPtr& p, const StoreDistribution& dist, double r) const {
    CompFn f;
    if (hasTopLevelKill(p)) {
      addTo(f, Term{}, r);
      return f;
    }
    for (const auto& [s, w] : dist) addTo(f, Term{p, s}, r * w);
    return f;
  }

  // C | Q and P | C.
  static CompFn parRight(const CompFn& f, const ProcessPtr& q) {
    CompFn out;
    for (const auto& [k, tw] : f) {
      const Term& c = tw.first;
      addTo(out, c.isNull() ? Term{} : Term{Process::parallel(c.process, q), c.store}, tw.second);
    }
    return out;
  }
  static CompFn parLeft(const ProcessPtr& p, const CompFn& f) {
    CompFn out;
    for (const auto& [k, tw] : f) {
      const Term& c = tw.first;
      addTo(out, c.isNull() ? Term{} : Term{Process::parallel(p, c.process), c.store}, tw.second);
    }
    return out;
  }

  static bool holds(const Predicate& g, const Store& s) { return evalPredicate(g, EvalScope::own(s)); }

  bool sameOutput(const ActionPrefix& a, const Store& g, const TransitionLabel& l) const {
    bool bcast = isBroadcast(a.kind);
    if (a.action != l.action) return false;
    if (bcast != (l.kind == LabelKind::BroadcastOut)) return false;
    if (!(g == l.sender)) return false;
    if (!(closePredicate(a.predicate, g) == l.predicate)) return false;
    std::vector<Value> vs;
    for (const auto& e : a.outputs) vs.push_back(evalExpr(e, EvalScope::own(g)));
    return vs == l.values;
  }

  // B-Out / Out and their -F2 rules, through Plus, Par, Guard, Rec.
  CompFn out(const ProcessPtr& p, const Store& g, const TransitionLabel& l) const {
    switch (p->kind()) {
      case ProcessKind::Nil:
      case ProcessKind::Kill: return {};
      case ProcessKind::Constant: return out(body(p->name()), g, l);
      case ProcessKind::Guard: return holds(p->guardPredicate(), g) ? out(p->body(), g, l) : CompFn{};
      case ProcessKind::Choice: return plus(out(p->left(), g, l), out(p->right(), g, l));
      case ProcessKind::Parallel:
        return plus(parRight(out(p->left(), g, l), p->right()), parLeft(p->left(), out(p->right(), g, l)));
      case ProcessKind::Prefix: {
        const ActionPrefix& a = p->action();
        if (!isOutput(a.kind) || !sameOutput(a, g, l)) return {};
        double r = ctx.rateOf(g, Action{a.action, isBroadcast(a.kind)});
        return continuation(p->body(), applyUpdate(a.update, g), r);
      }
    }
    return {};
  }

  // Values for the slots, or nothing when the payload does not fit.
  static std::optional<Bindings> bind(const ActionPrefix& a, const std::vector<Value>& vs) {
    if (a.inputs.size() != vs.size()) return std::nullopt;
    Bindings b;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (a.inputs[i]) {
        b.emplace_back(*a.inputs[i], vs[i]);
      } else if (vs[i].kind() != Value::Kind::Unit) {
        return std::nullopt;
      }
    }
    return b;
  }

  // Side conditions of B-In / In: gamma1 |= [[pi2[v/x]]]_gamma2 and gamma2 |= pi1.
  static bool accepts(const ActionPrefix& a, const Bindings& b, const Store& g2, const TransitionLabel& l) {
    Predicate pi2 = closePredicate(substitute(a.predicate, b), g2);
    return satisfies(l.sender, pi2) && satisfies(g2, l.predicate);
  }

  // B-In / In with -F2, -F3, through Plus, Par, Guard, Rec.
  CompFn in(const ProcessPtr& p, const Store& g, const TransitionLabel& l, bool bcast) const {
    switch (p->kind()) {
      case ProcessKind::Nil:
      case ProcessKind::Kill: return {};
      case ProcessKind::Constant: return in(body(p->name()), g, l, bcast);
      case ProcessKind::Guard: return holds(p->guardPredicate(), g) ? in(p->body(), g, l, bcast) : CompFn{};
      case ProcessKind::Choice: return plus(in(p->left(), g, l, bcast), in(p->right(), g, l, bcast));
      case ProcessKind::Parallel:
        return plus(parRight(in(p->left(), g, l, bcast), p->right()), parLeft(p->left(), in(p->right(), g, l, bcast)));
      case ProcessKind::Prefix: {
        const ActionPrefix& a = p->action();
        ActionKind want = bcast ? ActionKind::BroadcastIn : ActionKind::UnicastIn;
        if (a.kind != want || a.action != l.action) return {};
        auto b = bind(a, l.values);
        if (!b || !accepts(a, *b, g, l)) return {};
        double mu = ctx.probability(l.sender, g, Action{a.action, bcast});
        return continuation(substitute(p->body(), *b), applyUpdate(substitute(a.update, *b), g), mu);
      }
    }
    return {};
  }

  // Refusal rules: Nil-F1, B-Out-F1, Out-F1, In-F1, B-In-F1, B-In-F4,
  // Plus-F1, Par-F1, Guard-F1, Guard-F3, Rec.
  CompFn refuse(const ProcessPtr& p, const Store& g, const TransitionLabel& l) const {
    Term self{p, g};
    CompFn f;
    switch (p->kind()) {
      case ProcessKind::Nil:
      case ProcessKind::Kill: addTo(f, self, 1.0); return f;
      case ProcessKind::Constant: {
        // The refusal keeps the constant rather than its unfolding.
        addTo(f, self, at(refuse(body(p->name()), g, l), Term{body(p->name()), g}));
        return f;
      }
      case ProcessKind::Guard: {
        if (!holds(p->guardPredicate(), g)) {
          addTo(f, self, 1.0);
        } else {
          addTo(f, self, at(refuse(p->body(), g, l), Term{p->body(), g}));
        }
        return f;
      }
      case ProcessKind::Choice:
      case ProcessKind::Parallel: {
        double a = at(refuse(p->left(), g, l), Term{p->left(), g});
        double b = at(refuse(p->right(), g, l), Term{p->right(), g});
        addTo(f, self, a * b);
        return f;
      }
      case ProcessKind::Prefix: {
        const ActionPrefix& a = p->action();
        if (a.kind != ActionKind::BroadcastIn || a.action != l.action) {
          addTo(f, self, 1.0);
          return f;
        }
        auto b = bind(a, l.values);
        if (!b || !accepts(a, *b, g, l)) {
          addTo(f, self, 1.0);
          return f;
        }
        addTo(f, self, 1.0 - ctx.probability(l.sender, g, Action{a.action, true}));
        return f;
      }
    }
    return f;
  }

  // ------------------------------------------------------------ collectives

  ColFn bIn(const TreePtr& t, const TransitionLabel& l) const {
    if (t->isLeaf()) {
      const Term& c = t->leaf;
      if (c.isNull()) return {};  // Zero
      CompFn n1 = in(c.process, c.store, l, true);
      CompFn n2 = refuse(c.process, c.store, l);
      double d = total(n1) + total(n2);
      if (d == 0.0) return {};
      return scaled(lift(plus(n1, n2)), 1.0 / d);  // Comp-B-In
    }
    return par(bIn(t->left, l), bIn(t->right, l));  // B-In-Sync
  }

  ColFn bOut(const TreePtr& t, const TransitionLabel& l) const {
    if (t->isLeaf()) {
      const Term& c = t->leaf;
      if (c.isNull()) return {};
      return lift(out(c.process, c.store, l));  // Comp
    }
    // B-Sync
    return plus(par(bOut(t->left, l), bIn(t->right, l)), par(bIn(t->left, l), bOut(t->right, l)));
  }

  ColFn uOut(const TreePtr& t, const TransitionLabel& l) const {
    if (t->isLeaf()) return t->leaf.isNull() ? ColFn{} : lift(out(t->leaf.process, t->leaf.store, l));
    return plus(par(uOut(t->left, l), point(t->right)), par(point(t->left), uOut(t->right, l)));  // Out-Sync
  }

  ColFn uIn(const TreePtr& t, const TransitionLabel& l) const {
    if (t->isLeaf()) return t->leaf.isNull() ? ColFn{} : lift(in(t->leaf.process, t->leaf.store, l, false));
    return plus(par(uIn(t->left, l), point(t->right)), par(point(t->left), uIn(t->right, l)));  // In-Sync
  }

  ColFn sync(const TreePtr& t, const TransitionLabel& l) const {
    if (t->isLeaf()) return {};  // no component rule derives a synchronisation
    ColFn i1 = uIn(t->left, l), i2 = uIn(t->right, l);
    double d = total(i1) + total(i2);
    if (d == 0.0) return {};
    ColFn s = scaled(par(sync(t->left, l), point(t->right)), total(i1));
    s = plus(s, scaled(par(point(t->left), sync(t->right, l)), total(i2)));
    s = plus(s, par(uOut(t->left, l), i2));
    s = plus(s, par(i1, uOut(t->right, l)));
    return scaled(s, 1.0 / d);  // Sync
  }

  // ------------------------------------------------------------------ labels

  void labels(const ProcessPtr& p, const Store& g, std::map<TransitionLabel, double>& outm) const {
    switch (p->kind()) {
      case ProcessKind::Nil:
      case ProcessKind::Kill: return;
      case ProcessKind::Constant: labels(body(p->name()), g, outm); return;
      case ProcessKind::Guard:
        if (holds(p->guardPredicate(), g)) labels(p->body(), g, outm);
        return;
      case ProcessKind::Choice:
      case ProcessKind::Parallel:
        labels(p->left(), g, outm);
        labels(p->right(), g, outm);
        return;
      case ProcessKind::Prefix: {
        const ActionPrefix& a = p->action();
        if (!isOutput(a.kind)) return;
        TransitionLabel l;
        l.kind = isBroadcast(a.kind) ? LabelKind::BroadcastOut : LabelKind::UnicastOut;
        l.action = a.action;
        l.predicate = closePredicate(a.predicate, g);
        for (const auto& e : a.outputs) l.values.push_back(evalExpr(e, EvalScope::own(g)));
        l.sender = g;
        outm[l] += ctx.rateOf(g, Action{a.action, isBroadcast(a.kind)});
        return;
      }
    }
  }
};

Collective engineCollective(const std::vector<Term>& ts) {
  std::vector<Collective::Entry> entries;
  for (const auto& t : ts) {
    if (!t.isNull()) entries.emplace_back(Component::active(t.process, t.store), 1);
  }
  return Collective::fromEntries(std::move(entries));
}

}  // namespace

std::map<TransitionLabel, double> outputCapacity(const Model& model, const TreePtr& tree, const Store& global) {
  auto ts = leaves(tree);
  EvaluationContext ctx = evalContext(model, global, engineCollective(ts));
  Rules rules{model, ctx};
  std::map<TransitionLabel, double> out;
  for (const auto& t : ts) {
    if (!t.isNull()) rules.labels(t.process, t.store, out);
  }
  return out;
}

namespace {

struct Outcome {
  std::string label;
  Action action;
  std::vector<Term> leaves;
  Store global;
  double rate;
};

std::vector<Outcome> derive(const Model& model, const TreePtr& tree, const Store& global) {
  auto ts = leaves(tree);
  Collective n = engineCollective(ts);
  EvaluationContext ctx = evalContext(model, global, n);
  Rules rules{model, ctx};
  std::map<TransitionLabel, double> ls;
  for (const auto& t : ts) {
    if (!t.isNull()) rules.labels(t.process, t.store, ls);
  }
  std::vector<Outcome> out;
  for (const auto& [l, cap] : ls) {
    bool bcast = l.kind == LabelKind::BroadcastOut;
    ColFn f = bcast ? rules.bOut(tree, l) : rules.sync(tree, l);  // Sys-B / Sys
    if (f.empty()) continue;
    EnvironmentEffect eff = ctx.effect(l.sender, l.actionType());
    std::vector<Term> spawned = termsOf(eff.spawn);
    TransitionLabel shown = bcast ? l : l.as(LabelKind::UnicastSync);
    for (const auto& [k, tw] : f) {
      std::vector<Term> next = tw.first;
      next.insert(next.end(), spawned.begin(), spawned.end());
      for (const auto& [g, q] : eff.global) {
        if (tw.second * q > 0.0) out.push_back({shown.toString(), l.actionType(), next, g, tw.second * q});
      }
    }
  }
  return out;
}

}  // namespace

TransitionMap transitions(const Model& model, const TreePtr& tree, const Store& global) {
  // stateKey needs a model pointer only for the SystemState value; it is not read.
  std::shared_ptr<const Model> alias(std::shared_ptr<const Model>{}, &model);
  TransitionMap out;
  for (const auto& o : derive(model, tree, global)) out[{o.label, stateKey(alias, o.leaves, o.global)}] += o.rate;
  return out;
}

Chain explore(const std::shared_ptr<const Model>& model, std::size_t maxStates) {
  Chain chain;
  SystemState s0 = SystemState::initial(model);
  struct Pending {
    std::vector<Term> leaves;
    Store global;
  };
  std::deque<std::pair<std::string, Pending>> frontier;
  std::string k0 = stateKey(model, termsOf(s0.collective), s0.global);
  chain.states.insert(k0);
  frontier.push_back({k0, {termsOf(s0.collective), s0.global}});
  while (!frontier.empty()) {
    auto [key, st] = std::move(frontier.front());
    frontier.pop_front();
    if (st.leaves.empty()) continue;
    for (const auto& o : derive(*model, balanced(st.leaves), st.global)) {
      std::string target = stateKey(model, o.leaves, o.global);
      if (!chain.states.count(target)) {
        if (chain.states.size() >= maxStates) {
          chain.truncated = true;
          continue;
        }
        chain.states.insert(target);
        // Continue from the canonical form of the target.
        std::vector<Term> canon = termsOf(engineCollective(o.leaves));
        frontier.push_back({target, {canon, o.global}});
      }
      chain.edges[{key, o.action.toString(), target}] += o.rate;
    }
  }
  return chain;
}

}  // namespace oracle
