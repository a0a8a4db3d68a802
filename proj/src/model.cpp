#include "carma/model.hpp"

#include <map>
#include <set>

#include "carma/errors.hpp"

namespace carma {

bool operator==(const ComponentDecl& a, const ComponentDecl& b) {
  return a.name == b.name && a.params == b.params && a.store == b.store && equal(a.behaviour, b.behaviour);
}

bool ActionPattern::matches(const Action& a) const {
  if (name && *name != a.name) return false;
  switch (kind) {
    case Kind::Unicast: return !a.broadcast;
    case Kind::Broadcast: return a.broadcast;
    case Kind::Any: return true;
  }
  return false;
}

std::string ActionPattern::toString() const {
  std::string s = name ? *name : "_";
  if (kind == Kind::Broadcast) s += '*';
  return s;
}

const char* measureKindName(MeasureKind k) {
  switch (k) {
    case MeasureKind::Count: return "count";
    case MeasureKind::Min: return "min";
    case MeasureKind::Max: return "max";
    case MeasureKind::Sum: return "sum";
    case MeasureKind::Avg: return "avg";
  }
  return "?";
}

double Measure::gridPoint(std::uint32_t i) const {
  if (i + 1 >= samples) return end;
  return start + (end - start) * static_cast<double>(i) / static_cast<double>(samples - 1);
}

const ComponentDecl* Model::findComponent(const std::string& name) const {
  for (const auto& c : components) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool operator==(const Model& a, const Model& b) {
  return a.symbols == b.symbols && a.definitions == b.definitions && a.components == b.components &&
         a.environment == b.environment && a.system == b.system && a.measures == b.measures;
}

Store initialGlobalStore(const Model& m) {
  std::vector<Store::Binding> bindings;
  EvalScope scope;
  for (const auto& [name, e] : m.environment.global) bindings.emplace_back(name, evalExpr(e, scope));
  return Store::fromBindings(std::move(bindings));
}

Collective instantiate(const Model& m, const InstanceSpec& spec, const EvalScope& scope) {
  const ComponentDecl* decl = m.findComponent(spec.component);
  if (!decl) throw ModelError(ErrorKind::UnboundName, "unknown component '" + spec.component + "'");
  if (decl->params.size() != spec.args.size()) {
    throw ModelError(ErrorKind::ArityMismatch, "component '" + spec.component + "' expects " +
                                                   std::to_string(decl->params.size()) + " arguments, got " +
                                                   std::to_string(spec.args.size()));
  }
  Bindings vars;
  for (std::size_t i = 0; i < spec.args.size(); ++i) vars.emplace_back(decl->params[i], evalExpr(spec.args[i], scope));
  EvalScope inner = scope;
  inner.variables = &vars;
  std::vector<Store::Binding> bindings;
  for (const auto& [name, e] : decl->store) bindings.emplace_back(name, evalExpr(e, inner));
  Store store = Store::fromBindings(std::move(bindings));
  ProcessPtr behaviour = substitute(decl->behaviour, vars);
  if (spec.count == 0) return Collective();
  return Collective::fromEntries({{Component::active(behaviour, store), spec.count}});
}

Collective initialCollective(const Model& m, const Store& global) {
  EvalScope scope;
  scope.global = &global;
  Collective n;
  for (const auto& spec : m.system) n = Collective::par(n, instantiate(m, spec, scope));
  return n;
}

namespace {

void collectConstants(const Process& p, bool guarded, std::vector<std::pair<std::string, bool>>& out) {
  switch (p.kind()) {
    case ProcessKind::Nil:
    case ProcessKind::Kill: return;
    case ProcessKind::Constant: out.emplace_back(p.name(), guarded); return;
    case ProcessKind::Prefix: collectConstants(*p.body(), true, out); return;
    case ProcessKind::Guard: collectConstants(*p.body(), guarded, out); return;
    case ProcessKind::Choice:
    case ProcessKind::Parallel:
      collectConstants(*p.left(), guarded, out);
      collectConstants(*p.right(), guarded, out);
      return;
  }
}

bool killOutsidePrefix(const Process& p) {
  switch (p.kind()) {
    case ProcessKind::Kill: return true;
    case ProcessKind::Prefix:
    case ProcessKind::Nil:
    case ProcessKind::Constant: return false;
    case ProcessKind::Guard: return killOutsidePrefix(*p.body());
    case ProcessKind::Choice:
    case ProcessKind::Parallel: return killOutsidePrefix(*p.left()) || killOutsidePrefix(*p.right());
  }
  return false;
}

void checkProcess(const Model& m, const Process& p, const std::string& where) {
  std::vector<std::pair<std::string, bool>> refs;
  collectConstants(p, false, refs);
  for (const auto& [name, g] : refs) {
    if (!m.definitions.contains(name)) {
      throw ModelError(ErrorKind::UndefinedConstant, "undefined process constant '" + name + "' in " + where);
    }
  }
  if (killOutsidePrefix(p)) throw ModelError(ErrorKind::Semantic, "kill outside the scope of an action prefix in " + where);
}

void checkInstances(const Model& m, const std::vector<InstanceSpec>& specs) {
  for (const auto& s : specs) {
    const ComponentDecl* d = m.findComponent(s.component);
    if (!d) throw ModelError(ErrorKind::UnboundName, "unknown component '" + s.component + "'");
    if (d->params.size() != s.args.size()) {
      throw ModelError(ErrorKind::ArityMismatch, "component '" + s.component + "' expects " +
                                                     std::to_string(d->params.size()) + " arguments");
    }
  }
}

}  // namespace

void validate(const Model& m) {
  // Unguarded references between constants must not form a cycle.
  std::map<std::string, std::vector<std::string>> unguarded;
  for (const auto& [name, body] : m.definitions.all()) {
    checkProcess(m, *body, "definition of " + name);
    std::vector<std::pair<std::string, bool>> refs;
    collectConstants(*body, false, refs);
    for (const auto& [r, g] : refs) {
      if (!g) unguarded[name].push_back(r);
    }
  }
  std::map<std::string, int> state;  // 1: on stack, 2: done
  auto visit = [&](auto& self, const std::string& a) -> void {
    state[a] = 1;
    for (const auto& b : unguarded[a]) {
      if (state[b] == 1) throw ModelError(ErrorKind::UnguardedRecursion, "unguarded recursion through '" + b + "'");
      if (state[b] == 0) self(self, b);
    }
    state[a] = 2;
  };
  for (const auto& [name, body] : m.definitions.all()) {
    if (state[name] == 0) visit(visit, name);
  }

  std::set<std::string> names;
  for (const auto& c : m.components) {
    if (!names.insert(c.name).second) throw ModelError(ErrorKind::Semantic, "component '" + c.name + "' declared twice");
    checkProcess(m, *c.behaviour, "component " + c.name);
    std::set<std::string> params(c.params.begin(), c.params.end());
    if (params.size() != c.params.size()) throw ModelError(ErrorKind::Semantic, "repeated parameter in component " + c.name);
    std::set<std::string> attrs;
    for (const auto& [a, e] : c.store) {
      if (!attrs.insert(a).second) {
        throw ModelError(ErrorKind::DuplicateAttribute, "attribute '" + a + "' bound twice in component " + c.name);
      }
    }
  }
  checkInstances(m, m.system);
  for (const auto& r : m.environment.updates) checkInstances(m, r.spawn);
  std::set<std::string> globals;
  for (const auto& [a, e] : m.environment.global) {
    if (!globals.insert(a).second) throw ModelError(ErrorKind::DuplicateAttribute, "global attribute '" + a + "' bound twice");
  }
  std::set<std::string> measures;
  for (const auto& ms : m.measures) {
    if (!measures.insert(ms.name).second) throw ModelError(ErrorKind::Semantic, "measure '" + ms.name + "' declared twice");
    if (ms.kind != MeasureKind::Count && !ms.attribute) {
      throw ModelError(ErrorKind::Semantic, "measure '" + ms.name + "' needs an attribute");
    }
    if (ms.samples < 2 || !(ms.end > ms.start)) {
      throw ModelError(ErrorKind::Semantic, "measure '" + ms.name + "' needs a grid of at least 2 increasing points");
    }
  }
}

}  // namespace carma
