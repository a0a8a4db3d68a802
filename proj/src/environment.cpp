#include "carma/errors.hpp"
#include "carma/model.hpp"

namespace carma {

namespace {

[[noreturn]] void rethrow(const ModelError& err, const char* rule, const Action& a) {
  throw ModelError(err.kind(), std::string(rule) + " rule for " + a.toString() + ": " + err.what());
}

double numeric(const Value& v, const char* what) {
  if (!v.isNumeric()) throw ModelError(ErrorKind::TypeMismatch, std::string(what) + " must be a number");
  return v.asReal();
}

}  // namespace

EvaluationContext evalContext(const Model& m, const Store& global, const Collective& n) {
  const EnvironmentDefinition* env = &m.environment;
  const Model* model = &m;
  EvaluationContext ctx;

  ctx.rate = [env, global, n](const Store& sender, const Action& a) {
    EvalScope scope;
    scope.sender = &sender;
    scope.global = &global;
    scope.collective = &n;
    for (const auto& r : env->rates) {
      if (!r.pattern.matches(a)) continue;
      try {
        if (!evalPredicate(r.guard, scope)) continue;
        return numeric(evalExpr(r.value, scope), "a rate");
      } catch (const ModelError& err) {
        rethrow(err, "rate", a);
      }
    }
    return 1.0;
  };

  ctx.prob = [env, global, n](const Store& sender, const Store& receiver, const Action& a) {
    EvalScope scope;
    scope.sender = &sender;
    scope.receiver = &receiver;
    scope.global = &global;
    scope.collective = &n;
    for (const auto& r : env->probs) {
      if (!r.pattern.matches(a)) continue;
      try {
        if (!evalPredicate(r.guard, scope)) continue;
        return numeric(evalExpr(r.value, scope), "a probability");
      } catch (const ModelError& err) {
        rethrow(err, "prob", a);
      }
    }
    return 1.0;
  };

  ctx.update = [env, model, global, n](const Store& sender, const Action& a) {
    EvalScope scope;
    scope.local = &global;
    scope.self = &global;
    scope.sender = &sender;
    scope.global = &global;
    scope.collective = &n;
    for (const auto& r : env->updates) {
      if (!r.pattern.matches(a)) continue;
      try {
        if (!evalPredicate(r.guard, scope)) continue;
        EnvironmentEffect effect;
        effect.global = applyUpdate(r.update, global, scope);
        for (const auto& spec : r.spawn) effect.spawn = Collective::par(effect.spawn, instantiate(*model, spec, scope));
        return effect;
      } catch (const ModelError& err) {
        rethrow(err, "update", a);
      }
    }
    return EnvironmentEffect{{{global, 1.0}}, Collective()};
  };
  return ctx;
}

}  // namespace carma
