#include "carma/system_semantics.hpp"

#include <algorithm>
#include <map>

#include "carma/print.hpp"

namespace carma {

SystemState SystemState::initial(std::shared_ptr<const Model> model) {
  SystemState s;
  s.global = initialGlobalStore(*model);
  s.collective = initialCollective(*model, s.global);
  s.model = std::move(model);
  return s;
}

std::strong_ordering SystemState::compare(const SystemState& other) const {
  if (auto c = collective.compare(other.collective); c != 0) return c;
  return global.compare(other.global);
}

std::string SystemState::toString() const { return printCollective(collective) + " in " + global.toString(); }

TransitionSet::TransitionSet(const SystemState& s) : source_(s) {
  const Model& m = *s.model;
  EvaluationContext ctx = evalContext(m, s.global, s.collective);
  ComponentSemantics sem{m.definitions, ctx};
  for (auto& outs : collectOutputs(s.collective, sem)) {
    bool bcast = outs.label.kind == LabelKind::BroadcastOut;
    std::vector<DeltaOutcome> outcomes =
        bcast ? broadcastOutcomes(s.collective, outs, sem) : unicastOutcomes(s.collective, outs, sem);
    if (outcomes.empty()) continue;
    TransitionLabel label = bcast ? outs.label : outs.label.as(LabelKind::UnicastSync);
    EnvironmentEffect effect = ctx.effect(label.sender, label.actionType());
    std::size_t li = labels_.size();
    std::size_t ei = effects_.size();
    labels_.push_back(std::move(label));
    for (auto& o : outcomes) {
      for (std::size_t g = 0; g < effect.global.size(); ++g) {
        double r = o.weight * effect.global[g].second;
        if (!(r > 0.0)) continue;
        items_.push_back(Item{li, ei, g, r, o.delta});
        total_ += r;
      }
    }
    effects_.push_back(std::move(effect));
  }
}

SystemState TransitionSet::target(std::size_t i) const {
  const Item& it = items_[i];
  const EnvironmentEffect& e = effects_[it.effect];
  SystemState t;
  t.collective = Collective::par(apply(source_.collective, it.delta), e.spawn);
  t.global = e.global[it.global].first;
  t.model = source_.model;
  return t;
}

std::vector<SystemTransition> systemTransitions(const SystemState& s) {
  TransitionSet set(s);
  std::map<std::pair<TransitionLabel, SystemState>, double> merged;
  for (std::size_t i = 0; i < set.size(); ++i) merged[{set.label(i), set.target(i)}] += set.rate(i);
  std::vector<SystemTransition> out;
  out.reserve(merged.size());
  for (auto& [key, rate] : merged) out.push_back(SystemTransition{key.first, rate, key.second});
  return out;
}

}  // namespace carma
