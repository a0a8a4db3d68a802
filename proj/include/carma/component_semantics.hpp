#pragma once

#include <string>
#include <utility>
#include <vector>

#include "carma/label.hpp"
#include "carma/wtf.hpp"

namespace carma {

using ComponentFunction = WeightedFunction<ComponentPtr, ComponentLess>;

/// Component-level transitions. Every operation takes the process
/// definitions for unfolding constants and the current evaluation context.
struct ComponentSemantics {
  const Definitions& definitions;
  const EvaluationContext& context;

  /// One entry per enabled output prefix (broadcast or unicast) with
  /// non-zero rate; the function carries rate times the continuation
  /// distribution. Entries are not merged; equal labels may repeat.
  std::vector<std::pair<TransitionLabel, ComponentFunction>> outputs(const ComponentPtr& c) const;

  /// Input and refusal for a broadcast output label. The refusal function of
  /// a component is always concentrated on the component itself, so only
  /// its weight is returned.
  struct BroadcastResponse {
    ComponentFunction input;
    double refusal = 1.0;
  };
  BroadcastResponse broadcastResponse(const ComponentPtr& c, const TransitionLabel& out) const;

  ComponentFunction broadcastInput(const ComponentPtr& c, const TransitionLabel& out) const;
  ComponentFunction refusal(const ComponentPtr& c, const TransitionLabel& out) const;
  ComponentFunction unicastInput(const ComponentPtr& c, const TransitionLabel& out) const;

  /// False when no broadcast input on `action` is reachable without passing
  /// a prefix: the component then refuses such a broadcast with weight 1.
  bool canReceiveBroadcast(const ComponentPtr& c, const std::string& action) const;
  bool canReceiveUnicast(const ComponentPtr& c, const std::string& action) const;
};

/// The distribution (P, p): mass on the null component when P has a
/// top-level kill, otherwise on (P, gamma) for each store in p.
ComponentFunction liftContinuation(const ProcessPtr& p, const StoreDistribution& stores);

}  // namespace carma
