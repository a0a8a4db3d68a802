#pragma once

#include <cstddef>
#include <vector>

#include "carma/component_semantics.hpp"

namespace carma {

using CollectiveFunction = WeightedFunction<Collective, CollectiveLess>;

// Collective-level transitions. The collective is a multiset, so the
// derivations are computed in closed form over its entries rather than by
// recursion over a binary tree; the results are the same functions.

CollectiveFunction colBroadcastInput(const Collective& n, const TransitionLabel& out, const ComponentSemantics& sem);
CollectiveFunction colBroadcastOutput(const Collective& n, const TransitionLabel& out, const ComponentSemantics& sem);
CollectiveFunction colUnicastOutput(const Collective& n, const TransitionLabel& out, const ComponentSemantics& sem);
CollectiveFunction colUnicastInput(const Collective& n, const TransitionLabel& out, const ComponentSemantics& sem);
CollectiveFunction colUnicastSync(const Collective& n, const TransitionLabel& out, const ComponentSemantics& sem);

/// Every output label enabled in a collective, with the output function of
/// one copy of each entry that generates it.
struct LabelledOutputs {
  TransitionLabel label;
  std::vector<std::pair<std::size_t, ComponentFunction>> senders;  // entry index, function
  double capacity(const Collective& n) const;                      // sum of sender rates
};
std::vector<LabelledOutputs> collectOutputs(const Collective& n, const ComponentSemantics& sem);

/// A target collective described by its difference from the source.
struct DeltaOutcome {
  CollectiveDelta delta;
  double weight = 0.0;
};

/// Broadcast synchronisation: each sender races; every other component
/// receives or refuses independently.
std::vector<DeltaOutcome> broadcastOutcomes(const Collective& n, const LabelledOutputs& outs, const ComponentSemantics& sem);
/// Unicast synchronisation, normalised by the total input mass of the collective.
std::vector<DeltaOutcome> unicastOutcomes(const Collective& n, const LabelledOutputs& outs, const ComponentSemantics& sem);

CollectiveFunction materialize(const Collective& n, const std::vector<DeltaOutcome>& outcomes);

}  // namespace carma
