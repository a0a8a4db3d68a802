#pragma once

#include <memory>
#include <vector>

#include "carma/collective_semantics.hpp"
#include "carma/model.hpp"

namespace carma {

/// A collective running in the environment of `model` with global store `global`.
struct SystemState {
  Collective collective;
  Store global;
  std::shared_ptr<const Model> model;

  static SystemState initial(std::shared_ptr<const Model> model);

  // The model is not part of the state identity.
  std::strong_ordering compare(const SystemState& other) const;
  friend bool operator==(const SystemState& a, const SystemState& b) { return a.compare(b) == 0; }
  friend std::strong_ordering operator<=>(const SystemState& a, const SystemState& b) { return a.compare(b); }

  std::string toString() const;
};

struct SystemTransition {
  TransitionLabel label;  // BroadcastOut or UnicastSync
  double rate = 0.0;
  SystemState target;
};

/// All transitions of a state, merged per (label, target) and sorted by
/// label, then target.
std::vector<SystemTransition> systemTransitions(const SystemState& s);

/// Transitions of one state in the order they are derived, with targets
/// kept as differences from the source. The simulator draws from this set
/// and builds only the selected target.
class TransitionSet {
 public:
  explicit TransitionSet(const SystemState& s);

  std::size_t size() const { return items_.size(); }
  double totalRate() const { return total_; }
  double rate(std::size_t i) const { return items_[i].rate; }
  const TransitionLabel& label(std::size_t i) const { return labels_[items_[i].label]; }
  SystemState target(std::size_t i) const;

 private:
  struct Item {
    std::size_t label;
    std::size_t effect;
    std::size_t global;  // index into the effect's global distribution
    double rate;
    CollectiveDelta delta;
  };
  const SystemState& source_;
  std::vector<TransitionLabel> labels_;
  std::vector<EnvironmentEffect> effects_;
  std::vector<Item> items_;
  double total_ = 0.0;
};

}  // namespace carma
