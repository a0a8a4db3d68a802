#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "carma/component.hpp"
#include "carma/evaluator.hpp"

namespace carma {

/// An action type as seen by the environment: `a` (unicast) or `a*` (broadcast).
struct Action {
  std::string name;
  bool broadcast = false;

  std::string toString() const { return broadcast ? name + "*" : name; }
  friend auto operator<=>(const Action&, const Action&) = default;
  friend bool operator==(const Action&, const Action&) = default;
};

enum class LabelKind : std::uint8_t { BroadcastOut, BroadcastIn, UnicastOut, UnicastIn, UnicastSync, Refusal };

const char* labelKindName(LabelKind k);

/// A transition label: action type, closed target predicate, payload and
/// the store of the component that performed the output.
struct TransitionLabel {
  LabelKind kind = LabelKind::BroadcastOut;
  std::string action;
  Predicate predicate;
  std::vector<Value> values;
  Store sender;

  bool broadcast() const {
    return kind == LabelKind::BroadcastOut || kind == LabelKind::BroadcastIn || kind == LabelKind::Refusal;
  }
  Action actionType() const { return Action{action, broadcast()}; }
  /// Same label with another kind (e.g. the input or refusal view of an output).
  TransitionLabel as(LabelKind k) const;

  std::strong_ordering compare(const TransitionLabel& other) const;
  friend bool operator==(const TransitionLabel& a, const TransitionLabel& b) { return a.compare(b) == 0; }
  friend std::strong_ordering operator<=>(const TransitionLabel& a, const TransitionLabel& b) { return a.compare(b); }

  std::string toString() const;
};

/// Global-store outcome and installed collective of an action (mu_u).
struct EnvironmentEffect {
  StoreDistribution global;
  Collective spawn;
};

/// The evaluation context (mu_p, mu_r, mu_u). The raw functions may be
/// replaced freely; callers go through the checked accessors.
struct EvaluationContext {
  std::function<double(const Store& sender, const Store& receiver, const Action&)> prob;
  std::function<double(const Store& sender, const Action&)> rate;
  std::function<EnvironmentEffect(const Store& sender, const Action&)> update;

  /// Rate 1, probability 1, no change to the global store, nothing installed.
  /// `global` is the store the default update leaves untouched.
  static EvaluationContext defaults(const Store& global = Store());

  /// Throws ModelError(InvalidProbability) outside [0, 1].
  double probability(const Store& sender, const Store& receiver, const Action& a) const;
  /// Throws ModelError(InvalidRate) when negative or not finite.
  double rateOf(const Store& sender, const Action& a) const;
  EnvironmentEffect effect(const Store& sender, const Action& a) const;
};

}  // namespace carma
