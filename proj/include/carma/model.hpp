#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "carma/label.hpp"

namespace carma {

/// `component Name(params) { store { a = e, ... } behaviour P }`
struct ComponentDecl {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::pair<std::string, Expr>> store;
  ProcessPtr behaviour;

  friend bool operator==(const ComponentDecl& a, const ComponentDecl& b);
};

/// `Name(args) * count`
struct InstanceSpec {
  std::string component;
  std::vector<Expr> args;
  std::uint32_t count = 1;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

/// Matches actions by name (or any name) and by broadcast/unicast kind.
struct ActionPattern {
  enum class Kind : std::uint8_t { Unicast, Broadcast, Any };
  std::optional<std::string> name;  // nullopt: any name
  Kind kind = Kind::Any;

  bool matches(const Action& a) const;
  std::string toString() const;
  friend bool operator==(const ActionPattern&, const ActionPattern&) = default;
};

/// `rate pat [guard] = e;` and `prob pat [guard] = e;`
struct ValueRule {
  ActionPattern pattern;
  Predicate guard;
  Expr value;

  friend bool operator==(const ValueRule&, const ValueRule&) = default;
};

/// `update pat [guard] { assignments } spawn { Name(args) * k, ... };`
struct UpdateRule {
  ActionPattern pattern;
  Predicate guard;
  Update update;
  std::vector<InstanceSpec> spawn;

  friend bool operator==(const UpdateRule&, const UpdateRule&) = default;
};

/// The evolution rule: ordered rule lists, first match wins.
struct EnvironmentDefinition {
  std::vector<std::pair<std::string, Expr>> global;
  std::vector<ValueRule> rates;
  std::vector<ValueRule> probs;
  std::vector<UpdateRule> updates;

  friend bool operator==(const EnvironmentDefinition&, const EnvironmentDefinition&) = default;
};

enum class MeasureKind : std::uint8_t { Count, Min, Max, Sum, Avg };
const char* measureKindName(MeasureKind k);

/// `measure m = kind[pi](attr) @ [t0:t1:n];`
struct Measure {
  std::string name;
  MeasureKind kind = MeasureKind::Count;
  Predicate filter;
  std::optional<std::string> attribute;  // required unless kind is Count
  double start = 0.0;
  double end = 0.0;
  std::uint32_t samples = 2;

  double gridPoint(std::uint32_t i) const;
  friend bool operator==(const Measure&, const Measure&) = default;
};

struct Model {
  std::vector<std::string> symbols;
  Definitions definitions;
  std::vector<ComponentDecl> components;
  EnvironmentDefinition environment;
  std::vector<InstanceSpec> system;
  std::vector<Measure> measures;

  const ComponentDecl* findComponent(const std::string& name) const;

  /// Structural equality (the round-trip contract of the printer).
  friend bool operator==(const Model& a, const Model& b);
};

/// Evaluates the global store declared by the environment.
Store initialGlobalStore(const Model& m);
/// Instantiates `spec` (arguments evaluated in `scope`) as a collective.
Collective instantiate(const Model& m, const InstanceSpec& spec, const EvalScope& scope);
Collective initialCollective(const Model& m, const Store& global);

/// mu_p, mu_r, mu_u for the global store and collective, by the
/// environment rules of `m`. Rules are evaluated on each call.
EvaluationContext evalContext(const Model& m, const Store& global, const Collective& n);

/// Static checks that the parser cannot do locally: undefined constants,
/// unguarded recursion, component declarations and instance arities.
/// Throws ModelError.
void validate(const Model& m);

}  // namespace carma
