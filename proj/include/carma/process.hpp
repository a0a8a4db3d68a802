#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "carma/expr.hpp"
#include "carma/update.hpp"

namespace carma {

enum class ActionKind : std::uint8_t { BroadcastOut, BroadcastIn, UnicastOut, UnicastIn };

inline bool isOutput(ActionKind k) { return k == ActionKind::BroadcastOut || k == ActionKind::UnicastOut; }
inline bool isBroadcast(ActionKind k) { return k == ActionKind::BroadcastOut || k == ActionKind::BroadcastIn; }

/// An input slot either binds a variable or, when empty, accepts only the
/// unit value without binding anything (the paper's bullet payload).
using InputSlot = std::optional<std::string>;

struct ActionPrefix {
  ActionKind kind = ActionKind::BroadcastOut;
  std::string action;
  Predicate predicate;
  std::vector<Expr> outputs;      // output payload expressions
  std::vector<InputSlot> inputs;  // input payload slots
  Update update;

  std::strong_ordering compare(const ActionPrefix& other) const;
  friend bool operator==(const ActionPrefix& a, const ActionPrefix& b) { return a.compare(b) == 0; }
};

enum class ProcessKind : std::uint8_t { Nil, Kill, Prefix, Choice, Parallel, Guard, Constant };

class Process;
using ProcessPtr = std::shared_ptr<const Process>;

/// Immutable process term. Nodes are shared; construction never mutates an
/// existing node.
class Process {
  struct Key {};

 public:
  static ProcessPtr nil();
  static ProcessPtr kill();
  static ProcessPtr prefix(ActionPrefix action, ProcessPtr continuation);
  static ProcessPtr choice(ProcessPtr left, ProcessPtr right);
  static ProcessPtr parallel(ProcessPtr left, ProcessPtr right);
  static ProcessPtr guard(Predicate predicate, ProcessPtr body);
  static ProcessPtr constant(std::string name);

  Process(Key, ProcessKind kind);

  ProcessKind kind() const { return kind_; }
  const ActionPrefix& action() const { return *action_; }
  const ProcessPtr& left() const { return left_; }    // Choice, Parallel
  const ProcessPtr& right() const { return right_; }  // Choice, Parallel
  const ProcessPtr& body() const { return left_; }    // Prefix continuation, Guard body
  const Predicate& guardPredicate() const { return guard_; }
  const std::string& name() const { return name_; }

  std::uint64_t hash() const { return hash_; }
  /// Every parallel composition below (and including) this node is a
  /// left-associated chain with sorted operands.
  bool isCanonical() const { return canonical_; }

 private:
  void seal();

  ProcessKind kind_;
  std::shared_ptr<const ActionPrefix> action_;
  ProcessPtr left_;
  ProcessPtr right_;
  Predicate guard_;
  std::string name_;
  std::uint64_t hash_ = 0;
  bool canonical_ = true;
};

std::strong_ordering compare(const Process& a, const Process& b);
std::strong_ordering compare(const ProcessPtr& a, const ProcessPtr& b);
inline bool equal(const ProcessPtr& a, const ProcessPtr& b) { return compare(a, b) == 0; }

/// Flattens nested parallel compositions, orders the operands and
/// re-associates them to the left. Choice operands are never reordered.
/// Idempotent.
ProcessPtr canonicalize(const ProcessPtr& p);

/// Operands of the top-level parallel composition (the term itself if it is not a parallel).
std::vector<ProcessPtr> parallelOperands(const ProcessPtr& p);

/// P == Q | kill: kill is one of the top-level parallel operands.
bool hasTopLevelKill(const ProcessPtr& p);

/// Process constant equations `A := P`.
class Definitions {
 public:
  /// Returns false when `name` was already defined.
  bool define(const std::string& name, ProcessPtr body);
  const Process* find(const std::string& name) const;
  /// Throws ModelError(UndefinedConstant).
  const ProcessPtr& body(const std::string& name) const;
  const std::map<std::string, ProcessPtr>& all() const { return bodies_; }
  bool contains(const std::string& name) const { return bodies_.count(name) != 0; }

  friend bool operator==(const Definitions& a, const Definitions& b);

 private:
  std::map<std::string, ProcessPtr> bodies_;
};

}  // namespace carma
