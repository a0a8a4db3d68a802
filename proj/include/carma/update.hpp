#pragma once

#include <compare>
#include <string>
#include <vector>

#include "carma/expr.hpp"

namespace carma {

/// `a := e`, or `a := U(e1, ..., en)` which picks one of the expressions
/// uniformly at random.
struct Assignment {
  std::string attribute;
  std::vector<Expr> choices;
  bool uniform = false;

  static Assignment set(std::string attribute, Expr value) {
    return Assignment{std::move(attribute), {std::move(value)}, false};
  }
  static Assignment uniformChoice(std::string attribute, std::vector<Expr> values) {
    return Assignment{std::move(attribute), std::move(values), true};
  }

  std::strong_ordering compare(const Assignment& other) const;
  friend bool operator==(const Assignment& a, const Assignment& b) { return a.compare(b) == 0; }
};

/// One probabilistic alternative. Weights are relative; they are normalised
/// by their sum when the update is applied.
struct UpdateBranch {
  double weight = 1.0;
  std::vector<Assignment> assignments;

  std::strong_ordering compare(const UpdateBranch& other) const;
  friend bool operator==(const UpdateBranch& a, const UpdateBranch& b) { return a.compare(b) == 0; }
};

/// Store update: a finite list of weighted branches of simultaneous
/// assignments. No branches means the identity update.
class Update {
 public:
  Update() = default;

  /// Validates weights (finite, non-negative, positive sum), non-empty
  /// uniform choices and distinct targets per branch; throws ModelError(MalformedUpdate).
  explicit Update(std::vector<UpdateBranch> branches);

  static Update identity() { return Update(); }
  static Update assign(std::vector<Assignment> assignments);

  const std::vector<UpdateBranch>& branches() const { return branches_; }
  bool isIdentity() const { return branches_.empty(); }
  double totalWeight() const;

  std::strong_ordering compare(const Update& other) const;
  friend bool operator==(const Update& a, const Update& b) { return a.compare(b) == 0; }

 private:
  std::vector<UpdateBranch> branches_;
};

}  // namespace carma
