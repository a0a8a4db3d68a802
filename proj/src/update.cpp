#include "carma/update.hpp"

#include <cmath>
#include <set>

#include "carma/errors.hpp"

namespace carma {

namespace {

template <class T>
std::strong_ordering compareRange(const std::vector<T>& a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto c = a[i].compare(b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering Assignment::compare(const Assignment& other) const {
  if (auto c = attribute.compare(other.attribute) <=> 0; c != 0) return c;
  if (auto c = uniform <=> other.uniform; c != 0) return c;
  return compareRange(choices, other.choices);
}

std::strong_ordering UpdateBranch::compare(const UpdateBranch& other) const {
  if (auto c = orderReal(weight, other.weight); c != 0) return c;
  return compareRange(assignments, other.assignments);
}

Update::Update(std::vector<UpdateBranch> branches) : branches_(std::move(branches)) {
  double total = 0.0;
  for (const auto& b : branches_) {
    if (!std::isfinite(b.weight) || b.weight < 0.0) {
      throw ModelError(ErrorKind::MalformedUpdate, "update branch weight must be finite and non-negative");
    }
    total += b.weight;
    std::set<std::string> targets;
    for (const auto& a : b.assignments) {
      if (a.choices.empty()) {
        throw ModelError(ErrorKind::MalformedUpdate, "uniform choice for '" + a.attribute + "' has no alternatives");
      }
      if (!a.uniform && a.choices.size() != 1) {
        throw ModelError(ErrorKind::MalformedUpdate, "assignment to '" + a.attribute + "' must have one value");
      }
      if (!targets.insert(a.attribute).second) {
        throw ModelError(ErrorKind::MalformedUpdate, "attribute '" + a.attribute + "' assigned twice in one branch");
      }
    }
  }
  if (!branches_.empty() && !(total > 0.0)) {
    throw ModelError(ErrorKind::MalformedUpdate, "update branch weights sum to zero");
  }
}

Update Update::assign(std::vector<Assignment> assignments) {
  if (assignments.empty()) return Update();
  return Update({UpdateBranch{1.0, std::move(assignments)}});
}

double Update::totalWeight() const {
  double total = 0.0;
  for (const auto& b : branches_) total += b.weight;
  return total;
}

std::strong_ordering Update::compare(const Update& other) const { return compareRange(branches_, other.branches_); }

}  // namespace carma
