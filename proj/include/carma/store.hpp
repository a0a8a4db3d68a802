#pragma once

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "carma/value.hpp"

namespace carma {

/// Finite map from attribute names to values, kept sorted by name so equal
/// stores are structurally identical. Cheap to copy (shared immutable data).
class Store {
 public:
  using Binding = std::pair<std::string, Value>;

  Store();

  /// Throws ModelError(DuplicateAttribute) if a name is bound twice.
  static Store fromBindings(std::vector<Binding> bindings);

  const Value* find(std::string_view name) const;
  Store with(const std::string& name, Value value) const;

  std::span<const Binding> bindings() const { return data_->bindings; }
  std::size_t size() const { return data_->bindings.size(); }
  bool empty() const { return data_->bindings.empty(); }
  std::uint64_t hash() const { return data_->hash; }

  std::strong_ordering compare(const Store& other) const;
  friend bool operator==(const Store& a, const Store& b) { return a.compare(b) == 0; }
  friend std::strong_ordering operator<=>(const Store& a, const Store& b) { return a.compare(b); }

  std::string toString() const;

 private:
  struct Data {
    std::vector<Binding> bindings;
    std::uint64_t hash = 0;
  };
  explicit Store(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static std::shared_ptr<const Data> seal(std::vector<Binding> sorted);

  std::shared_ptr<const Data> data_;
};

}  // namespace carma
