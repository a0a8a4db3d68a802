#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "carma/process.hpp"
#include "carma/store.hpp"

namespace carma {

class Component;
struct CollectiveDelta;
using ComponentPtr = std::shared_ptr<const Component>;

/// Either the inactive component 0 or an agent (P, gamma). The process of an
/// active component is always in canonical form.
class Component {
  struct Key {};

 public:
  static ComponentPtr null();
  static ComponentPtr active(ProcessPtr process, Store store);

  Component(Key, ProcessPtr process, Store store, bool isNull);

  bool isNull() const { return null_; }
  const ProcessPtr& process() const { return process_; }
  const Store& store() const { return store_; }
  std::uint64_t hash() const { return hash_; }

 private:
  ProcessPtr process_;
  Store store_;
  std::uint64_t hash_ = 0;
  bool null_ = false;
};

std::strong_ordering compare(const Component& a, const Component& b);
std::strong_ordering compare(const ComponentPtr& a, const ComponentPtr& b);
inline bool equal(const ComponentPtr& a, const ComponentPtr& b) { return compare(a, b) == 0; }

ComponentPtr canonicalize(const ComponentPtr& c);

struct ComponentLess {
  bool operator()(const ComponentPtr& a, const ComponentPtr& b) const { return compare(a, b) < 0; }
};

/// A collective in canonical form: the multiset of its active components,
/// sorted by the component order and stored with multiplicities. The
/// inactive component is the unit of parallel composition and never
/// appears; the empty multiset is the empty collective.
class Collective {
 public:
  using Entry = std::pair<ComponentPtr, std::uint32_t>;

  Collective();

  static Collective single(const ComponentPtr& c);
  static Collective par(const Collective& a, const Collective& b);
  /// Merges duplicates, drops null components and zero multiplicities.
  static Collective fromEntries(std::vector<Entry> entries);

  std::span<const Entry> entries() const { return data_->entries; }
  std::size_t distinct() const { return data_->entries.size(); }
  std::size_t size() const { return data_->size; }
  bool empty() const { return data_->entries.empty(); }
  std::uint64_t hash() const { return data_->hash; }

  /// Expands multiplicities: one pointer per component copy, in canonical order.
  std::vector<ComponentPtr> components() const;

  std::strong_ordering compare(const Collective& other) const;
  friend bool operator==(const Collective& a, const Collective& b) { return a.compare(b) == 0; }
  friend std::strong_ordering operator<=>(const Collective& a, const Collective& b) { return a.compare(b); }

 private:
  struct Data {
    std::vector<Entry> entries;
    std::size_t size = 0;
    std::uint64_t hash = 0;
  };
  friend Collective apply(const Collective& base, const CollectiveDelta& delta);
  explicit Collective(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static Collective seal(std::vector<Entry> sortedMerged);

  std::shared_ptr<const Data> data_;
};

struct CollectiveLess {
  bool operator()(const Collective& a, const Collective& b) const { return a.compare(b) < 0; }
};

/// Removes and adds component copies; the building block for collective
/// outcomes that differ from their source in a few components.
struct CollectiveDelta {
  std::vector<Collective::Entry> removed;
  std::vector<Collective::Entry> added;

  void remove(const ComponentPtr& c, std::uint32_t n = 1) { removed.emplace_back(c, n); }
  void add(const ComponentPtr& c, std::uint32_t n = 1) { added.emplace_back(c, n); }
};

/// Throws std::logic_error if `removed` is not contained in the collective.
Collective apply(const Collective& base, const CollectiveDelta& delta);

}  // namespace carma
