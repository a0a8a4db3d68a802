#include "carma/store.hpp"

#include <algorithm>

#include "carma/errors.hpp"
#include "carma/hashing.hpp"

namespace carma {

std::shared_ptr<const Store::Data> Store::seal(std::vector<Binding> sorted) {
  auto data = std::make_shared<Data>();
  std::uint64_t h = hashing::mix(sorted.size());
  for (const auto& [name, value] : sorted) {
    h = hashing::combine(h, hashing::bytes(name));
    h = hashing::combine(h, value.hash());
  }
  data->bindings = std::move(sorted);
  data->hash = h;
  return data;
}

Store::Store() {
  static const std::shared_ptr<const Data> empty = seal({});
  data_ = empty;
}

Store Store::fromBindings(std::vector<Binding> bindings) {
  std::sort(bindings.begin(), bindings.end(),
            [](const Binding& a, const Binding& b) { return a.first < b.first; });
  auto dup = std::adjacent_find(bindings.begin(), bindings.end(),
                                [](const Binding& a, const Binding& b) { return a.first == b.first; });
  if (dup != bindings.end()) {
    throw ModelError(ErrorKind::DuplicateAttribute, "attribute '" + dup->first + "' bound twice in store");
  }
  return Store(seal(std::move(bindings)));
}

const Value* Store::find(std::string_view name) const {
  const auto& b = data_->bindings;
  auto it = std::lower_bound(b.begin(), b.end(), name,
                             [](const Binding& x, std::string_view n) { return x.first < n; });
  if (it == b.end() || it->first != name) return nullptr;
  return &it->second;
}

Store Store::with(const std::string& name, Value value) const {
  std::vector<Binding> b = data_->bindings;
  auto it = std::lower_bound(b.begin(), b.end(), name,
                             [](const Binding& x, const std::string& n) { return x.first < n; });
  if (it != b.end() && it->first == name) {
    if (it->second == value) return *this;
    it->second = std::move(value);
  } else {
    b.insert(it, Binding{name, std::move(value)});
  }
  return Store(seal(std::move(b)));
}

std::strong_ordering Store::compare(const Store& other) const {
  if (data_ == other.data_) return std::strong_ordering::equal;
  const auto& a = data_->bindings;
  const auto& b = other.data_->bindings;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto c = a[i].first.compare(b[i].first) <=> 0; c != 0) return c;
    if (auto c = a[i].second.compare(b[i].second); c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::string Store::toString() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [name, value] : data_->bindings) {
    if (!first) s += ", ";
    first = false;
    s += name + " = " + value.toString();
  }
  return s + "}";
}

}  // namespace carma
