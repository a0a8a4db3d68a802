#include "carma/component.hpp"

#include <algorithm>
#include <stdexcept>

#include "carma/hashing.hpp"

namespace carma {

Component::Component(Key, ProcessPtr process, Store store, bool isNull)
    : process_(std::move(process)), store_(std::move(store)), null_(isNull) {
  hash_ = null_ ? hashing::mix(0x6e756c6c) : hashing::combine(process_->hash(), store_.hash());
}

ComponentPtr Component::null() {
  static const ComponentPtr c = std::make_shared<const Component>(Key{}, Process::nil(), Store(), true);
  return c;
}

ComponentPtr Component::active(ProcessPtr process, Store store) {
  return std::make_shared<const Component>(Key{}, canonicalize(process), std::move(store), false);
}

std::strong_ordering compare(const Component& a, const Component& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (a.isNull() || b.isNull()) return b.isNull() <=> a.isNull();
  if (auto c = compare(a.process(), b.process()); c != 0) return c;
  return a.store().compare(b.store());
}

std::strong_ordering compare(const ComponentPtr& a, const ComponentPtr& b) {
  if (a == b) return std::strong_ordering::equal;
  return compare(*a, *b);
}

ComponentPtr canonicalize(const ComponentPtr& c) {
  if (c->isNull() || c->process()->isCanonical()) return c;
  return Component::active(c->process(), c->store());
}

Collective::Collective() {
  static const Collective empty = seal({});
  data_ = empty.data_;
}

Collective Collective::seal(std::vector<Entry> entries) {
  auto d = std::make_shared<Data>();
  std::uint64_t h = hashing::mix(entries.size());
  std::size_t size = 0;
  for (const auto& [c, n] : entries) {
    h = hashing::combine(hashing::combine(h, c->hash()), n);
    size += n;
  }
  d->entries = std::move(entries);
  d->size = size;
  d->hash = h;
  return Collective(std::shared_ptr<const Data>(std::move(d)));
}

Collective Collective::single(const ComponentPtr& c) {
  if (c->isNull()) return Collective();
  return seal({Entry{canonicalize(c), 1}});
}

Collective Collective::fromEntries(std::vector<Entry> entries) {
  std::erase_if(entries, [](const Entry& e) { return e.second == 0 || e.first->isNull(); });
  for (auto& e : entries) e.first = canonicalize(e.first);
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return carma::compare(a.first, b.first) < 0; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (!merged.empty() && equal(merged.back().first, e.first)) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  return seal(std::move(merged));
}

Collective Collective::par(const Collective& a, const Collective& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Entry> merged;
  merged.reserve(a.distinct() + b.distinct());
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea || ib != eb) {
    if (ib == eb) {
      merged.push_back(*ia++);
    } else if (ia == ea) {
      merged.push_back(*ib++);
    } else {
      auto c = carma::compare(ia->first, ib->first);
      if (c < 0) {
        merged.push_back(*ia++);
      } else if (c > 0) {
        merged.push_back(*ib++);
      } else {
        merged.emplace_back(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
  }
  return seal(std::move(merged));
}

std::vector<ComponentPtr> Collective::components() const {
  std::vector<ComponentPtr> out;
  out.reserve(size());
  for (const auto& [c, n] : entries()) out.insert(out.end(), n, c);
  return out;
}

std::strong_ordering Collective::compare(const Collective& other) const {
  if (data_ == other.data_) return std::strong_ordering::equal;
  const auto& a = data_->entries;
  const auto& b = other.data_->entries;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto c = carma::compare(a[i].first, b[i].first); c != 0) return c;
    if (auto c = a[i].second <=> b[i].second; c != 0) return c;
  }
  return a.size() <=> b.size();
}

Collective apply(const Collective& base, const CollectiveDelta& delta) {
  std::vector<Collective::Entry> entries(base.entries().begin(), base.entries().end());
  auto less = [](const Collective::Entry& e, const ComponentPtr& c) { return compare(e.first, c) < 0; };
  for (const auto& [c, n] : delta.removed) {
    if (c->isNull()) continue;
    auto it = std::lower_bound(entries.begin(), entries.end(), c, less);
    if (it == entries.end() || !equal(it->first, c) || it->second < n) {
      throw std::logic_error("collective delta removes a component that is not present");
    }
    it->second -= n;
  }
  for (const auto& [c, n] : delta.added) {
    if (c->isNull() || n == 0) continue;
    auto it = std::lower_bound(entries.begin(), entries.end(), c, less);
    if (it != entries.end() && equal(it->first, c)) {
      it->second += n;
    } else {
      entries.insert(it, Collective::Entry{canonicalize(c), n});
    }
  }
  std::erase_if(entries, [](const Collective::Entry& e) { return e.second == 0; });
  return Collective::seal(std::move(entries));
}

}  // namespace carma
