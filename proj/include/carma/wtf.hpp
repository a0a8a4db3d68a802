#pragma once

#include <map>
#include <utility>

namespace carma {

/// Finitely supported function from terms to non-negative reals. Entries
/// with weight zero are never stored, so the empty map is the function 0.
template <class Term, class Less>
class WeightedFunction {
 public:
  using Map = std::map<Term, double, Less>;

  WeightedFunction() = default;
  WeightedFunction(const Term& t, double w) { add(t, w); }

  void add(const Term& t, double w) {
    if (w == 0.0) return;
    auto [it, inserted] = map_.try_emplace(t, w);
    if (!inserted) {
      it->second += w;
      if (it->second == 0.0) map_.erase(it);
    }
  }

  WeightedFunction& operator+=(const WeightedFunction& other) {
    for (const auto& [t, w] : other.map_) add(t, w);
    return *this;
  }
  friend WeightedFunction operator+(WeightedFunction a, const WeightedFunction& b) { return a += b; }

  WeightedFunction scaled(double r) const {
    WeightedFunction out;
    if (r == 0.0) return out;
    for (const auto& [t, w] : map_) out.add(t, r * w);
    return out;
  }

  double total() const {
    double s = 0.0;
    for (const auto& [t, w] : map_) s += w;
    return s;
  }

  double at(const Term& t) const {
    auto it = map_.find(t);
    return it == map_.end() ? 0.0 : it->second;
  }

  /// Pairwise product over the supports, combining the terms; weights of
  /// colliding results are summed.
  template <class Combine>
  WeightedFunction compose(const WeightedFunction& other, Combine combine) const {
    WeightedFunction out;
    for (const auto& [a, wa] : map_) {
      for (const auto& [b, wb] : other.entries()) out.add(combine(a, b), wa * wb);
    }
    return out;
  }

  /// Pushes the function forward along `f`.
  template <class F>
  WeightedFunction map(F f) const {
    WeightedFunction out;
    for (const auto& [t, w] : map_) out.add(f(t), w);
    return out;
  }

  const Map& entries() const { return map_; }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }

 private:
  Map map_;
};

}  // namespace carma
