#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace carma {

class Value;

struct UnitValue {};
struct SymbolValue {
  std::string name;
};
struct TupleValue {
  std::vector<Value> items;
};

/// Basic value carried by stores, payloads and expressions. Immutable;
/// totally ordered by kind tag first, then by the natural order of the kind.
class Value {
 public:
  enum class Kind : std::uint8_t { Integer, Real, Boolean, Unit, Symbol, Tuple };

  Value() : data_(UnitValue{}) {}

  static Value integer(std::int64_t v) { return Value(Data(std::in_place_index<0>, v)); }
  static Value real(double v) { return Value(Data(std::in_place_index<1>, v)); }
  static Value boolean(bool v) { return Value(Data(std::in_place_index<2>, v)); }
  static Value unit() { return Value(); }
  static Value symbol(std::string name) { return Value(Data(std::in_place_index<4>, SymbolValue{std::move(name)})); }
  static Value tuple(std::vector<Value> items) { return Value(Data(std::in_place_index<5>, TupleValue{std::move(items)})); }

  Kind kind() const noexcept { return static_cast<Kind>(data_.index()); }
  bool isNumeric() const noexcept { return kind() == Kind::Integer || kind() == Kind::Real; }

  // Accessors throw ModelError(TypeMismatch) on the wrong kind.
  std::int64_t asInteger() const;
  double asReal() const;  // integers are widened
  bool asBoolean() const;
  const std::string& asSymbol() const;
  const std::vector<Value>& asTuple() const;

  std::strong_ordering compare(const Value& other) const;
  friend bool operator==(const Value& a, const Value& b) { return a.compare(b) == 0; }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) { return a.compare(b); }

  std::uint64_t hash() const;

  /// Literal form accepted by the model parser (reals always carry a '.' or exponent).
  std::string toString() const;

 private:
  using Data = std::variant<std::int64_t, double, bool, UnitValue, SymbolValue, TupleValue>;
  explicit Value(Data d) : data_(std::move(d)) {}
  Data data_;
};

const char* kindName(Value::Kind kind);

/// IEEE total order on doubles (-0.0 before +0.0, NaNs at the ends).
std::strong_ordering orderReal(double a, double b);

/// Shortest round-trippable decimal form of a real, always recognisable as a real.
std::string formatReal(double v);

}  // namespace carma
