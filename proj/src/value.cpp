#include <bit>
#include <limits>
#include "carma/value.hpp"

#include <charconv>
#include <cmath>
#include <cstring>

#include "carma/errors.hpp"
#include "carma/hashing.hpp"

namespace carma {

const char* errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnboundName: return "unbound name";
    case ErrorKind::UnboundAttribute: return "unbound attribute";
    case ErrorKind::TypeMismatch: return "type mismatch";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::ArityMismatch: return "arity mismatch";
    case ErrorKind::InvalidRate: return "invalid rate";
    case ErrorKind::InvalidProbability: return "invalid probability";
    case ErrorKind::MalformedUpdate: return "malformed update";
    case ErrorKind::UndefinedConstant: return "undefined constant";
    case ErrorKind::UnguardedRecursion: return "unguarded recursion";
    case ErrorKind::DuplicateAttribute: return "duplicate attribute";
    case ErrorKind::Semantic: return "semantic error";
  }
  return "error";
}

const char* kindName(Value::Kind kind) {
  switch (kind) {
    case Value::Kind::Integer: return "integer";
    case Value::Kind::Real: return "real";
    case Value::Kind::Boolean: return "boolean";
    case Value::Kind::Unit: return "unit";
    case Value::Kind::Symbol: return "symbol";
    case Value::Kind::Tuple: return "tuple";
  }
  return "?";
}

namespace {

[[noreturn]] void wrongKind(Value::Kind expected, const Value& v) {
  throw ModelError(ErrorKind::TypeMismatch, std::string("expected ") + kindName(expected) + ", got " +
                                                kindName(v.kind()) + " '" + v.toString() + "'");
}

}  // namespace

std::int64_t Value::asInteger() const {
  if (auto* p = std::get_if<std::int64_t>(&data_)) return *p;
  wrongKind(Kind::Integer, *this);
}

double Value::asReal() const {
  if (auto* p = std::get_if<double>(&data_)) return *p;
  if (auto* p = std::get_if<std::int64_t>(&data_)) return static_cast<double>(*p);
  wrongKind(Kind::Real, *this);
}

bool Value::asBoolean() const {
  if (auto* p = std::get_if<bool>(&data_)) return *p;
  wrongKind(Kind::Boolean, *this);
}

const std::string& Value::asSymbol() const {
  if (auto* p = std::get_if<SymbolValue>(&data_)) return p->name;
  wrongKind(Kind::Symbol, *this);
}

const std::vector<Value>& Value::asTuple() const {
  if (auto* p = std::get_if<TupleValue>(&data_)) return p->items;
  wrongKind(Kind::Tuple, *this);
}

std::strong_ordering Value::compare(const Value& other) const {
  if (auto c = data_.index() <=> other.data_.index(); c != 0) return c;
  switch (kind()) {
    case Kind::Integer: return std::get<0>(data_) <=> std::get<0>(other.data_);
    case Kind::Real: return orderReal(std::get<1>(data_), std::get<1>(other.data_));
    case Kind::Boolean: return std::get<2>(data_) <=> std::get<2>(other.data_);
    case Kind::Unit: return std::strong_ordering::equal;
    case Kind::Symbol: return std::get<4>(data_).name.compare(std::get<4>(other.data_).name) <=> 0;
    case Kind::Tuple: {
      const auto& a = std::get<5>(data_).items;
      const auto& b = std::get<5>(other.data_).items;
      for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (auto c = a[i].compare(b[i]); c != 0) return c;
      }
      return a.size() <=> b.size();
    }
  }
  return std::strong_ordering::equal;
}

std::uint64_t Value::hash() const {
  std::uint64_t h = hashing::mix(data_.index());
  switch (kind()) {
    case Kind::Integer: return hashing::combine(h, static_cast<std::uint64_t>(std::get<0>(data_)));
    case Kind::Real: {
      double d = std::get<1>(data_);
      std::uint64_t bits;
      static_assert(sizeof bits == sizeof d);
      std::memcpy(&bits, &d, sizeof d);
      return hashing::combine(h, bits);
    }
    case Kind::Boolean: return hashing::combine(h, std::get<2>(data_) ? 1 : 0);
    case Kind::Unit: return h;
    case Kind::Symbol: return hashing::combine(h, hashing::bytes(std::get<4>(data_).name));
    case Kind::Tuple:
      for (const auto& item : std::get<5>(data_).items) h = hashing::combine(h, item.hash());
      return h;
  }
  return h;
}

std::strong_ordering orderReal(double a, double b) {
  auto key = [](double x) {
    auto bits = std::bit_cast<std::int64_t>(x);
    return bits < 0 ? bits ^ std::numeric_limits<std::int64_t>::max() : bits;
  };
  return key(a) <=> key(b);
}

std::string formatReal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

std::string Value::toString() const {
  switch (kind()) {
    case Kind::Integer: return std::to_string(std::get<0>(data_));
    case Kind::Real: return formatReal(std::get<1>(data_));
    case Kind::Boolean: return std::get<2>(data_) ? "true" : "false";
    case Kind::Unit: return "unit";
    case Kind::Symbol: return std::get<4>(data_).name;
    case Kind::Tuple: {
      const auto& items = std::get<5>(data_).items;
      std::string s = "(";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ", ";
        s += items[i].toString();
      }
      // A one-element tuple needs a trailing comma to stay distinct from a parenthesised value.
      if (items.size() == 1) s += ",";
      return s + ")";
    }
  }
  return "?";
}

}  // namespace carma
