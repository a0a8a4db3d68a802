#include "carma/process.hpp"

#include <algorithm>

#include "carma/errors.hpp"
#include "carma/hashing.hpp"

namespace carma {

std::strong_ordering ActionPrefix::compare(const ActionPrefix& other) const {
  if (auto c = kind <=> other.kind; c != 0) return c;
  if (auto c = action.compare(other.action) <=> 0; c != 0) return c;
  if (auto c = predicate.compare(other.predicate); c != 0) return c;
  for (std::size_t i = 0; i < outputs.size() && i < other.outputs.size(); ++i) {
    if (auto c = outputs[i].compare(other.outputs[i]); c != 0) return c;
  }
  if (auto c = outputs.size() <=> other.outputs.size(); c != 0) return c;
  if (auto c = inputs <=> other.inputs; c != 0) return c;
  return update.compare(other.update);
}

Process::Process(Key, ProcessKind kind) : kind_(kind) {}

namespace {

const Process& lastOperand(const Process& p) {
  return p.kind() == ProcessKind::Parallel ? *p.right() : p;
}

std::uint64_t hashAction(const ActionPrefix& a) {
  std::uint64_t h = hashing::combine(hashing::mix(static_cast<std::uint64_t>(a.kind)), hashing::bytes(a.action));
  h = hashing::combine(h, a.predicate.hash());
  for (const auto& e : a.outputs) h = hashing::combine(h, e.hash());
  for (const auto& s : a.inputs) h = hashing::combine(h, s ? hashing::bytes(*s) : 7);
  for (const auto& b : a.update.branches()) {
    h = hashing::combine(h, Value::real(b.weight).hash());
    for (const auto& asg : b.assignments) {
      h = hashing::combine(h, hashing::bytes(asg.attribute));
      for (const auto& e : asg.choices) h = hashing::combine(h, e.hash());
    }
  }
  return h;
}

}  // namespace

void Process::seal() {
  std::uint64_t h = hashing::mix(static_cast<std::uint64_t>(kind_));
  if (action_) h = hashing::combine(h, hashAction(*action_));
  if (left_) h = hashing::combine(h, left_->hash());
  if (right_) h = hashing::combine(h, right_->hash());
  if (kind_ == ProcessKind::Guard) h = hashing::combine(h, guard_.hash());
  if (!name_.empty()) h = hashing::combine(h, hashing::bytes(name_));
  hash_ = h;

  canonical_ = (!left_ || left_->isCanonical()) && (!right_ || right_->isCanonical());
  if (canonical_ && kind_ == ProcessKind::Parallel) {
    canonical_ = right_->kind() != ProcessKind::Parallel && compare(lastOperand(*left_), *right_) <= 0;
  }
}

ProcessPtr Process::nil() {
  static const ProcessPtr p = [] {
    auto n = std::make_shared<Process>(Key{}, ProcessKind::Nil);
    n->seal();
    return n;
  }();
  return p;
}

ProcessPtr Process::kill() {
  static const ProcessPtr p = [] {
    auto n = std::make_shared<Process>(Key{}, ProcessKind::Kill);
    n->seal();
    return n;
  }();
  return p;
}

ProcessPtr Process::prefix(ActionPrefix action, ProcessPtr continuation) {
  auto n = std::make_shared<Process>(Key{}, ProcessKind::Prefix);
  n->action_ = std::make_shared<const ActionPrefix>(std::move(action));
  n->left_ = std::move(continuation);
  n->seal();
  return n;
}

ProcessPtr Process::choice(ProcessPtr left, ProcessPtr right) {
  auto n = std::make_shared<Process>(Key{}, ProcessKind::Choice);
  n->left_ = std::move(left);
  n->right_ = std::move(right);
  n->seal();
  return n;
}

ProcessPtr Process::parallel(ProcessPtr left, ProcessPtr right) {
  auto n = std::make_shared<Process>(Key{}, ProcessKind::Parallel);
  n->left_ = std::move(left);
  n->right_ = std::move(right);
  n->seal();
  return n;
}

ProcessPtr Process::guard(Predicate predicate, ProcessPtr body) {
  auto n = std::make_shared<Process>(Key{}, ProcessKind::Guard);
  n->guard_ = std::move(predicate);
  n->left_ = std::move(body);
  n->seal();
  return n;
}

ProcessPtr Process::constant(std::string name) {
  auto n = std::make_shared<Process>(Key{}, ProcessKind::Constant);
  n->name_ = std::move(name);
  n->seal();
  return n;
}

std::strong_ordering compare(const Process& a, const Process& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case ProcessKind::Nil:
    case ProcessKind::Kill:
      return std::strong_ordering::equal;
    case ProcessKind::Constant:
      return a.name().compare(b.name()) <=> 0;
    case ProcessKind::Prefix:
      if (auto c = a.action().compare(b.action()); c != 0) return c;
      return compare(*a.body(), *b.body());
    case ProcessKind::Guard:
      if (auto c = a.guardPredicate().compare(b.guardPredicate()); c != 0) return c;
      return compare(*a.body(), *b.body());
    case ProcessKind::Choice:
    case ProcessKind::Parallel:
      if (auto c = compare(*a.left(), *b.left()); c != 0) return c;
      return compare(*a.right(), *b.right());
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const ProcessPtr& a, const ProcessPtr& b) {
  if (a == b) return std::strong_ordering::equal;
  return compare(*a, *b);
}

namespace {

void collectOperands(const ProcessPtr& p, std::vector<ProcessPtr>& out) {
  if (p->kind() == ProcessKind::Parallel) {
    collectOperands(p->left(), out);
    collectOperands(p->right(), out);
  } else {
    out.push_back(p);
  }
}

}  // namespace

std::vector<ProcessPtr> parallelOperands(const ProcessPtr& p) {
  std::vector<ProcessPtr> out;
  collectOperands(p, out);
  return out;
}

bool hasTopLevelKill(const ProcessPtr& p) {
  switch (p->kind()) {
    case ProcessKind::Kill: return true;
    case ProcessKind::Parallel: return hasTopLevelKill(p->left()) || hasTopLevelKill(p->right());
    default: return false;
  }
}

ProcessPtr canonicalize(const ProcessPtr& p) {
  if (p->isCanonical()) return p;
  switch (p->kind()) {
    case ProcessKind::Nil:
    case ProcessKind::Kill:
    case ProcessKind::Constant:
      return p;
    case ProcessKind::Prefix:
      return Process::prefix(p->action(), canonicalize(p->body()));
    case ProcessKind::Guard:
      return Process::guard(p->guardPredicate(), canonicalize(p->body()));
    case ProcessKind::Choice:
      return Process::choice(canonicalize(p->left()), canonicalize(p->right()));
    case ProcessKind::Parallel: {
      std::vector<ProcessPtr> ops = parallelOperands(p);
      for (auto& op : ops) op = canonicalize(op);
      std::stable_sort(ops.begin(), ops.end(), [](const ProcessPtr& a, const ProcessPtr& b) { return compare(a, b) < 0; });
      ProcessPtr acc = ops.front();
      for (std::size_t i = 1; i < ops.size(); ++i) acc = Process::parallel(acc, ops[i]);
      return acc;
    }
  }
  return p;
}

bool Definitions::define(const std::string& name, ProcessPtr body) {
  return bodies_.emplace(name, std::move(body)).second;
}

const Process* Definitions::find(const std::string& name) const {
  auto it = bodies_.find(name);
  return it == bodies_.end() ? nullptr : it->second.get();
}

const ProcessPtr& Definitions::body(const std::string& name) const {
  auto it = bodies_.find(name);
  if (it == bodies_.end()) throw ModelError(ErrorKind::UndefinedConstant, "undefined process constant '" + name + "'");
  return it->second;
}

bool operator==(const Definitions& a, const Definitions& b) {
  if (a.bodies_.size() != b.bodies_.size()) return false;
  for (auto ia = a.bodies_.begin(), ib = b.bodies_.begin(); ia != a.bodies_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !equal(ia->second, ib->second)) return false;
  }
  return true;
}

}  // namespace carma
