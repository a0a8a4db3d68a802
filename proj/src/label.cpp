#include "carma/label.hpp"

#include <cmath>

#include "carma/errors.hpp"
#include "carma/print.hpp"

namespace carma {

const char* labelKindName(LabelKind k) {
  switch (k) {
    case LabelKind::BroadcastOut: return "bout";
    case LabelKind::BroadcastIn: return "bin";
    case LabelKind::UnicastOut: return "out";
    case LabelKind::UnicastIn: return "in";
    case LabelKind::UnicastSync: return "sync";
    case LabelKind::Refusal: return "refuse";
  }
  return "?";
}

TransitionLabel TransitionLabel::as(LabelKind k) const {
  TransitionLabel l = *this;
  l.kind = k;
  return l;
}

std::strong_ordering TransitionLabel::compare(const TransitionLabel& other) const {
  if (auto c = kind <=> other.kind; c != 0) return c;
  if (auto c = action.compare(other.action) <=> 0; c != 0) return c;
  if (auto c = sender.compare(other.sender); c != 0) return c;
  if (auto c = predicate.compare(other.predicate); c != 0) return c;
  return values <=> other.values;
}

std::string TransitionLabel::toString() const {
  std::string s = std::string(labelKindName(kind)) + " " + actionType().toString() + "[" + printExpr(predicate) + "]<";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += values[i].toString();
  }
  return s + ">" + sender.toString();
}

EvaluationContext EvaluationContext::defaults(const Store& global) {
  EvaluationContext e;
  e.prob = [](const Store&, const Store&, const Action&) { return 1.0; };
  e.rate = [](const Store&, const Action&) { return 1.0; };
  e.update = [global](const Store&, const Action&) { return EnvironmentEffect{{{global, 1.0}}, Collective()}; };
  return e;
}

double EvaluationContext::probability(const Store& sender, const Store& receiver, const Action& a) const {
  double p = prob(sender, receiver, a);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ModelError(ErrorKind::InvalidProbability,
                     "probability of " + a.toString() + " is " + formatReal(p) + ", outside [0, 1]");
  }
  return p;
}

double EvaluationContext::rateOf(const Store& sender, const Action& a) const {
  double r = rate(sender, a);
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw ModelError(ErrorKind::InvalidRate, "rate of " + a.toString() + " is " + formatReal(r));
  }
  return r;
}

EnvironmentEffect EvaluationContext::effect(const Store& sender, const Action& a) const { return update(sender, a); }

}  // namespace carma
