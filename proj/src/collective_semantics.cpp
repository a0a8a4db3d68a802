#include "carma/collective_semantics.hpp"

#include <cmath>
#include <map>

namespace carma {

double LabelledOutputs::capacity(const Collective& n) const {
  double s = 0.0;
  for (const auto& [i, f] : senders) s += n.entries()[i].second * f.total();
  return s;
}

std::vector<LabelledOutputs> collectOutputs(const Collective& n, const ComponentSemantics& sem) {
  std::map<TransitionLabel, std::map<std::size_t, ComponentFunction>> byLabel;
  const auto entries = n.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (auto& [l, f] : sem.outputs(entries[i].first)) byLabel[l][i] += f;
  }
  std::vector<LabelledOutputs> out;
  out.reserve(byLabel.size());
  for (auto& [l, senders] : byLabel) {
    LabelledOutputs lo{l, {}};
    for (auto& [i, f] : senders) {
      if (!f.empty()) lo.senders.emplace_back(i, std::move(f));
    }
    if (!lo.senders.empty()) out.push_back(std::move(lo));
  }
  return out;
}

namespace {

using Outcome = std::pair<ComponentPtr, double>;

// Normalised broadcast response of one component; empty when the
// component can neither receive nor refuse (the whole broadcast is blocked).
struct ReceiverDist {
  std::size_t entry = 0;
  std::vector<Outcome> outcomes;  // excluding the component itself
  double stay = 0.0;              // probability of ending as itself
};

// Outcomes of `count` independent copies of one receiver: multinomial over
// its response distribution.
void multinomial(const ReceiverDist& d, const ComponentPtr& self, std::uint32_t count,
                 std::vector<std::pair<CollectiveDelta, double>>& out) {
  const std::size_t k = d.outcomes.size();
  std::vector<std::uint32_t> ns(k, 0);
  // Log-factorial table for the multinomial coefficient.
  std::vector<double> lf(count + 1, 0.0);
  for (std::uint32_t i = 1; i <= count; ++i) lf[i] = lf[i - 1] + std::log(static_cast<double>(i));
  auto rec = [&](auto& self_rec, std::size_t j, std::uint32_t left) -> void {
    if (j == k) {
      std::uint32_t stay = left;
      if (stay > 0 && d.stay == 0.0) return;
      double logw = lf[count] - lf[stay];
      double w = std::pow(d.stay, stay);
      for (std::size_t t = 0; t < k; ++t) {
        logw -= lf[ns[t]];
        w *= std::pow(d.outcomes[t].second, ns[t]);
      }
      w *= std::exp(logw);
      if (w == 0.0) return;
      CollectiveDelta delta;
      if (count > stay) delta.remove(self, count - stay);
      for (std::size_t t = 0; t < k; ++t) {
        if (ns[t] && !d.outcomes[t].first->isNull()) delta.add(d.outcomes[t].first, ns[t]);
      }
      out.emplace_back(std::move(delta), w);
      return;
    }
    for (std::uint32_t m = 0; m <= left; ++m) {
      ns[j] = m;
      self_rec(self_rec, j + 1, left - m);
    }
    ns[j] = 0;
  };
  rec(rec, 0, count);
}

void appendDelta(CollectiveDelta& into, const CollectiveDelta& d) {
  into.removed.insert(into.removed.end(), d.removed.begin(), d.removed.end());
  into.added.insert(into.added.end(), d.added.begin(), d.added.end());
}

}  // namespace

std::vector<DeltaOutcome> broadcastOutcomes(const Collective& n, const LabelledOutputs& outs, const ComponentSemantics& sem) {
  const auto entries = n.entries();
  const TransitionLabel& label = outs.label;
  std::vector<ReceiverDist> receivers;
  for (std::size_t m = 0; m < entries.size(); ++m) {
    const ComponentPtr& c = entries[m].first;
    if (!sem.canReceiveBroadcast(c, label.action)) continue;
    auto resp = sem.broadcastResponse(c, label);
    double total = resp.input.total() + resp.refusal;
    if (!(total > 0.0)) return {};
    ReceiverDist d;
    d.entry = m;
    d.stay = resp.refusal / total;
    for (const auto& [t, w] : resp.input.entries()) {
      if (equal(t, c)) {
        d.stay += w / total;
      } else {
        d.outcomes.emplace_back(t, w / total);
      }
    }
    if (!d.outcomes.empty()) receivers.push_back(std::move(d));
  }

  std::vector<DeltaOutcome> result;
  for (const auto& [k, out] : outs.senders) {
    const double copies = entries[k].second;
    // Joint receiver outcomes given that one copy of entry k is the sender.
    std::vector<std::pair<CollectiveDelta, double>> joint{{CollectiveDelta{}, 1.0}};
    for (const auto& d : receivers) {
      std::uint32_t count = entries[d.entry].second - (d.entry == k ? 1 : 0);
      if (count == 0) continue;
      std::vector<std::pair<CollectiveDelta, double>> local;
      multinomial(d, entries[d.entry].first, count, local);
      std::vector<std::pair<CollectiveDelta, double>> next;
      next.reserve(joint.size() * local.size());
      for (const auto& [ja, wa] : joint) {
        for (const auto& [la, wb] : local) {
          CollectiveDelta merged = ja;
          appendDelta(merged, la);
          next.emplace_back(std::move(merged), wa * wb);
        }
      }
      joint = std::move(next);
    }
    for (const auto& [target, w] : out.entries()) {
      for (const auto& [jd, jw] : joint) {
        DeltaOutcome o;
        o.delta.remove(entries[k].first);
        if (!target->isNull()) o.delta.add(target);
        appendDelta(o.delta, jd);
        o.weight = copies * w * jw;
        result.push_back(std::move(o));
      }
    }
  }
  return result;
}

std::vector<DeltaOutcome> unicastOutcomes(const Collective& n, const LabelledOutputs& outs, const ComponentSemantics& sem) {
  const auto entries = n.entries();
  std::vector<std::pair<std::size_t, ComponentFunction>> inputs;
  double mass = 0.0;
  for (std::size_t m = 0; m < entries.size(); ++m) {
    if (!sem.canReceiveUnicast(entries[m].first, outs.label.action)) continue;
    ComponentFunction f = sem.unicastInput(entries[m].first, outs.label);
    if (f.empty()) continue;
    mass += entries[m].second * f.total();
    inputs.emplace_back(m, std::move(f));
  }
  std::vector<DeltaOutcome> result;
  if (!(mass > 0.0)) return result;
  for (const auto& [k, out] : outs.senders) {
    for (const auto& [m, in] : inputs) {
      double pairs = static_cast<double>(entries[k].second) * (entries[m].second - (m == k ? 1 : 0));
      if (pairs == 0.0) continue;
      for (const auto& [t, wo] : out.entries()) {
        for (const auto& [u, wi] : in.entries()) {
          DeltaOutcome o;
          o.delta.remove(entries[k].first);
          o.delta.remove(entries[m].first);
          if (!t->isNull()) o.delta.add(t);
          if (!u->isNull()) o.delta.add(u);
          o.weight = pairs * wo * wi / mass;
          result.push_back(std::move(o));
        }
      }
    }
  }
  return result;
}

CollectiveFunction materialize(const Collective& n, const std::vector<DeltaOutcome>& outcomes) {
  CollectiveFunction f;
  for (const auto& o : outcomes) f.add(apply(n, o.delta), o.weight);
  return f;
}

namespace {

const LabelledOutputs* findLabel(const std::vector<LabelledOutputs>& all, const TransitionLabel& l) {
  for (const auto& lo : all) {
    if (lo.label == l) return &lo;
  }
  return nullptr;
}

}  // namespace

CollectiveFunction colBroadcastInput(const Collective& n, const TransitionLabel& out, const ComponentSemantics& sem) {
  // A receiver-only view: a broadcast with a single pseudo-sender that is
  // not part of the collective.
  CollectiveFunction f;
  if (n.empty()) return f;
  std::vector<std::pair<CollectiveDelta, double>> joint{{CollectiveDelta{}, 1.0}};
  const auto entries = n.entries();
  for (std::size_t m = 0; m < entries.size(); ++m) {
    const ComponentPtr& c = entries[m].first;
    auto resp = sem.broadcastResponse(c, out);
    double total = resp.input.total() + resp.refusal;
    if (!(total > 0.0)) return {};
    ReceiverDist d;
    d.entry = m;
    d.stay = resp.refusal / total;
    for (const auto& [t, w] : resp.input.entries()) {
      if (equal(t, c)) {
        d.stay += w / total;
      } else {
        d.outcomes.emplace_back(t, w / total);
      }
    }
    std::vector<std::pair<CollectiveDelta, double>> local;
    multinomial(d, c, entries[m].second, local);
    std::vector<std::pair<CollectiveDelta, double>> next;
    for (const auto& [ja, wa] : joint) {
      for (const auto& [la, wb] : local) {
        CollectiveDelta merged = ja;
        appendDelta(merged, la);
        next.emplace_back(std::move(merged), wa * wb);
      }
    }
    joint = std::move(next);
  }
  for (const auto& [d, w] : joint) f.add(apply(n, d), w);
  return f;
}

CollectiveFunction colBroadcastOutput(const Collective& n, const TransitionLabel& out, const ComponentSemantics& sem) {
  auto all = collectOutputs(n, sem);
  const LabelledOutputs* lo = findLabel(all, out.as(LabelKind::BroadcastOut));
  if (!lo) return {};
  return materialize(n, broadcastOutcomes(n, *lo, sem));
}

CollectiveFunction colUnicastOutput(const Collective& n, const TransitionLabel& out, const ComponentSemantics& sem) {
  auto all = collectOutputs(n, sem);
  const LabelledOutputs* lo = findLabel(all, out.as(LabelKind::UnicastOut));
  CollectiveFunction f;
  if (!lo) return f;
  for (const auto& [k, fo] : lo->senders) {
    for (const auto& [t, w] : fo.entries()) {
      CollectiveDelta d;
      d.remove(n.entries()[k].first);
      if (!t->isNull()) d.add(t);
      f.add(apply(n, d), n.entries()[k].second * w);
    }
  }
  return f;
}

CollectiveFunction colUnicastInput(const Collective& n, const TransitionLabel& out, const ComponentSemantics& sem) {
  CollectiveFunction f;
  for (const auto& [c, k] : n.entries()) {
    ComponentFunction in = sem.unicastInput(c, out);
    for (const auto& [t, w] : in.entries()) {
      CollectiveDelta d;
      d.remove(c);
      if (!t->isNull()) d.add(t);
      f.add(apply(n, d), k * w);
    }
  }
  return f;
}

CollectiveFunction colUnicastSync(const Collective& n, const TransitionLabel& out, const ComponentSemantics& sem) {
  auto all = collectOutputs(n, sem);
  const LabelledOutputs* lo = findLabel(all, out.as(LabelKind::UnicastOut));
  if (!lo) return {};
  return materialize(n, unicastOutcomes(n, *lo, sem));
}

}  // namespace carma
