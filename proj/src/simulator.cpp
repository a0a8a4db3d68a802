#include "carma/simulator.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <thread>

#include "carma/hashing.hpp"

namespace carma {

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) { return Rng(hashing::mix(seed ^ hashing::mix(index))); }

double Rng::uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

std::optional<Step> step(const SystemState& s, Rng& rng) {
  TransitionSet set(s);
  const double total = set.totalRate();
  if (set.size() == 0 || !(total > 0.0)) return std::nullopt;
  Step out;
  out.delay = -std::log(rng.uniform()) / total;
  const double target = rng.uniform() * total;
  std::size_t pick = set.size() - 1;
  double acc = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    acc += set.rate(i);
    if (target < acc) {
      pick = i;
      break;
    }
  }
  out.next = set.target(pick);
  out.label = set.label(pick);
  return out;
}

double evaluateMeasure(const Measure& m, const SystemState& s) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  double count = 0.0, sum = 0.0;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& [c, k] : s.collective.entries()) {
    EvalScope scope = EvalScope::own(c->store());
    scope.behaviour = c->process().get();
    scope.global = &s.global;
    scope.collective = &s.collective;
    if (!evalPredicate(m.filter, scope)) continue;
    if (m.kind == MeasureKind::Count) {
      count += k;
      continue;
    }
    const Value* v = c->store().find(*m.attribute);
    if (!v || !v->isNumeric()) continue;
    double x = v->asReal();
    count += k;
    sum += k * x;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  switch (m.kind) {
    case MeasureKind::Count: return count;
    case MeasureKind::Sum: return sum;
    case MeasureKind::Avg: return count > 0 ? sum / count : nan;
    case MeasureKind::Min: return count > 0 ? lo : nan;
    case MeasureKind::Max: return count > 0 ? hi : nan;
  }
  return nan;
}

SimulationError::SimulationError(const ModelError& cause, std::uint32_t replication, double time)
    : ModelError(cause.kind(), "replication " + std::to_string(replication) + " at time " + formatReal(time) + ": " +
                                   cause.what()),
      replication_(replication),
      time_(time) {}

namespace {

struct Replica {
  std::vector<std::vector<double>> samples;  // [measure][grid point]
  std::uint64_t steps = 0;
};

Replica runReplication(const std::shared_ptr<const Model>& model, const SimulationConfig& cfg,
                       const std::vector<std::vector<double>>& grids, std::uint32_t index) {
  const auto& measures = model->measures;
  Replica out;
  out.samples.resize(measures.size());
  std::vector<std::size_t> next(measures.size(), 0);
  Rng rng = Rng::stream(cfg.seed, index);
  double time = 0.0;
  SystemState state;
  try {
    state = SystemState::initial(model);
    if (cfg.observer) cfg.observer(index, time, state, nullptr);
    auto record = [&](double until, bool inclusive) {
      for (std::size_t m = 0; m < measures.size(); ++m) {
        const auto& g = grids[m];
        while (next[m] < g.size() && (g[next[m]] < until || (inclusive && g[next[m]] <= until))) {
          out.samples[m].push_back(evaluateMeasure(measures[m], state));
          ++next[m];
        }
      }
    };
    while (true) {
      std::optional<Step> s = step(state, rng);
      if (!s || time + s->delay > cfg.stopTime) {
        record(cfg.stopTime, true);
        break;
      }
      double when = time + s->delay;
      record(when, false);
      time = when;
      state = std::move(s->next);
      ++out.steps;
      if (cfg.observer) cfg.observer(index, time, state, &s->label);
    }
  } catch (const ModelError& err) {
    throw SimulationError(err, index, time);
  }
  return out;
}

}  // namespace

SimulationResult simulate(std::shared_ptr<const Model> model, const SimulationConfig& config) {
  const auto& measures = model->measures;
  std::vector<std::vector<double>> grids;
  for (const auto& m : measures) {
    std::vector<double> g;
    for (std::uint32_t i = 0; i < m.samples; ++i) {
      double t = m.gridPoint(i);
      if (t <= config.stopTime) g.push_back(t);
    }
    grids.push_back(std::move(g));
  }

  const std::uint32_t n = config.replications;
  std::vector<Replica> replicas(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::uint32_t> cursor{0};
  auto worker = [&] {
    for (std::uint32_t i = cursor++; i < n; i = cursor++) {
      try {
        replicas[i] = runReplication(model, config, grids, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, n));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SimulationResult result;
  for (const auto& r : replicas) result.steps.push_back(r.steps);
  for (std::size_t m = 0; m < measures.size(); ++m) {
    MeasureSeries s;
    s.name = measures[m].name;
    s.times = grids[m];
    const std::size_t points = s.times.size();
    s.mean.assign(points, 0.0);
    s.variance.assign(points, 0.0);
    std::vector<double> m2(points, 0.0);
    // Welford, in replication order.
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto& xs = replicas[i].samples[m];
      for (std::size_t p = 0; p < points; ++p) {
        double delta = xs[p] - s.mean[p];
        s.mean[p] += delta / (i + 1);
        m2[p] += delta * (xs[p] - s.mean[p]);
      }
      s.samples.push_back(xs);
    }
    for (std::size_t p = 0; p < points; ++p) s.variance[p] = n > 1 ? m2[p] / (n - 1) : 0.0;
    result.measures.push_back(std::move(s));
  }
  return result;
}

namespace {

std::string cell(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void writeSummaryCsv(std::ostream& os, const SimulationResult& r) {
  os << "time";
  for (const auto& m : r.measures) os << ',' << m.name << "_mean," << m.name << "_var";
  os << '\n';
  std::map<double, std::vector<std::pair<std::size_t, std::size_t>>> rows;  // time -> (measure, point)
  for (std::size_t m = 0; m < r.measures.size(); ++m) {
    for (std::size_t p = 0; p < r.measures[m].times.size(); ++p) rows[r.measures[m].times[p]].emplace_back(m, p);
  }
  for (const auto& [t, cells] : rows) {
    std::vector<std::string> line(2 * r.measures.size());
    for (const auto& [m, p] : cells) {
      line[2 * m] = cell(r.measures[m].mean[p]);
      line[2 * m + 1] = cell(r.measures[m].variance[p]);
    }
    os << cell(t);
    for (const auto& c : line) os << ',' << c;
    os << '\n';
  }
}

void writeRawCsv(std::ostream& os, const SimulationResult& r) {
  os << "replication,measure,time,value\n";
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    for (const auto& m : r.measures) {
      for (std::size_t p = 0; p < m.times.size(); ++p) {
        os << i << ',' << m.name << ',' << cell(m.times[p]) << ',' << cell(m.samples[i][p]) << '\n';
      }
    }
  }
}

}  // namespace carma
