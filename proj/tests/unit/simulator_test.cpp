#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "carma/simulator.hpp"
#include "support.hpp"

using namespace carma;
using namespace testing_support;

namespace {

const char* kTwoRates = R"(
A := a*[false]<>.A + b*[false]<>.A;
component X { behaviour A }
env { rate a* = 1.0; rate b* = 3.0; }
system { X }
)";

std::string csv(const std::shared_ptr<const Model>& m, SimulationConfig cfg) {
  std::ostringstream os;
  writeSummaryCsv(os, simulate(m, cfg));
  return os.str();
}

}  // namespace

TEST(Step, Absorbing) {
  Rng rng(1);
  EXPECT_FALSE(step(SystemState::initial(model("component X { behaviour nil }\nsystem { X }")), rng));
}

TEST(Step, MeanDelay) {
  auto m = model("A := a*[false]<>.A;\ncomponent X { behaviour A }\nenv { rate a* = 2.0; }\nsystem { X }");
  Rng rng(3);
  SystemState s = SystemState::initial(m);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += step(s, rng)->delay;
  // Exp(2): mean 1/2, standard deviation 1/2.
  EXPECT_NEAR(sum / n, 0.5, 3 * 0.5 / std::sqrt(n));
}

TEST(Step, RaceFrequency) {
  auto m = model(kTwoRates);
  Rng rng(11);
  SystemState s = SystemState::initial(m);
  const int n = 100000;
  int fast = 0;
  for (int i = 0; i < n; ++i) fast += step(s, rng)->label.action == "b";
  EXPECT_NEAR(static_cast<double>(fast) / n, 0.75, 3 * std::sqrt(0.75 * 0.25 / n));
}

TEST(Rng, UniformIsOpen) {
  Rng rng(0);
  for (int i = 0; i < 100000; ++i) {
    double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, StreamsAreReproducible) {
  Rng a = Rng::stream(42, 3), b = Rng::stream(42, 3), c = Rng::stream(42, 4);
  std::uint64_t x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
}

TEST(Simulate, Deterministic) {
  auto m = model(readModel("tiny.carma"));
  SimulationConfig cfg;
  cfg.seed = 9;
  cfg.replications = 8;
  cfg.stopTime = 10.0;
  std::string one = csv(m, cfg);
  EXPECT_EQ(one, csv(m, cfg));
  cfg.jobs = 3;
  EXPECT_EQ(one, csv(m, cfg));
  cfg.seed = 10;
  EXPECT_NE(one, csv(m, cfg));
}

TEST(Simulate, StationsNeverChange) {
  auto m = model(readModel("bikes.carma") + "measure stations = count[zone == z0 && bikes >= 0] @ [0 : 50 : 11];\n");
  SimulationConfig cfg;
  cfg.seed = 1;
  cfg.replications = 2;
  cfg.stopTime = 50.0;
  SimulationResult r = simulate(m, cfg);
  const MeasureSeries* stations = nullptr;
  for (const auto& s : r.measures) {
    if (s.name == "stations") stations = &s;
  }
  ASSERT_NE(stations, nullptr);
  ASSERT_EQ(stations->times.size(), 11u);
  for (double v : stations->mean) EXPECT_EQ(v, 4.0);
  for (double v : stations->variance) EXPECT_EQ(v, 0.0);
}

TEST(Simulate, GridStopsAtStopTime) {
  auto m = model(readModel("tiny.carma"));
  SimulationConfig cfg;
  cfg.stopTime = 4.5;
  SimulationResult r = simulate(m, cfg);
  ASSERT_EQ(r.measures.size(), 1u);
  EXPECT_EQ(r.measures[0].times, (std::vector<double>{0, 1, 2, 3, 4}));
}

TEST(Simulate, ObserverSeesEveryTransition) {
  auto m = model(readModel("tiny.carma"));
  SimulationConfig cfg;
  cfg.stopTime = 10.0;
  std::uint64_t calls = 0;
  double last = -1.0;
  cfg.observer = [&](std::uint32_t, double t, const SystemState&, const TransitionLabel* l) {
    if (calls == 0) EXPECT_EQ(l, nullptr);
    EXPECT_GE(t, last);
    last = t;
    ++calls;
  };
  SimulationResult r = simulate(m, cfg);
  EXPECT_EQ(calls, r.steps[0] + 1);
}

TEST(Simulate, ModelErrorCarriesPosition) {
  auto m = model("A := a*[false]<>{ n := n + 1 }.A;\ncomponent X { store { n = 0 } behaviour A }\n"
                 "env { rate a* = 1.5 - sender.n; }\nsystem { X }");
  SimulationConfig cfg;
  cfg.stopTime = 1000.0;
  try {
    simulate(m, cfg);
    FAIL() << "expected an error";
  } catch (const SimulationError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidRate);
    EXPECT_EQ(e.replication(), 0u);
    EXPECT_GT(e.time(), 0.0);
  }
}

TEST(Measure, EmptySelection) {
  auto m = model(R"(
component X { store { a = 1 } behaviour nil }
system { X * 2 }
measure c = count[a > 5] @ [0 : 1 : 2];
measure s = sum[a > 5](a) @ [0 : 1 : 2];
measure lo = min[a > 5](a) @ [0 : 1 : 2];
measure hi = max[a > 5](a) @ [0 : 1 : 2];
measure mean = avg[a > 5](a) @ [0 : 1 : 2];
measure all = avg(a) @ [0 : 1 : 2];
measure missing = sum(b) @ [0 : 1 : 2];
)");
  SystemState s = SystemState::initial(m);
  const auto& ms = m->measures;
  EXPECT_EQ(evaluateMeasure(ms[0], s), 0.0);
  EXPECT_EQ(evaluateMeasure(ms[1], s), 0.0);
  EXPECT_TRUE(std::isnan(evaluateMeasure(ms[2], s)));
  EXPECT_TRUE(std::isnan(evaluateMeasure(ms[3], s)));
  EXPECT_TRUE(std::isnan(evaluateMeasure(ms[4], s)));
  EXPECT_EQ(evaluateMeasure(ms[5], s), 1.0);
  EXPECT_EQ(evaluateMeasure(ms[6], s), 0.0);
}

TEST(Measure, InState) {
  auto m = model(readModel("bikes.carma"));
  SystemState s = SystemState::initial(m);
  for (const auto& ms : m->measures) {
    if (ms.name == "bikers") EXPECT_EQ(evaluateMeasure(ms, s), 30.0);
    if (ms.name == "bikes_avg") EXPECT_EQ(evaluateMeasure(ms, s), 5.0);
  }
}

TEST(Csv, Layout) {
  auto m = model(readModel("tiny.carma"));
  SimulationConfig cfg;
  cfg.replications = 2;
  cfg.stopTime = 2.0;
  SimulationResult r = simulate(m, cfg);
  std::ostringstream summary, raw;
  writeSummaryCsv(summary, r);
  writeRawCsv(raw, r);
  EXPECT_EQ(summary.str().substr(0, summary.str().find('\n')), "time,waiting_mean,waiting_var");
  EXPECT_EQ(raw.str().substr(0, raw.str().find('\n')), "replication,measure,time,value");
  std::string rows = raw.str();
  EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), 1 + 2 * 3);
}
