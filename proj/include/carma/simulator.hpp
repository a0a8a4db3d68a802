#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "carma/errors.hpp"
#include "carma/system_semantics.hpp"

namespace carma {

/// 64-bit Mersenne Twister with documented stream derivation: replication
/// i of seed s is seeded with splitmix64(s ^ splitmix64(i)).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in (0, 1): ((x >> 11) + 0.5) / 2^53. Never 0 or 1.
  double uniform();

 private:
  std::mt19937_64 engine_;
};

struct Step {
  double delay = 0.0;
  SystemState next;
  TransitionLabel label;
};

/// One step of the race: delay ~ Exp(R) from the first draw, transition
/// selected with probability rate/R from the second. Empty when absorbing.
std::optional<Step> step(const SystemState& s, Rng& rng);

/// Value of a measure on a state. count and sum of an empty selection are
/// 0; min, max and avg of an empty selection are NaN. Components that pass
/// the filter but lack the attribute are skipped.
double evaluateMeasure(const Measure& m, const SystemState& s);

struct SimulationConfig {
  std::uint64_t seed = 0;
  std::uint32_t replications = 1;
  double stopTime = 1.0;
  unsigned jobs = 1;
  /// Called after the initial state (label null, time 0) and after every
  /// transition, from the thread running the replication.
  std::function<void(std::uint32_t replication, double time, const SystemState&, const TransitionLabel*)> observer;
};

struct MeasureSeries {
  std::string name;
  std::vector<double> times;                 // grid points not after the stop time
  std::vector<std::vector<double>> samples;  // [replication][grid point]
  std::vector<double> mean;
  std::vector<double> variance;              // unbiased; 0 for one replication
};

struct SimulationResult {
  std::vector<MeasureSeries> measures;
  std::vector<std::uint64_t> steps;  // transitions per replication
};

/// Raised when a replication hits a model error; carries where it happened.
class SimulationError : public ModelError {
 public:
  SimulationError(const ModelError& cause, std::uint32_t replication, double time);
  std::uint32_t replication() const { return replication_; }
  double time() const { return time_; }

 private:
  std::uint32_t replication_;
  double time_;
};

SimulationResult simulate(std::shared_ptr<const Model> model, const SimulationConfig& config);

/// `time,<m>_mean,<m>_var,...`, one row per grid time of any measure; cells
/// of measures without that grid point are empty. Values use %.9g.
void writeSummaryCsv(std::ostream& os, const SimulationResult& r);
/// `replication,measure,time,value`, one row per sample.
void writeRawCsv(std::ostream& os, const SimulationResult& r);

}  // namespace carma
