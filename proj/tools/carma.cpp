// carma: check, explore and simulate CARMA models.

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "carma/ctmc.hpp"
#include "carma/parser.hpp"
#include "carma/simulator.hpp"

namespace {

constexpr int kModelError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void setupLogging() {
  auto logger = spdlog::stderr_color_mt("carma");
  logger->set_pattern("carma: %l: %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("CARMA_LOG")) {
    std::string v = env;
    if (v == "error" || v == "warn" || v == "info" || v == "debug") {
      spdlog::set_level(spdlog::level::from_str(v));
    } else {
      spdlog::warn("ignoring CARMA_LOG={}; expected error, warn, info or debug", v);
    }
  }
}

std::shared_ptr<const carma::Model> load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto model = std::make_shared<const carma::Model>(carma::parseModel(buf.str()));
  spdlog::info("{}: {} definitions, {} components, {} instance groups, {} measures", path,
               model->definitions.all().size(), model->components.size(), model->system.size(),
               model->measures.size());
  return model;
}

// Writes to `target`, or to standard output when it is "-".
template <typename F>
void emit(const std::string& target, F&& write) {
  if (target == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) throw UsageError("cannot write " + target);
  write(out);
}

}  // namespace

int main(int argc, char** argv) {
  setupLogging();

  CLI::App app{"CARMA model checker, state-space exporter and simulator"};
  app.require_subcommand(1);

  std::string path;
  std::string out = "-";

  auto* check = app.add_subcommand("check", "Parse and validate a model");
  check->add_option("model", path, "Model file")->required();

  std::size_t maxStates = 10000;
  auto* states = app.add_subcommand("states", "Export the reachable CTMC");
  states->add_option("model", path, "Model file")->required();
  states->add_option("--max-states", maxStates, "Stop exploring after this many states")->check(CLI::PositiveNumber);
  states->add_option("--out", out, "Output file, - for standard output");

  carma::SimulationConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  bool raw = false;
  auto* simulate = app.add_subcommand("simulate", "Run replications and write measure statistics as CSV");
  simulate->add_option("model", path, "Model file")->required();
  simulate->add_option("--seed", cfg.seed, "Random seed");
  simulate->add_option("--replications", cfg.replications, "Number of replications")->check(CLI::PositiveNumber);
  simulate->add_option("--stop-time", cfg.stopTime, "Simulated time horizon")->check(CLI::NonNegativeNumber);
  simulate->add_option("--jobs", cfg.jobs, "Concurrent replications")->check(CLI::PositiveNumber);
  simulate->add_option("--out", out, "Output file, - for standard output");
  simulate->add_flag("--raw", raw, "One row per replication sample instead of mean and variance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    auto model = load(path);
    if (*check) {
      std::cout << path << ": ok\n";
    } else if (*states) {
      auto start = std::chrono::steady_clock::now();
      carma::Ctmc ctmc = carma::exhaustiveCTMC(carma::SystemState::initial(model), maxStates);
      std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      spdlog::info("{} states, {} edges in {:.3f} s", ctmc.states.size(), ctmc.edges.size(), took.count());
      if (ctmc.truncated) spdlog::warn("state space truncated at {} states", maxStates);
      emit(out, [&](std::ostream& os) { carma::writeCtmc(os, ctmc); });
    } else if (*simulate) {
      auto start = std::chrono::steady_clock::now();
      carma::SimulationResult r = carma::simulate(model, cfg);
      std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      std::uint64_t steps = 0;
      for (auto s : r.steps) steps += s;
      spdlog::info("{} replications, {} transitions in {:.3f} s", cfg.replications, steps, took.count());
      if (model->measures.empty()) spdlog::warn("{} declares no measures", path);
      emit(out, [&](std::ostream& os) {
        if (raw) {
          carma::writeRawCsv(os, r);
        } else {
          carma::writeSummaryCsv(os, r);
        }
      });
    }
  } catch (const UsageError& e) {
    std::cerr << "carma: " << e.what() << "\n";
    return kUsageError;
  } catch (const carma::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kModelError;
  } catch (const carma::ModelError& e) {
    std::cerr << path << ": " << carma::errorKindName(e.kind()) << ": " << e.what() << "\n";
    return kModelError;
  }
  return 0;
}
