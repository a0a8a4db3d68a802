#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "carma/system_semantics.hpp"

namespace carma {

struct CtmcEdge {
  std::size_t source = 0;
  double rate = 0.0;
  Action action;
  std::size_t target = 0;
};

struct Ctmc {
  std::vector<SystemState> states;  // index = state id, 0 is the initial state
  std::vector<CtmcEdge> edges;
  bool truncated = false;
};

/// Breadth-first exploration from `initial`. Once `maxStates` states are
/// known, transitions into further states are dropped and `truncated` is set.
Ctmc exhaustiveCTMC(const SystemState& initial, std::size_t maxStates);

/// Text export: a header, the state table (`id term`) and the edge list
/// (`src rate action dst`), one item per line.
void writeCtmc(std::ostream& os, const Ctmc& ctmc);

}  // namespace carma
