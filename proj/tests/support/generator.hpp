#pragma once

// Random model texts for the property tests.

#include <cstdint>
#include <random>
#include <string>

namespace gen {

struct SemanticOptions {
  int minComponents = 2;
  int maxComponents = 6;
  int actions = 3;  // drawn from a, b, c
  bool global = true;
  bool spawn = false;
};

/// A small closed model with bounded stores (x in 0..2), guarded choices,
/// kill, broadcast and unicast actions with payloads, and environment rules
/// that read the sender, the receiver and the global store.
std::string semanticModel(std::mt19937_64& rng, const SemanticOptions& opt = {});

/// A model that uses as much of the concrete syntax as possible. It is
/// valid but not meant to be run.
std::string syntaxModel(std::mt19937_64& rng);

}  // namespace gen
