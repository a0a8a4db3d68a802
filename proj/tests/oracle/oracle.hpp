#pragma once

// Brute-force reference semantics. Every rule of the component, collective
// and system tables is applied literally: components are kept as written
// (no flattening of `|`), collectives are explicit binary trees, and weighted
// functions are maps keyed by the printed term. States are canonicalised
// only when a derivation is complete.

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "carma/label.hpp"
#include "carma/model.hpp"

namespace oracle {

struct Term {
  carma::ProcessPtr process;  // null for the inactive component
  carma::Store store;

  bool isNull() const { return !process; }
  std::string key() const;
};

/// A collective as an explicit binary tree.
struct Tree {
  std::shared_ptr<const Tree> left, right;
  Term leaf;  // only when left and right are null

  bool isLeaf() const { return !left; }
};
using TreePtr = std::shared_ptr<const Tree>;

TreePtr leaf(Term t);
TreePtr join(TreePtr a, TreePtr b);
/// Balanced tree over the terms in the given order.
TreePtr balanced(const std::vector<Term>& terms);
/// Random order of the terms and random split points.
TreePtr shuffled(std::vector<Term> terms, std::mt19937_64& rng);

/// System-level transitions of one state, keyed by (label, canonical target)
/// and summed. `tree` must be the collective of the state in some shape.
using TransitionMap = std::map<std::pair<std::string, std::string>, double>;
TransitionMap transitions(const carma::Model& model, const TreePtr& tree, const carma::Store& global);

/// Output labels enumerated from the leaves of a tree, with the sum of the
/// rates mu_r of the prefixes generating each label.
std::map<carma::TransitionLabel, double> outputCapacity(const carma::Model& model, const TreePtr& tree,
                                                        const carma::Store& global);

/// Reachable chain with edges keyed by (source, action, target).
struct Chain {
  std::set<std::string> states;
  std::map<std::tuple<std::string, std::string, std::string>, double> edges;
  bool truncated = false;
};

Chain explore(const std::shared_ptr<const carma::Model>& model, std::size_t maxStates);

/// Canonical print of a state, as used by the engine.
std::string stateKey(const std::shared_ptr<const carma::Model>& model, const std::vector<Term>& leaves,
                     const carma::Store& global);

/// The leaves of the canonical collective (one term per copy).
std::vector<Term> termsOf(const carma::Collective& n);

}  // namespace oracle
