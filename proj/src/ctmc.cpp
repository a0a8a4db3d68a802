#include "carma/ctmc.hpp"

#include <cstdio>
#include <deque>
#include <map>

namespace carma {

Ctmc exhaustiveCTMC(const SystemState& initial, std::size_t maxStates) {
  Ctmc out;
  std::map<SystemState, std::size_t> ids;
  std::deque<std::size_t> frontier;
  ids.emplace(initial, 0);
  out.states.push_back(initial);
  frontier.push_back(0);
  while (!frontier.empty()) {
    std::size_t src = frontier.front();
    frontier.pop_front();
    for (auto& t : systemTransitions(out.states[src])) {
      auto it = ids.find(t.target);
      if (it == ids.end()) {
        if (out.states.size() >= maxStates) {
          out.truncated = true;
          continue;
        }
        it = ids.emplace(t.target, out.states.size()).first;
        out.states.push_back(t.target);
        frontier.push_back(it->second);
      }
      out.edges.push_back(CtmcEdge{src, t.rate, t.label.actionType(), it->second});
    }
  }
  return out;
}

void writeCtmc(std::ostream& os, const Ctmc& ctmc) {
  os << "states " << ctmc.states.size() << '\n';
  os << "truncated " << (ctmc.truncated ? "yes" : "no") << '\n';
  for (std::size_t i = 0; i < ctmc.states.size(); ++i) os << i << ' ' << ctmc.states[i].toString() << '\n';
  os << "edges " << ctmc.edges.size() << '\n';
  char buf[64];
  for (const auto& e : ctmc.edges) {
    std::snprintf(buf, sizeof buf, "%.17g", e.rate);
    os << e.source << ' ' << buf << ' ' << e.action.toString() << ' ' << e.target << '\n';
  }
}

}  // namespace carma
