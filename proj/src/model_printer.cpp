#include "carma/parser.hpp"
#include "carma/print.hpp"

namespace carma {

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out;
}

std::string bindings(const std::vector<std::pair<std::string, Expr>>& bs) {
  if (bs.empty()) return "{ }";
  std::vector<std::string> parts;
  for (const auto& [a, e] : bs) parts.push_back(a + " = " + printExpr(e));
  return "{ " + join(parts) + " }";
}

std::string instance(const InstanceSpec& s) {
  std::string out = s.component;
  if (!s.args.empty()) {
    std::vector<std::string> args;
    for (const auto& e : s.args) args.push_back(printExpr(e));
    out += "(" + join(args) + ")";
  }
  if (s.count != 1) out += " * " + std::to_string(s.count);
  return out;
}

std::string instances(const std::vector<InstanceSpec>& specs) {
  std::vector<std::string> parts;
  for (const auto& s : specs) parts.push_back(instance(s));
  return parts.empty() ? "{ }" : "{ " + join(parts) + " }";
}

std::string guard(const Predicate& g) { return g.isTop() ? "" : " [" + printExpr(g) + "]"; }

}  // namespace

std::string printModel(const Model& m) {
  std::string out;
  if (!m.symbols.empty()) out += "symbols " + join(m.symbols) + ";\n\n";

  for (const auto& [name, body] : m.definitions.all()) out += name + " := " + printProcess(body) + ";\n";
  if (!m.definitions.all().empty()) out += "\n";

  for (const auto& c : m.components) {
    out += "component " + c.name;
    if (!c.params.empty()) out += "(" + join(c.params) + ")";
    out += " {\n  store " + bindings(c.store) + "\n  behaviour " + printProcess(c.behaviour) + "\n}\n\n";
  }

  const auto& env = m.environment;
  if (!env.global.empty() || !env.rates.empty() || !env.probs.empty() || !env.updates.empty()) {
    out += "env {\n";
    if (!env.global.empty()) out += "  global " + bindings(env.global) + ";\n";
    for (const auto& r : env.rates) {
      out += "  rate " + r.pattern.toString() + guard(r.guard) + " = " + printExpr(r.value) + ";\n";
    }
    for (const auto& r : env.probs) {
      out += "  prob " + r.pattern.toString() + guard(r.guard) + " = " + printExpr(r.value) + ";\n";
    }
    for (const auto& r : env.updates) {
      out += "  update " + r.pattern.toString() + guard(r.guard) + " " + printUpdate(r.update);
      if (!r.spawn.empty()) out += " spawn " + instances(r.spawn);
      out += ";\n";
    }
    out += "}\n\n";
  }

  out += "system " + instances(m.system) + "\n";

  if (!m.measures.empty()) out += "\n";
  for (const auto& ms : m.measures) {
    out += "measure " + ms.name + " = " + measureKindName(ms.kind);
    if (!ms.filter.isTop()) out += "[" + printExpr(ms.filter) + "]";
    if (ms.attribute) out += "(" + *ms.attribute + ")";
    out += " @ [" + formatReal(ms.start) + " : " + formatReal(ms.end) + " : " + std::to_string(ms.samples) + "];\n";
  }
  return out;
}

}  // namespace carma
