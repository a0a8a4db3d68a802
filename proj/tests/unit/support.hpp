#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "carma/parser.hpp"
#include "carma/system_semantics.hpp"

namespace testing_support {

inline carma::Store store(std::vector<carma::Store::Binding> bs) { return carma::Store::fromBindings(std::move(bs)); }
inline carma::Value I(std::int64_t v) { return carma::Value::integer(v); }
inline carma::Value R(double v) { return carma::Value::real(v); }
inline carma::Value S(std::string s) { return carma::Value::symbol(std::move(s)); }

inline std::shared_ptr<const carma::Model> model(const std::string& text) {
  return std::make_shared<const carma::Model>(carma::parseModel(text));
}

inline std::string readModel(const std::string& name) {
  std::ifstream in(std::string(CARMA_MODELS_DIR) + "/" + name, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// A component running `process` (parsed against `m`'s symbols).
inline carma::ComponentPtr component(const carma::Model& m, const std::string& process, carma::Store s) {
  return carma::Component::active(carma::parseProcess(process, m.symbols), std::move(s));
}

}  // namespace testing_support
