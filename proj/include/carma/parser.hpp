#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "carma/model.hpp"

namespace carma {

/// Syntax or semantic error in a model text, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string message, std::vector<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// Parses a complete model. Throws ParseError for malformed text and for
/// semantic errors detected while parsing (undefined constants, kill
/// outside a prefix, duplicate attributes, malformed updates), and
/// ModelError for the remaining checks of validate().
Model parseModel(std::string_view source);

/// Parses a single process term; constants are not checked against definitions.
ProcessPtr parseProcess(std::string_view source, const std::vector<std::string>& symbols = {});
Expr parseExpr(std::string_view source, const std::vector<std::string>& symbols = {});

/// Prints a model in the syntax read by parseModel.
std::string printModel(const Model& m);

}  // namespace carma
