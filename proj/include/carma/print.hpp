#pragma once

#include <string>

#include "carma/component.hpp"

namespace carma {

// Printers emit the concrete model syntax accepted by parseModel.

std::string printExpr(const Expr& e);
/// Payload expressions sit between `<` and `>`; comparisons and connectives
/// are parenthesised there.
std::string printPayloadExpr(const Expr& e);
std::string printUpdate(const Update& u);
std::string printAction(const ActionPrefix& a);
std::string printProcess(const ProcessPtr& p);
std::string printComponent(const ComponentPtr& c);
std::string printCollective(const Collective& n);

}  // namespace carma
