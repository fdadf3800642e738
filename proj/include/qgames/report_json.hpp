// report_json.hpp
// JSON form of the equilibrium report emitted by the solve command.

#pragma once

#include <string>

#include "qgames/gamedef.hpp"
#include "qgames/solvers.hpp"

namespace qgames {

std::string equilibrium_report_to_json(const StrategicGame& game,
                                       const EquilibriumReport& report);
EquilibriumReport parse_equilibrium_report_json(const std::string& text);

}  // namespace qgames
