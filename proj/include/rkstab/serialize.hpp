#pragma once

#include <json.hpp>

#include "rkstab/bounds.hpp"
#include "rkstab/optimal.hpp"
#include "rkstab/quadrature.hpp"

namespace rkstab {

nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const ThresholdBracket& b);
nlohmann::json to_json(const QuadRule& q);
nlohmann::json to_json(const OptimalResult& r);

}  // namespace rkstab
