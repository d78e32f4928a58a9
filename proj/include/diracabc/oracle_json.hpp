#pragma once

// JSON form of OracleReport. Kept out of oracle.hpp so the core headers do
// not depend on the vendored nlohmann/json.

#include <json.hpp>

#include "diracabc/oracle.hpp"

namespace diracabc {

inline void to_json(nlohmann::json& j, const GridSpec& g) {
    j = nlohmann::json{{"x_min", g.x_min}, {"x_max", g.x_max}, {"points", g.points}};
}

inline void to_json(nlohmann::json& j, const OracleReport& r) {
    j = nlohmann::json{{"eigenvalues", r.eigenvalues},
                       {"matched_index", r.matched_index},
                       {"eigenvalue_error", r.eigenvalue_error},
                       {"overlap", r.overlap},
                       {"residual_max", r.residual_max},
                       {"unverified", r.unverified},
                       {"grid", r.grid}};
}

} // namespace diracabc
