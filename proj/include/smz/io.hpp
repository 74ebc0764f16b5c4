#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "smz/shapes.hpp"

namespace smz {

// "[.,1,2;.,1;2,2]", with '.' for cells of the inner shape.
std::string tableau_str(const Tableau<int>& t);

// Accepts {"rows": [[null,1,2],[null,1],[2,2]]}, a bare array of such rows, or
// {"shape": "3 2 / 1", "values": [...]} with values in row-major cell order.
Tableau<int> tableau_from_json(const nlohmann::json& j);
nlohmann::json tableau_to_json(const Tableau<int>& t);

// {"-1": 2, "0": 3}
std::map<int, int> diag_from_json(const nlohmann::json& j);

}  // namespace smz
