#pragma once

#include <string>

#include "json.hpp"

#include "dessinator/dessin.hpp"
#include "dessinator/fpgroup.hpp"

namespace dessinator {

using Json = nlohmann::ordered_json;

/// {"edges": m, "sigma": "(0 1 2)", "tau": "(0 1)"} with canonical cycle
/// strings on output; input also accepts image arrays like "[1,2,0]".
Json dessin_to_json(const Dessin& d);
Dessin dessin_from_json(const Json& j);

Dessin load_dessin(const std::string& path);
void save_dessin(const Dessin& d, const std::string& path);

/// {"index": n, "actions": {"x": "(...)", ...}}
Json coset_table_to_json(const CosetTable& t, const std::vector<std::string>& names);
CosetTable coset_table_from_json(const Json& j, std::vector<std::string>* names = nullptr);

}  // namespace dessinator
