#pragma once

#include <nlohmann/json.hpp>

#include "antipodal/bounds.hpp"
#include "antipodal/circle.hpp"
#include "antipodal/search.hpp"
#include "antipodal/setfamilies.hpp"
#include "antipodal/table.hpp"
#include "antipodal/theorem1.hpp"

namespace antipodal {

nlohmann::json to_json(const Params &p);
nlohmann::json to_json(const BoundTable &t);
nlohmann::json to_json(const Prop1Report &r);
nlohmann::json to_json(const TraceReport &r);
nlohmann::json to_json(const CircleReport &r);
// elapsed is omitted unless asked for, so the default rendering is stable.
nlohmann::json to_json(const SearchResult &r, bool include_elapsed = false);
nlohmann::json to_json(const std::vector<TableRow> &rows);

} // namespace antipodal
