#pragma once

#include <string>

#include <json.hpp>

#include "motcalc/rank_table.hpp"
#include "motcalc/suites.hpp"
#include "motcalc/tower.hpp"

namespace motcalc::io {

// Insertion-ordered documents: emission order below is the canonical one,
// independent of library key sorting.
using Json = nlohmann::ordered_json;

// Accepts a nonnegative JSON integer or a decimal digit string of any size;
// rejects negatives, floats, and anything else.
Integer integer_from_json(const Json& v, const std::string& what);

// Tower documents: {"base": "point" | {"tate": {"<twist>": <mult>, ...}}
//                          | {"chow_ranks": [...], "dim": n},
//                   "fibres": ["P 1", "Gr 2 4", ...]}.
// Unknown keys are rejected; "fibres" may be omitted (empty tower).
TowerSpec tower_from_json(const Json& doc);
TowerSpec tower_from_string(const std::string& text);  // adds line/column on bad JSON
Json tower_to_json(const TowerSpec& t);

// Rank tables: {"entries": [{"p": 0, "q": 0, "rank": "1"}, ...]},
// emitted row-major by q then p, ascending.
RankTable rank_table_from_json(const Json& doc);
RankTable rank_table_from_string(const std::string& text);
Json rank_table_to_json(const RankTable& t);

// Multiplicities as {"<twist>": "<mult>", ...}, ascending twist.
Json motive_to_json(const TateMotive& m);

// Aggregate suite outcome (per-case results are the text report's job).
Json suite_report_to_json(const verify::SuiteReport& r);

}  // namespace motcalc::io
