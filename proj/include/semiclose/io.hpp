#pragma once
// Reading and writing Cayley tables. Two formats:
//  - JSON: {"order": n, "table": [[...], ...], "names": [...]?}
//  - text: first line n, then n rows of n space-separated 0-based indices.
// The writer always emits JSON. Loading validates the table fully.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "semiclose/semigroup.hpp"

namespace semiclose {

FiniteSemigroup semigroup_from_json(const nlohmann::json& j);
nlohmann::json semigroup_to_json(const FiniteSemigroup& s);

FiniteSemigroup parse_text_table(std::istream& in);

// Sniffs the format: content starting with '{' is JSON, anything else text.
FiniteSemigroup load_semigroup(const std::string& path);
void save_semigroup(const FiniteSemigroup& s, const std::string& path);

}  // namespace semiclose
