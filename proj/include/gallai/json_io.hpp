#pragma once

#include "gallai/decompose.hpp"
#include "gallai/pattern.hpp"
#include "gallai/search.hpp"

#include <json.hpp>

namespace gallai {

/// {"pattern": kind, "t_or_m": size, "color": c | "rainbow", "vertices": [...]}
nlohmann::ordered_json to_json(const WitnessEmbedding& w);

/// {"parts": [[...], ...], "quotient": [{"i", "j", "color"}, ...]}
nlohmann::ordered_json to_json(const GallaiPartition& p);

nlohmann::ordered_json to_json(const SearchStats& s, bool with_time = true);

} // namespace gallai
