#pragma once

// JSON-lines and text-table rendering of search results.

#include <optional>
#include <string>

#include <json.hpp>

#include "cubicdio/solver.hpp"

namespace cubicdio {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& n);

Json solution_json(const Solution& s);
Json hypotheses_json(const HypothesisReport& h);
/// Trailing summary object; `instance` is added for batch runs.
Json summary_json(const SearchReport& r, const std::optional<std::string>& instance = std::nullopt);

/// One compact JSON object per solution, then the summary, each on its own line.
std::string render_json_lines(const SearchReport& r, const std::optional<std::string>& instance = std::nullopt);

std::string render_hypotheses_text(const HypothesisReport& h);
std::string render_table(const SearchReport& r);

}  // namespace cubicdio
