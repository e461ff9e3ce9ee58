#pragma once

#include <string>

#include <json.hpp>

#include "fractal/biased_lift.hpp"
#include "fractal/matroid.hpp"
#include "fractal/sparse_paving.hpp"

namespace fractal {

using Json = nlohmann::ordered_json;

/// {"n", "rank", "bases": [[elements]]}, lists sorted lexicographically.
Json matroid_to_json(const Matroid& m);
/// Validates through make_matroid; shape errors throw ParseError.
Matroid matroid_from_json(const Json& j);

/// {"n", "rank", "chs": [[elements]]}
Json chfamily_to_json(const CHFamily& f);
CHFamily chfamily_from_json(const Json& j);

/// {"t", "picks": ["0/1 string", ...]}
Json spike_to_json(const SpikeSpec& s);
SpikeSpec spike_from_json(const Json& j);

/// {"kind": "single" | "two" | "cycle", "t", "s", "p"}
Json ggraph_to_json(const GGraph& g);
GGraph ggraph_from_json(const Json& j);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);
/// Two-space indented text with a trailing newline.
std::string dump_json(const Json& j);

}  // namespace fractal
