#pragma once

#include <nlohmann/json.hpp>

#include "ncp/ascent.hpp"
#include "ncp/code.hpp"
#include "ncp/geometry.hpp"
#include "ncp/morphism.hpp"

namespace ncp::io {

using nlohmann::json;

json codeword_to_json(Codeword c);
/// Throws Error(Parse) or Error(IndexOutOfRange).
Codeword codeword_from_json(const json& j);

/// {"n": n, "codewords": [[...], ...]} in lexicographic order.
json code_to_json(const Code& code);
Code code_from_json(const json& j);

/// {"source": code, "target_n": m, "trunks": [[codeword...], ...]}, plus
/// "table": [[c, f(c)], ...] when requested.
json morphism_to_json(const Morphism& f, bool with_table = false);
Morphism morphism_from_json(const json& j);

/// {"base", "isolated", "mu", "type", "result"}.
json cover_construction_to_json(const CoverConstruction& cc);

/// {"d": d, "boxes": [{"lower": ["p/q", ...], "upper": [...]}, ...]}.
json box_cover_to_json(const BoxCover& cover);
BoxCover box_cover_from_json(const json& j);

}  // namespace ncp::io
