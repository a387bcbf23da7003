#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncp/ncp.hpp"

namespace ncp::cli {

/// How an edge was found: a covered neuron going down, or an isolated
/// subset and covering type going up.
struct DownStep {
  int neuron = 0;
};
struct UpStep {
  std::vector<Codeword> isolated;
  Codeword mu;
  CoverType type = CoverType::Type1;
};

struct HasseEdge {
  std::string upper;
  std::string lower;
  std::variant<DownStep, UpStep> provenance;
};

struct HasseNode {
  std::string key;
  Code code;
  int level = 0;  // signed distance from the start code
};

/// Local neighbourhood of a code in the minor order: `up` covering steps
/// above it and `down` covered steps below it. Nodes are isomorphism
/// classes (canonical keys); every edge is a covering relation.
struct HasseFragment {
  std::vector<HasseNode> nodes;
  std::vector<HasseEdge> edges;
};

HasseFragment hasse_fragment(const Code& start, int up, int down);

nlohmann::json to_json(const HasseFragment& fragment);

/// Graphviz digraph, covering code to covered code. Long keys are cut
/// short in labels; the full key sits in the tooltip.
std::string to_dot(const HasseFragment& fragment, std::size_t label_width = 28);

}  // namespace ncp::cli
