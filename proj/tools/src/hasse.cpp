#include "hasse.hpp"

#include <set>
#include <sstream>
#include <utility>

namespace ncp::cli {

namespace {

class Builder {
 public:
  explicit Builder(HasseFragment& out) : out_(out) {}

  // Returns true the first time a key is seen.
  bool add_node(const CanonicalForm& form, int level) {
    if (!index_.emplace(form.key, out_.nodes.size()).second) return false;
    out_.nodes.push_back({form.key, form.code, level});
    return true;
  }

  void add_edge(const std::string& upper, const std::string& lower,
                std::variant<DownStep, UpStep> how) {
    if (!edges_.emplace(upper, lower).second) return;
    out_.edges.push_back({upper, lower, std::move(how)});
  }

 private:
  HasseFragment& out_;
  std::map<std::string, std::size_t> index_;
  std::set<std::pair<std::string, std::string>> edges_;
};

}  // namespace

HasseFragment hasse_fragment(const Code& start, int up, int down) {
  HasseFragment out;
  Builder b(out);
  const CanonicalForm root = canonical_form(start);
  b.add_node(root, 0);

  std::vector<CanonicalForm> frontier{root};
  for (int level = 1; level <= down && !frontier.empty(); ++level) {
    std::vector<CanonicalForm> next;
    for (const CanonicalForm& node : frontier) {
      for (const CoveredCode& cc : all_covered_codes(node.code)) {
        CanonicalForm child = canonical_form(cc.code);
        b.add_edge(node.key, child.key, DownStep{cc.neuron});
        if (b.add_node(child, -level)) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }

  frontier = {root};
  for (int level = 1; level <= up && !frontier.empty(); ++level) {
    std::vector<CanonicalForm> next;
    for (const CanonicalForm& node : frontier) {
      for (const CoverConstruction& cc : all_covering_codes(node.code)) {
        CanonicalForm parent = canonical_form(cc.result);
        b.add_edge(parent.key, node.key, UpStep{cc.isolated.members, cc.isolated.mu, cc.type});
        if (b.add_node(parent, level)) next.push_back(std::move(parent));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

nlohmann::json to_json(const HasseFragment& fragment) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const HasseNode& n : fragment.nodes) {
    nodes.push_back({{"key", n.key}, {"level", n.level}, {"code", io::code_to_json(n.code)}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const HasseEdge& e : fragment.edges) {
    nlohmann::json how;
    if (const auto* d = std::get_if<DownStep>(&e.provenance)) {
      how = {{"neuron", d->neuron}};
    } else {
      const auto& u = std::get<UpStep>(e.provenance);
      nlohmann::json members = nlohmann::json::array();
      for (Codeword c : u.isolated) members.push_back(io::codeword_to_json(c));
      how = {{"isolated", std::move(members)},
             {"mu", io::codeword_to_json(u.mu)},
             {"type", static_cast<int>(u.type)}};
    }
    edges.push_back({{"upper", e.upper}, {"lower", e.lower}, {"provenance", std::move(how)}});
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const HasseFragment& fragment, std::size_t label_width) {
  std::ostringstream os;
  os << "digraph hasse {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const HasseNode& n : fragment.nodes) {
    std::string label = n.key;
    if (label.size() > label_width) label = label.substr(0, label_width) + "...";
    os << "  " << quoted(n.key) << " [label=" << quoted(label) << ", tooltip=" << quoted(n.key);
    if (n.level == 0) os << ", style=bold";
    os << "];\n";
  }
  for (const HasseEdge& e : fragment.edges) {
    std::string label;
    if (const auto* d = std::get_if<DownStep>(&e.provenance)) {
      label = "i=" + std::to_string(d->neuron);
    } else {
      label = "type " + std::to_string(static_cast<int>(std::get<UpStep>(e.provenance).type));
    }
    os << "  " << quoted(e.upper) << " -> " << quoted(e.lower) << " [label=" << quoted(label)
       << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ncp::cli
