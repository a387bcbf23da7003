#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>

#include "hasse.hpp"
#include "invariants.hpp"
#include "ncp/ncp.hpp"

namespace ncp::cli {

namespace {

using nlohmann::json;

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

Code read_code(const std::string& path) { return io::code_from_json(read_json(path)); }

json trunk_json(const Code& c, const Trunk& t) {
  json members = json::array();
  for (Codeword w : member_codewords(c, t.members)) members.push_back(io::codeword_to_json(w));
  return {{"base", io::codeword_to_json(t.base)}, {"members", std::move(members)}};
}

json trunks_cmd(const Code& c) {
  json list = json::array();
  for (const Trunk& t : distinct_nonempty_trunks(c)) list.push_back(trunk_json(c, t));
  return {{"code", io::code_to_json(c)}, {"trunk_count", list.size()}, {"trunks", std::move(list)}};
}

json covers_down_cmd(const Code& c) {
  json list = json::array();
  std::vector<std::string> classes;
  for (const CoveredCode& cc : covered_codes_by_neuron(c)) {
    const std::string key = canonical_form(cc.code).key;
    auto it = std::find(classes.begin(), classes.end(), key);
    if (it == classes.end()) it = classes.insert(classes.end(), key);
    list.push_back({{"neuron", cc.neuron},
                    {"class", std::distance(classes.begin(), it)},
                    {"key", key},
                    {"code", io::code_to_json(cc.code)},
                    {"trunk_count", trunk_count(cc.code)},
                    {"morphism", io::morphism_to_json(cc.morphism, false)}});
  }
  return {{"code", io::code_to_json(c)},
          {"trunk_count", trunk_count(c)},
          {"classes", classes.size()},
          {"covered", std::move(list)}};
}

json covers_up_cmd(const Code& c, bool all, CoverOptions options) {
  const auto found = all ? covering_constructions(c, options) : all_covering_codes(c, options);
  json list = json::array();
  for (const CoverConstruction& cc : found) {
    json item = io::cover_construction_to_json(cc);
    item.erase("base");
    item["key"] = canonical_form(cc.result).key;
    item["trunk_count"] = trunk_count(cc.result);
    list.push_back(std::move(item));
  }
  return {{"code", io::code_to_json(c)}, {"trunk_count", trunk_count(c)}, {"covers", std::move(list)}};
}

json isolated_cmd(const Code& c) {
  json list = json::array();
  for (const IsolatedSubset& i : isolated_subsets(c)) {
    json members = json::array();
    for (Codeword w : i.members) members.push_back(io::codeword_to_json(w));
    list.push_back({{"members", std::move(members)}, {"mu", io::codeword_to_json(i.mu)}});
  }
  return {{"host", io::code_to_json(c)}, {"isolated", std::move(list)}};
}

json realize_cmd(const BoxCover& cover) {
  const Realization r = realize(cover);
  json witnesses = json::array();
  for (const auto& [c, p] : r.witnesses) {
    json point = json::array();
    for (const Rational& x : p) point.push_back(format_rational(x));
    witnesses.push_back({{"codeword", io::codeword_to_json(c)}, {"point", std::move(point)}});
  }
  return {{"code", io::code_to_json(r.code)}, {"witnesses", std::move(witnesses)}};
}

json verify_cmd(const Code& c, bool& ok) {
  json list = json::array();
  ok = true;
  for (const CheckResult& r : verify_code(c)) {
    ok = ok && r.status != CheckStatus::Fail;
    json item = {{"name", r.name}, {"status", to_string(r.status)}, {"checked", r.checked}};
    if (!r.detail.empty()) item["detail"] = r.detail;
    list.push_back(std::move(item));
  }
  return {{"code", io::code_to_json(c)}, {"ok", ok}, {"properties", std::move(list)}};
}

bool has_object(const json& j) {
  if (j.is_object()) return true;
  if (j.is_array()) return std::any_of(j.begin(), j.end(), has_object);
  return false;
}

// Like dump(2), except that values without nested objects (codewords,
// codeword lists, points) stay on one line.
void print(std::ostream& os, const json& j, int depth = 0) {
  if (!has_object(j)) {
    os << j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_array()) {
    os << "[\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it != j.begin()) os << ",\n";
      os << pad;
      print(os, *it, depth + 1);
    }
    os << "\n" << close << "]";
    return;
  }
  os << "{\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it != j.begin()) os << ",\n";
    os << pad << json(it.key()).dump() << ": ";
    print(os, it.value(), depth + 1);
  }
  os << "\n" << close << "}";
}

void apply_thread_env() {
  if (const char* env = std::getenv("NCP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) set_thread_limit(static_cast<unsigned>(v));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_thread_env();

  CLI::App app{"Combinatorial neural codes: trunks, morphisms and covering relations", "ncp"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ncp 0.1.0");

  std::string a_path;
  std::string b_path;
  auto one_code = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("code", a_path, "code JSON file, or - for stdin")->required();
    return sub;
  };

  auto* trunks = one_code("trunks", "List the distinct nonempty trunks");
  auto* complete = one_code("complete", "Intersection-completion of a code");
  auto* canon = one_code("canon", "Canonical form and isomorphism key");
  auto* iso = app.add_subcommand("iso", "Are two codes isomorphic");
  iso->add_option("a", a_path, "first code")->required();
  iso->add_option("b", b_path, "second code")->required();
  auto* leq = app.add_subcommand("leq", "Is the first code a minor of the second");
  leq->add_option("a", a_path, "candidate minor")->required();
  leq->add_option("b", b_path, "larger code")->required();
  std::size_t max_nodes = MinorLimits{}.max_nodes;
  leq->add_option("--max-nodes", max_nodes, "descent budget")->check(CLI::PositiveNumber);

  auto* down = one_code("covers-down", "Codes covered by this code, one per covering neuron");
  auto* up = one_code("covers-up", "Codes covering this code, one per isomorphism class");
  bool up_all = false;
  up->add_flag("--all", up_all, "list every (isolated subset, type) construction");
  std::string empty_meet = "fails";
  up->add_option("--empty-meet", empty_meet,
                 "reading of an empty meet in types 3 and 4: fails or universe")
      ->check(CLI::IsMember({"fails", "universe"}));

  auto* isolated = one_code("isolated", "Isolated subsets of an intersection-complete code");
  auto* realize_sub = app.add_subcommand("realize", "Code of an open box cover");
  realize_sub->add_option("cover", a_path, "cover JSON file, or - for stdin")->required();

  auto* hasse = one_code("hasse", "Local Hasse diagram of the minor order");
  int up_levels = 1;
  int down_levels = 1;
  std::string format = "dot";
  bool dot = false;
  hasse->add_option("--up", up_levels, "covering steps upward")->check(CLI::NonNegativeNumber);
  hasse->add_option("--down", down_levels, "covered steps downward")->check(CLI::NonNegativeNumber);
  hasse->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  hasse->add_flag("--dot", dot, "same as --format dot");

  auto* verify = one_code("verify", "Run every structural check on a code");

  auto* random = app.add_subcommand("random-cover", "Seeded random open box cover");
  int dim = 1;
  int boxes = 3;
  std::uint64_t seed = 0;
  random->add_option("--d", dim, "dimension")->check(CLI::Range(1, 16));
  random->add_option("--n", boxes, "number of boxes")->check(CLI::Range(0, kMaxNeurons));
  random->add_option("--seed", seed, "generator seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "ncp 0.1.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << "see: ncp " << sub->get_name() << " --help\n";
    } else {
      err << "see: ncp --help\n";
    }
    return 2;
  }

  try {
    json result;
    if (trunks->parsed()) {
      result = trunks_cmd(read_code(a_path));
    } else if (complete->parsed()) {
      const Code c = read_code(a_path);
      result = {{"intersection_complete", is_intersection_complete(c)},
                {"completion", io::code_to_json(intersection_completion(c))}};
    } else if (canon->parsed()) {
      const CanonicalForm f = canonical_form(read_code(a_path));
      result = {{"key", f.key}, {"code", io::code_to_json(f.code)}};
    } else if (iso->parsed()) {
      result = {{"isomorphic", is_isomorphic(read_code(a_path), read_code(b_path))}};
    } else if (leq->parsed()) {
      const Code a = read_code(a_path);
      const Code b = read_code(b_path);
      result = {{"leq", is_minor(b, a, MinorLimits{max_nodes})}};
    } else if (down->parsed()) {
      result = covers_down_cmd(read_code(a_path));
    } else if (up->parsed()) {
      const CoverOptions options{empty_meet == "universe" ? EmptyMeet::Universe : EmptyMeet::Fails};
      result = covers_up_cmd(read_code(a_path), up_all, options);
    } else if (isolated->parsed()) {
      result = isolated_cmd(read_code(a_path));
    } else if (realize_sub->parsed()) {
      result = realize_cmd(io::box_cover_from_json(read_json(a_path)));
    } else if (hasse->parsed()) {
      const HasseFragment fragment = hasse_fragment(read_code(a_path), up_levels, down_levels);
      if (dot || format == "dot") {
        out << to_dot(fragment);
        return 0;
      }
      result = to_json(fragment);
    } else if (verify->parsed()) {
      bool ok = true;
      result = verify_cmd(read_code(a_path), ok);
      print(out, result);
      out << "\n";
      return ok ? 0 : 1;
    } else if (random->parsed()) {
      result = io::box_cover_to_json(random_box_cover(dim, boxes, seed));
    }
    print(out, result);
    out << "\n";
    return 0;
  } catch (const Error& e) {
    err << json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << json{{"error", to_string(ErrorKind::Parse)}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace ncp::cli
