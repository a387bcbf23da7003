#include "ncp/json_io.hpp"

#include "ncp/errors.hpp"

namespace ncp::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorKind::Parse, std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) {
    throw Error(ErrorKind::Parse, std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<int>();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error(ErrorKind::Parse, "rationals are written as \"p/q\" strings");
}

}  // namespace

json codeword_to_json(Codeword c) { return c.neurons(); }

Codeword codeword_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "a codeword is an array of neuron indices");
  std::vector<int> idx;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorKind::Parse, "neuron indices must be integers");
    idx.push_back(v.get<int>());
  }
  return Codeword::from_indices(idx);
}

json code_to_json(const Code& code) {
  json words = json::array();
  for (Codeword c : code) words.push_back(codeword_to_json(c));
  return {{"n", code.n()}, {"codewords", std::move(words)}};
}

Code code_from_json(const json& j) {
  const int n = int_field(j, "n");
  const json& words = field(j, "codewords");
  if (!words.is_array()) throw Error(ErrorKind::Parse, "\"codewords\" must be an array");
  std::vector<std::vector<int>> raw;
  for (const json& w : words) raw.push_back(codeword_from_json(w).neurons());
  return Code::from_lists(n, raw);
}

json morphism_to_json(const Morphism& f, bool with_table) {
  json trunks = json::array();
  for (const Trunk& t : f.trunks()) {
    json members = json::array();
    for (Codeword c : member_codewords(f.source(), t.members)) members.push_back(codeword_to_json(c));
    trunks.push_back(std::move(members));
  }
  json out = {{"source", code_to_json(f.source())},
              {"target_n", f.target_n()},
              {"trunks", std::move(trunks)}};
  if (with_table) {
    json table = json::array();
    for (std::size_t i = 0; i < f.source().size(); ++i) {
      table.push_back({codeword_to_json(f.source()[i]), codeword_to_json(f.at(i))});
    }
    out["table"] = std::move(table);
  }
  return out;
}

Morphism morphism_from_json(const json& j) {
  const Code source = code_from_json(field(j, "source"));
  const int m = int_field(j, "target_n");
  const json& trunks = field(j, "trunks");
  if (!trunks.is_array() || static_cast<int>(trunks.size()) != m) {
    throw Error(ErrorKind::Parse, "\"trunks\" must list exactly target_n member sets");
  }
  std::vector<Trunk> list;
  for (const json& t : trunks) {
    if (!t.is_array()) throw Error(ErrorKind::Parse, "a trunk is an array of codewords");
    MemberSet members(source.size());
    for (const json& c : t) {
      auto idx = source.index_of(codeword_from_json(c));
      if (!idx) throw Error(ErrorKind::NotAProperTrunk, "trunk lists a codeword outside the source");
      members.set(*idx);
    }
    list.push_back(trunk_from_members(source, std::move(members)));
  }
  return morphism_from_trunks(source, std::move(list));
}

json cover_construction_to_json(const CoverConstruction& cc) {
  json isolated = json::array();
  for (Codeword c : cc.isolated.members) isolated.push_back(codeword_to_json(c));
  return {{"base", code_to_json(cc.base)},
          {"isolated", std::move(isolated)},
          {"mu", codeword_to_json(cc.isolated.mu)},
          {"type", static_cast<int>(cc.type)},
          {"result", code_to_json(cc.result)}};
}

json box_cover_to_json(const BoxCover& cover) {
  json boxes = json::array();
  for (const OpenBox& b : cover.boxes) {
    json lower = json::array();
    json upper = json::array();
    for (const Rational& r : b.lower) lower.push_back(format_rational(r));
    for (const Rational& r : b.upper) upper.push_back(format_rational(r));
    boxes.push_back({{"lower", std::move(lower)}, {"upper", std::move(upper)}});
  }
  return {{"d", cover.d}, {"boxes", std::move(boxes)}};
}

BoxCover box_cover_from_json(const json& j) {
  BoxCover cover;
  cover.d = int_field(j, "d");
  const json& boxes = field(j, "boxes");
  if (!boxes.is_array()) throw Error(ErrorKind::Parse, "\"boxes\" must be an array");
  for (const json& b : boxes) {
    OpenBox box;
    for (const json& v : field(b, "lower")) box.lower.push_back(rational_from_json(v));
    for (const json& v : field(b, "upper")) box.upper.push_back(rational_from_json(v));
    cover.boxes.push_back(std::move(box));
  }
  cover.validate();
  return cover;
}

}  // namespace ncp::io
