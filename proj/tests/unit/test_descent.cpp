#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "oracles.hpp"

using namespace ncp;
using ncp::testing::cw;
using ncp::testing::make_code;

namespace {

const Code kWorked = make_code(3, {"", "1", "12", "23", "13", "123"});

std::string key(const Code& c) { return canonical_form(c).key; }

// Memoized minor down-sets, keyed by canonical key.
class MinorOracle {
 public:
  const std::set<std::string>& below(const Code& c) {
    const std::string k = key(c);
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, testing::minor_keys(c)).first;
    return it->second;
  }

  // C covers D by definition: D < C with nothing strictly between.
  bool covers(const Code& c, const Code& d) {
    const std::string kc = key(c);
    const std::string kd = key(d);
    if (kc == kd || !below(c).contains(kd)) return false;
    for (const std::string& ke : below(c)) {
      if (ke == kc || ke == kd) continue;
      if (below(from_key(c, ke)).contains(kd)) return false;
    }
    return true;
  }

 private:
  // Every key in below(c) came from an image of c; rebuild it from that image.
  Code from_key(const Code& c, const std::string& k) {
    auto it = codes_.find(k);
    if (it != codes_.end()) return it->second;
    const auto proper = proper_trunks(c);
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << proper.size()); ++pick) {
      std::vector<Trunk> chosen;
      for (std::size_t j = 0; j < proper.size(); ++j) {
        if ((pick >> j) & 1U) chosen.push_back(proper[j]);
      }
      const Code img = image(morphism_from_trunks(c, std::move(chosen)));
      codes_.emplace(key(img), img);
    }
    return codes_.at(k);
  }

  std::map<std::string, std::set<std::string>> cache_;
  std::map<std::string, Code> codes_;
};

}  // namespace

TEST_CASE("classify_neurons", "[descent]") {
  const auto twin = classify_neurons(make_code(2, {"", "12"}));
  REQUIRE(twin.size() == 2);
  CHECK(twin[0].status == NeuronStatus::Redundant);
  CHECK(twin[1].status == NeuronStatus::Redundant);
  REQUIRE(twin[1].witness);
  CHECK(*twin[1].witness == cw("1"));

  const auto padded = classify_neurons(make_code(2, {"", "1"}));
  CHECK(padded[0].status == NeuronStatus::Essential);
  CHECK(padded[1].status == NeuronStatus::Trivial);

  for (const auto& cls : classify_neurons(kWorked)) {
    CHECK(cls.status == NeuronStatus::Essential);
  }
}

TEST_CASE("classification matches the definition", "[descent][property]") {
  for (const Code& c : testing::all_codes_up_to(3)) {
    for (const auto& cls : classify_neurons(c)) {
      const int i = cls.neuron;
      const MemberSet ti = trunk_members(c, Codeword::singleton(i));
      bool redundant = false;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.n()); ++s) {
        const Codeword sigma(s);
        if (sigma.has(i)) continue;
        redundant = redundant || trunk_members(c, sigma) == ti;
      }
      if (ti.none()) {
        CHECK(cls.status == NeuronStatus::Trivial);
      } else if (redundant) {
        CHECK(cls.status == NeuronStatus::Redundant);
        REQUIRE(cls.witness);
        CHECK_FALSE(cls.witness->has(i));
        CHECK(trunk_members(c, *cls.witness) == ti);
      } else {
        CHECK(cls.status == NeuronStatus::Essential);
      }
    }
  }
}

TEST_CASE("covered_code", "[descent]") {
  const CoveredCode first = covered_code(kWorked, 1);
  CHECK(first.code == make_code(4, {"", "13", "12", "24", "1234"}));
  CHECK(trunk_count(kWorked) == 8);
  CHECK(trunk_count(first.code) == 7);
  REQUIRE(first.morphism.target_n() == 4);
  CHECK(first.morphism.trunks()[0] == trunk(kWorked, cw("2")));
  CHECK(first.morphism.trunks()[1] == trunk(kWorked, cw("3")));
  CHECK(first.morphism.trunks()[2] == trunk(kWorked, cw("12")));
  CHECK(first.morphism.trunks()[3] == trunk(kWorked, cw("13")));

  CHECK(covered_code(make_code(1, {"", "1"}), 1).code == Code());
  const CoveredCode sq = covered_code(make_code(2, {"", "1", "2", "12"}), 1);
  CHECK(is_isomorphic(sq.code, make_code(2, {"", "1", "12"})));
  CHECK(sq.code == make_code(2, {"", "1", "12"}));

  try {
    covered_code(make_code(2, {"", "1"}), 2);
    FAIL("trivial neuron accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TrivialNeuron);
  }
  try {
    covered_code(kWorked, 4);
    FAIL("out-of-range neuron accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("covering neurons keep one of each mutually redundant group", "[descent]") {
  CHECK(covering_neurons(make_code(2, {"", "12"})) == std::vector<int>{1});
  CHECK(covering_neurons(make_code(3, {"", "13"})) == std::vector<int>{1});
  CHECK(covering_neurons(kWorked) == std::vector<int>{1, 2, 3});
  CHECK(covering_neurons(make_code(3, {"", "1", "2", "123"})) == std::vector<int>{1, 2});
  const auto twin = all_covered_codes(make_code(2, {"", "12"}));
  REQUIRE(twin.size() == 1);
  CHECK(twin[0].code == Code());
}

TEST_CASE("all_covered_codes", "[descent]") {
  CHECK(covered_codes_by_neuron(kWorked).size() == 3);
  const auto classes = all_covered_codes(kWorked);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].neuron == 1);
  CHECK(classes[1].neuron == 2);
  CHECK(is_isomorphic(covered_code(kWorked, 2).code, covered_code(kWorked, 3).code));

  CHECK(all_covered_codes(Code()).empty());
  const auto one = all_covered_codes(make_code(1, {"", "1"}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].code == Code());
}

TEST_CASE("covers", "[descent]") {
  CHECK(covers(kWorked, make_code(4, {"", "13", "12", "24", "1234"})));
  CHECK_FALSE(covers(kWorked, kWorked));
  CHECK_FALSE(covers(make_code(2, {"", "1", "12"}), Code()));
  CHECK(covers(make_code(1, {"", "1"}), Code()));
}

TEST_CASE("covered codes lose exactly one trunk", "[descent][property]") {
  std::vector<Code> codes = testing::all_codes_up_to(3);
  std::mt19937_64 rng(47);
  for (int k = 0; k < 150; ++k) codes.push_back(testing::random_code(5, rng));
  for (const Code& c : codes) {
    for (const CoveredCode& cc : covered_codes_by_neuron(c)) {
      CHECK(trunk_count(cc.code) + 1 == trunk_count(c));
      CHECK(image(cc.morphism) == cc.code);
      CHECK(covers(c, cc.code));
    }
  }
}

TEST_CASE("deleting a redundant neuron is an isomorphism", "[descent][property]") {
  for (const Code& c : testing::all_codes_up_to(3)) {
    for (const auto& cls : classify_neurons(c)) {
      if (cls.status != NeuronStatus::Redundant) continue;
      const auto [d, del] = deletion_map(c, cls.neuron);
      CHECK(is_isomorphic(c, d));
      CHECK(is_isomorphism(recover_determining_trunks(c, d, del), d));
    }
  }
}

TEST_CASE("covers agrees with the definition on small codes", "[descent][property]") {
  MinorOracle oracle;
  const auto lower = testing::all_codes_up_to(2);
  std::size_t positives = 0;
  for (const Code& c : testing::all_codes_up_to(3)) {
    for (const Code& d : lower) {
      const bool expected = oracle.covers(c, d);
      positives += expected ? 1 : 0;
      CHECK(covers(c, d) == expected);
    }
  }
  CHECK(positives > 0);
}

TEST_CASE("is_minor", "[descent]") {
  CHECK(is_minor(kWorked, Code()));
  CHECK(is_minor(kWorked, trunk_minor(kWorked, cw("1")).first));
  CHECK_FALSE(is_minor(make_code(1, {"", "1"}), make_code(2, {"", "1", "2", "12"})));
  CHECK(is_minor(kWorked, kWorked));
  CHECK(is_minor(kWorked, covered_code(covered_code(kWorked, 1).code, 1).code));

  try {
    is_minor(kWorked, make_code(2, {"", "1", "2"}), MinorLimits{1});
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("is_minor agrees with the image down-set", "[descent][property]") {
  MinorOracle oracle;
  const auto all = testing::all_codes_up_to(3);
  const auto lower = testing::all_codes_up_to(2);
  for (const Code& c : all) {
    for (const Code& d : lower) CHECK(is_minor(c, d) == oracle.below(c).contains(key(d)));
  }
  std::mt19937_64 rng(53);
  for (int k = 0; k < 300; ++k) {
    const Code& c = all[rng() % all.size()];
    const Code& d = all[rng() % all.size()];
    CHECK(is_minor(c, d) == oracle.below(c).contains(key(d)));
  }
}

TEST_CASE("minor order is a partial order up to isomorphism", "[descent][property]") {
  const auto codes = testing::all_codes_up_to(2);
  const std::size_t n = codes.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) le[a][b] = is_minor(codes[b], codes[a]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    CHECK(le[a][a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (le[a][b] && le[b][a]) CHECK(is_isomorphic(codes[a], codes[b]));
      for (std::size_t c = 0; c < n; ++c) {
        if (le[a][b] && le[b][c]) CHECK(le[a][c]);
      }
    }
  }
}

TEST_CASE("trunk minors of small codes", "[descent][property]") {
  for (const Code& c : testing::all_codes_up_to(2)) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.n()); ++s) {
      CHECK(is_minor(c, trunk_minor(c, Codeword(s)).first));
    }
  }
}

TEST_CASE("essential neurons of intersection-complete codes", "[descent][property]") {
  for (const Code& c : testing::all_intersection_complete_codes_up_to(3)) {
    for (const auto& cls : classify_neurons(c)) {
      if (cls.status != NeuronStatus::Essential) continue;
      const CoveredCode cc = covered_code(c, cls.neuron);
      const Codeword mu = meet_of(c, trunk_members(c, Codeword::singleton(cc.neuron)));
      const Codeword rest = mu.without(cc.neuron);
      REQUIRE(c.contains(mu));
      REQUIRE(c.contains(rest));
      CHECK(cc.morphism(mu) == cc.morphism(rest));
    }
  }
}
