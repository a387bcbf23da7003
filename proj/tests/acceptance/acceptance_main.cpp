// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"

using namespace ncp;
using nlohmann::json;
using ncp::testing::make_code;

namespace {

// Collects violations; only the first few are printed.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++violations_;
  }
  std::size_t checks() const { return checks_; }
  std::size_t violations() const { return violations_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::size_t violations_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<void(Tally&)> body;
};

std::string show(const Code& c) {
  std::ostringstream os;
  os << "n=" << c.n() << " {";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << (c[i].empty() ? "0" : c[i].to_string());
  os << "}";
  return os.str();
}

std::size_t brute_trunk_count(const Code& c) { return testing::brute_trunks(c).size(); }

bool iso_any(const Code& c, const std::vector<Code>& pool) {
  for (const Code& d : pool) {
    if (testing::brute_isomorphic(c, d)) return true;
  }
  return false;
}

// Constructions from criteria 2 and 3, rechecked by criterion 4.
std::vector<std::pair<Code, CoverConstruction>>& seen_constructions() {
  static std::vector<std::pair<Code, CoverConstruction>> all;
  return all;
}

void record_constructions(const Code& d) {
  for (CoverConstruction& cc : covering_constructions(d)) seen_constructions().emplace_back(d, std::move(cc));
}

void worked_example(Tally& t) {
  const Code c = make_code(3, {"", "1", "12", "23", "13", "123"});
  const auto path = std::filesystem::temp_directory_path() / "ncp_acceptance_worked.json";
  std::ofstream(path) << io::code_to_json(c).dump();
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run({"covers-down", path.string()}, out, err);
  t.expect(status == 0, "covers-down exited " + std::to_string(status) + ": " + err.str());
  if (status != 0) return;
  const json j = json::parse(out.str());
  t.expect(j.at("trunk_count") == 8, "C has " + j.at("trunk_count").dump() + " trunks");
  bool found = false;
  for (const json& item : j.at("covered")) {
    if (item.at("neuron") != 1) continue;
    found = true;
    const Code c1 = io::code_from_json(item.at("code"));
    t.expect(item.at("trunk_count") == 7, "C^(1) has " + item.at("trunk_count").dump() + " trunks");
    t.expect(brute_trunk_count(c1) == 7, "brute trunk count of C^(1) is not 7");
    const Code expected = make_code(4, {"", "13", "12", "24", "1234"});
    t.expect(testing::brute_isomorphic(c1, expected), "C^(1) = " + show(c1));
  }
  t.expect(found, "no covered code for neuron 1");
}

void duality(Tally& t) {
  std::vector<Code> bases = testing::all_codes_up_to(2);
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 100; ++k) bases.push_back(testing::random_code(4, rng));
  for (const Code& d : bases) {
    record_constructions(d);
    const std::size_t trunks = brute_trunk_count(d);
    for (const CoverConstruction& cc : all_covering_codes(d)) {
      const std::string at = show(d) + " -> " + show(cc.result);
      t.expect(covers(cc.result, d), at + ": does not cover");
      t.expect(brute_trunk_count(cc.result) == trunks + 1, at + ": trunk count is not one more");
      bool back = false;
      for (const CoveredCode& down : covered_codes_by_neuron(cc.result)) {
        back = back || is_isomorphic(down.code, d);
      }
      t.expect(back, at + ": no covered code is the base");
    }
  }
}

void brute_covers(Tally& t) {
  const std::vector<Code> three = testing::all_codes(3);
  for (const Code& d : testing::all_codes_up_to(2)) {
    record_constructions(d);
    const std::size_t want = brute_trunk_count(d) + 1;
    std::vector<Code> brute;
    for (const Code& c : three) {
      if (brute_trunk_count(c) != want) continue;
      if (!testing::brute_surjection_by_trunks(c, d)) continue;
      if (!iso_any(c, brute)) brute.push_back(c);
    }
    std::vector<Code> built;
    for (const CoverConstruction& cc : all_covering_codes(d)) built.push_back(cc.result);
    for (const Code& c : brute) t.expect(iso_any(c, built), show(d) + ": missing cover " + show(c));
    for (const Code& c : built) t.expect(iso_any(c, brute), show(d) + ": extra cover " + show(c));
    t.expect(brute.size() == built.size(),
             show(d) + ": " + std::to_string(brute.size()) + " brute classes vs " +
                 std::to_string(built.size()) + " constructed");
  }
}

void completion_of_covers(Tally& t) {
  t.expect(!seen_constructions().empty(), "criteria 2 and 3 produced no constructions");
  for (const auto& [d, cc] : seen_constructions()) {
    const Code lhs = intersection_completion(cc.result);
    const Code rhs = int_comp_cover(intersection_completion(d), cc.isolated);
    t.expect(lhs == rhs, show(d) + " type " + std::to_string(static_cast<int>(cc.type)) + ": " +
                             show(lhs) + " vs " + show(rhs));
    t.expect(verify_cover_completion(d, cc), show(d) + ": verify_cover_completion rejects");
  }
}

void complete_codes_suite(Tally& t) {
  for (const Code& c : testing::all_intersection_complete_codes_up_to(3)) {
    // σ ↦ Tk(σ) on codewords hits every nonempty trunk exactly once.
    std::set<MemberSet> images;
    for (Codeword sigma : c) {
      MemberSet m(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) m[i] = sigma.subset_of(c[i]);
      images.insert(m);
    }
    t.expect(images.size() == c.size() && images == testing::brute_trunks(c),
             show(c) + ": codewords and trunks do not biject");

    for (const IsolatedSubset& iso : isolated_subsets(c)) {
      const std::string at = show(c) + " mu " + iso.mu.to_string();
      std::vector<Codeword> rest{iso.mu};
      for (Codeword w : c) {
        if (!iso.contains(w)) rest.push_back(w);
      }
      t.expect(is_intersection_complete(Code::from_codewords(c.n(), rest)),
               at + ": removing the subset breaks completeness");
      const Code up = int_comp_cover(c, iso);
      t.expect(is_intersection_complete(up), at + ": cover is not intersection-complete");
      t.expect(covers(up, c), at + ": cover does not cover");
      t.expect(brute_trunk_count(up) == brute_trunk_count(c) + 1, at + ": trunk count is not one more");
      t.expect(testing::brute_surjection_by_trunks(up, c), at + ": no surjection onto the base");
    }

    for (const NeuronClassification& cls : classify_neurons(c)) {
      if (cls.status != NeuronStatus::Essential) continue;
      Codeword mu = Codeword::universe(c.n());
      for (Codeword w : c) {
        if (w.has(cls.neuron)) mu = mu & w;
      }
      const Codeword rest = mu.without(cls.neuron);
      const std::string at = show(c) + " neuron " + std::to_string(cls.neuron);
      t.expect(c.contains(rest), at + ": meet minus the neuron is missing");
      if (c.contains(rest)) {
        const CoveredCode cc = covered_code(c, cls.neuron);
        t.expect(cc.morphism(mu) == cc.morphism(rest), at + ": covered map separates the meet");
      }
    }
  }
}

Morphism random_morphism(const Code& c, std::mt19937_64& rng) {
  const auto proper = proper_trunks(c);
  std::vector<Trunk> picked;
  if (!proper.empty()) {
    const std::size_t m = rng() % 5;
    for (std::size_t j = 0; j < m; ++j) picked.push_back(proper[rng() % proper.size()]);
  }
  return morphism_from_trunks(c, std::move(picked));
}

void morphism_axioms(Tally& t) {
  std::mt19937_64 rng(500);
  for (int k = 0; k < 500; ++k) {
    const Code c = testing::random_code(4, rng);
    const Morphism f = random_morphism(c, rng);
    const Code d = image(f);
    const std::string at = "pair " + std::to_string(k) + " " + show(c);
    std::vector<Codeword> table(f.table().begin(), f.table().end());

    t.expect(f(Codeword{}).empty(), at + ": empty codeword not fixed");
    t.expect(testing::brute_is_morphism(c, d, table), at + ": not a morphism by definition");

    const auto target_trunks = testing::brute_trunks(d);
    auto pre = [&](const MemberSet& s) {
      MemberSet out(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) out[i] = s.test(*d.index_of(table[i]));
      return out;
    };
    for (const MemberSet& s : target_trunks) {
      for (const MemberSet& u : target_trunks) {
        t.expect(pre(s & u) == (pre(s) & pre(u)), at + ": preimage of an intersection differs");
      }
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = 0; b < c.size(); ++b) {
        if (auto idx = c.index_of(c[a] & c[b])) {
          t.expect(table[*idx] == (table[a] & table[b]), at + ": image of an intersection differs");
        }
      }
    }

    const Morphism g = extend_to_completion(f);
    const Code hat = intersection_completion(c);
    t.expect(g.source() == hat, at + ": extension has the wrong source");
    for (std::size_t i = 0; i < c.size(); ++i) t.expect(g(c[i]) == table[i], at + ": extension does not commute");
    t.expect(image(g) == intersection_completion(d), at + ": extension is not onto hat(D)");
    std::vector<Codeword> g_table(g.table().begin(), g.table().end());
    t.expect(testing::brute_is_morphism(hat, intersection_completion(d), g_table),
             at + ": extension is not a morphism by definition");
    if (hat.size() <= 8) {
      const auto all = testing::brute_extensions(f);
      t.expect(all.size() == 1 && all.front() == g_table,
               at + ": " + std::to_string(all.size()) + " extensions exist");
    }
  }
}

void geometry(Tally& t) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int d = 1 + static_cast<int>(seed % 2);
    const int n = static_cast<int>(seed % 6);
    const BoxCover cover = random_box_cover(d, n, seed);
    const Realization r = realize(cover);
    const std::string at = "seed " + std::to_string(seed);
    t.expect(r.code == code_of_cover(cover), at + ": realize and code_of_cover disagree");
    for (Codeword c : testing::sampled_code(cover, 100'000, seed + 7000)) {
      t.expect(r.code.contains(c), at + ": sampled codeword " + c.to_string() + " missing");
    }
    for (Codeword c : r.code) {
      const auto it = r.witnesses.find(c);
      t.expect(it != r.witnesses.end() && cover.membership(it->second) == c,
               at + ": no witness for " + c.to_string());
    }
  }
}

void trunk_minors(Tally& t) {
  for (const Code& c : testing::all_codes_up_to(2)) {
    const std::set<std::string> below = testing::minor_keys(c);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.n()); ++s) {
      const auto [m, f] = trunk_minor(c, Codeword(s));
      const std::string at = show(c) + " sigma " + Codeword(s).to_string();
      t.expect(is_minor(c, m), at + ": is_minor rejects " + show(m));
      t.expect(below.contains(canonical_form(m).key), at + ": not in the brute down-set");
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example: covers-down on {0,1,12,23,13,123}", 1.0, worked_example},
      {2, "covering codes cover, add one trunk and descend back", 120.0, duality},
      {3, "covering codes match brute force over 3 neurons", 300.0, brute_covers},
      {4, "completion of every cover is int_comp_cover", 0.0, completion_of_covers},
      {5, "intersection-complete suite on <= 3 neurons", 120.0, complete_codes_suite},
      {6, "morphism axioms on 500 random pairs", 0.0, morphism_axioms},
      {7, "box covers agree with 1e5-point sampling", 60.0, geometry},
      {8, "trunk codes are minors", 0.0, trunk_minors},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    std::string crash;
    try {
      c.body(tally);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = c.budget_s > 0 && secs > c.budget_s;
    const bool ok = crash.empty() && tally.violations() == 0 && tally.checks() > 0 && !slow;
    failed += ok ? 0 : 1;
    std::printf("%s %d %s (%zu checks, %zu violations, %.2f s", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), tally.checks(), tally.violations(), secs);
    if (c.budget_s > 0) std::printf(" of %.0f s", c.budget_s);
    std::printf(")\n");
    if (!crash.empty()) std::printf("  exception: %s\n", crash.c_str());
    if (slow) std::printf("  over the time budget\n");
    for (const std::string& f : tally.failures()) std::printf("  %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
