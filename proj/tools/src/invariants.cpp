#include "invariants.hpp"

#include <algorithm>
#include <set>

#include "ncp/ncp.hpp"

namespace ncp::cli {

namespace {

// Brute-force trunk enumeration over every σ gets expensive past this.
constexpr int kMaxBruteNeurons = 16;

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++r_.checked;
    if (!ok && r_.status == CheckStatus::Pass) {
      r_.status = CheckStatus::Fail;
      r_.detail = what;
    }
  }

  CheckResult skip(std::string why) {
    r_.status = CheckStatus::Skipped;
    r_.detail = std::move(why);
    return r_;
  }

  CheckResult done() const { return r_; }

 private:
  CheckResult r_;
};

CheckResult trunk_enumeration(const Code& c) {
  Check k("trunk_enumeration");
  if (c.n() > kMaxBruteNeurons) return k.skip("more than 16 neurons");
  std::set<MemberSet> brute;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.n()); ++s) {
    MemberSet m = trunk_members(c, Codeword(s));
    if (m.any()) brute.insert(std::move(m));
  }
  std::set<MemberSet> listed;
  for (const Trunk& t : distinct_nonempty_trunks(c)) listed.insert(t.members);
  k.expect(listed == brute, "trunk list differs from the trunks of all subsets");
  k.expect(trunk_count(c) == brute.size(), "trunk_count disagrees with the trunk list");
  return k.done();
}

CheckResult completion(const Code& c) {
  Check k("intersection_completion");
  const Code hat = intersection_completion(c);
  k.expect(is_intersection_complete(hat), "completion is not intersection-complete");
  k.expect(intersection_completion(hat) == hat, "completion is not idempotent");
  k.expect(std::includes(hat.begin(), hat.end(), c.begin(), c.end()), "completion lost codewords");
  k.expect(is_intersection_complete(c) == (hat == c), "completeness test disagrees with closure");
  // Completed codes have one nonempty trunk per codeword.
  k.expect(trunk_count(hat) == hat.size(), "completion trunks do not biject with codewords");
  return k.done();
}

CheckResult covered_codes(const Code& c, const std::vector<CoveredCode>& down) {
  Check k("covered_codes");
  const std::size_t t = trunk_count(c);
  for (const CoveredCode& cc : down) {
    const std::string at = "neuron " + std::to_string(cc.neuron);
    k.expect(trunk_count(cc.code) + 1 == t, at + ": trunk count is not one less");
    k.expect(image(cc.morphism) == cc.code, at + ": morphism image differs");
    k.expect(covers(c, cc.code), at + ": does not cover");
  }
  return k.done();
}

CheckResult redundant_deletion(const Code& c) {
  Check k("redundant_deletion");
  for (const NeuronClassification& cls : classify_neurons(c)) {
    if (cls.status != NeuronStatus::Redundant) continue;
    const auto [d, del] = deletion_map(c, cls.neuron);
    const std::string at = "neuron " + std::to_string(cls.neuron);
    k.expect(is_isomorphism(recover_determining_trunks(c, d, del), d),
             at + ": deletion is not an isomorphism");
  }
  return k.done();
}

CheckResult covering_codes(const Code& c) {
  Check k("covering_codes");
  if (c.n() >= kMaxNeurons) return k.skip("no room for a new neuron");
  const std::size_t t = trunk_count(c);
  for (const CoverConstruction& cc : covering_constructions(c)) {
    const std::string at = "type " + std::to_string(static_cast<int>(cc.type)) + " at mu " +
                           cc.isolated.mu.to_string();
    k.expect(covers(cc.result, c), at + ": result does not cover");
    k.expect(trunk_count(cc.result) == t + 1, at + ": trunk count is not one more");
    k.expect(verify_cover_completion(c, cc), at + ": completion differs from int_comp_cover");
    const auto [base, del] = deletion_map(cc.result, cc.alpha);
    k.expect(base == c && is_morphism(cc.result, c, del), at + ": deleting alpha is not onto");
    bool found = false;
    for (const CoveredCode& back : all_covered_codes(cc.result)) {
      found = found || is_isomorphic(back.code, c);
    }
    k.expect(found, at + ": no covered code of the result is the base");
  }
  return k.done();
}

CheckResult pullback(const std::vector<CoveredCode>& down) {
  Check k("extension_pullback");
  for (const CoveredCode& cc : down) {
    k.expect(verify_extension_pullback(cc.morphism),
             "neuron " + std::to_string(cc.neuron) + ": equivalence chain breaks");
  }
  return k.done();
}

CheckResult morphism_identities(const Code& c, const std::vector<CoveredCode>& down) {
  Check k("morphism_identities");
  for (const CoveredCode& cc : down) {
    const Morphism& f = cc.morphism;
    const std::string at = "neuron " + std::to_string(cc.neuron);
    k.expect(f(Codeword{}).empty(), at + ": empty codeword not fixed");
    for (Codeword a : c) {
      for (Codeword b : c) {
        if (c.contains(a & b)) {
          k.expect(f(a & b) == (f(a) & f(b)), at + ": image of an intersection differs");
        }
      }
    }
    const Morphism g = extend_to_completion(f);
    bool agrees = image(g) == intersection_completion(cc.code);
    for (Codeword w : c) agrees = agrees && g(w) == f(w);
    k.expect(agrees, at + ": completion extension does not extend");
  }
  return k.done();
}

CheckResult trunk_minors(const Code& c) {
  Check k("trunk_minors");
  for (const Trunk& t : distinct_nonempty_trunks(c)) {
    const auto [m, f] = trunk_minor(c, t.base);
    k.expect(is_morphism(c, m, f), t.base.to_string() + ": trunk map is not a morphism");
    k.expect(is_minor(c, m), t.base.to_string() + ": trunk code is not a minor");
  }
  return k.done();
}

CheckResult essential_meets(const Code& c) {
  Check k("essential_neuron_meets");
  if (!is_intersection_complete(c)) return k.skip("code is not intersection-complete");
  for (const NeuronClassification& cls : classify_neurons(c)) {
    if (cls.status != NeuronStatus::Essential) continue;
    const CoveredCode cc = covered_code(c, cls.neuron);
    const Codeword mu = meet_of(c, trunk_members(c, Codeword::singleton(cls.neuron)));
    const Codeword rest = mu.without(cls.neuron);
    const std::string at = "neuron " + std::to_string(cls.neuron);
    k.expect(c.contains(rest), at + ": meet minus the neuron is missing");
    k.expect(c.contains(rest) && cc.morphism(mu) == cc.morphism(rest),
             at + ": covered map separates the meet");
  }
  return k.done();
}

CheckResult isolated_suite(const Code& c) {
  Check k("isolated_subsets");
  if (!is_intersection_complete(c)) return k.skip("code is not intersection-complete");
  if (c.n() >= kMaxNeurons) return k.skip("no room for a new neuron");
  for (const IsolatedSubset& i : isolated_subsets(c)) {
    const std::string at = "mu " + i.mu.to_string();
    std::vector<Codeword> rest{i.mu};
    for (Codeword w : c) {
      if (!i.contains(w)) rest.push_back(w);
    }
    k.expect(is_intersection_complete(Code::from_codewords(c.n(), rest)),
             at + ": removing the subset breaks completeness");
    const Code up = int_comp_cover(c, i);
    k.expect(is_intersection_complete(up), at + ": cover is not intersection-complete");
    k.expect(covers(up, c), at + ": cover does not cover");
  }
  return k.done();
}

}  // namespace

std::vector<CheckResult> verify_code(const Code& code) {
  const std::vector<CoveredCode> down = covered_codes_by_neuron(code);
  return {trunk_enumeration(code),      completion(code),        covered_codes(code, down),
          redundant_deletion(code),     covering_codes(code),    pullback(down),
          morphism_identities(code, down), trunk_minors(code),  essential_meets(code),
          isolated_suite(code)};
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

}  // namespace ncp::cli
