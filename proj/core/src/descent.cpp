#include "ncp/descent.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "ncp/canonical.hpp"
#include "ncp/errors.hpp"

namespace ncp {

std::vector<NeuronClassification> classify_neurons(const Code& code) {
  std::vector<MemberSet> simple;
  for (int j = 1; j <= code.n(); ++j) simple.push_back(trunk_members(code, Codeword::singleton(j)));

  std::vector<NeuronClassification> out;
  for (int i = 1; i <= code.n(); ++i) {
    const MemberSet& ti = simple[static_cast<std::size_t>(i - 1)];
    if (ti.none()) {
      out.push_back({i, NeuronStatus::Trivial, std::nullopt});
      continue;
    }
    std::vector<MemberSet> others;
    Codeword witness;
    for (int j = 1; j <= code.n(); ++j) {
      if (j == i) continue;
      const MemberSet& tj = simple[static_cast<std::size_t>(j - 1)];
      others.push_back(tj);
      if (ti.is_subset_of(tj)) witness = witness.with(j);
    }
    if (is_generated(code, ti, others)) {
      out.push_back({i, NeuronStatus::Redundant, witness});
    } else {
      out.push_back({i, NeuronStatus::Essential, std::nullopt});
    }
  }
  return out;
}

CoveredCode covered_code(const Code& code, int neuron) {
  if (neuron < 1 || neuron > code.n()) {
    throw Error(ErrorKind::IndexOutOfRange, "neuron " + std::to_string(neuron) + " not in code");
  }
  const MemberSet ti = trunk_members(code, Codeword::singleton(neuron));
  if (ti.none()) {
    throw Error(ErrorKind::TrivialNeuron, "neuron " + std::to_string(neuron) + " is trivial");
  }
  std::set<MemberSet> collected;
  for (int j = 1; j <= code.n(); ++j) {
    const MemberSet tj = trunk_members(code, Codeword::singleton(j));
    if (tj != ti && tj.any()) collected.insert(tj);
    const MemberSet both = tj & ti;
    if (both != ti && both.any()) collected.insert(both);
  }
  std::vector<MemberSet> ordered(collected.begin(), collected.end());
  std::sort(ordered.begin(), ordered.end(), trunk_order_less);
  std::vector<Trunk> trunks;
  trunks.reserve(ordered.size());
  for (auto& m : ordered) trunks.push_back(trunk_from_members(code, std::move(m)));
  Morphism f = make_morphism(code, std::move(trunks));
  Code img = image(f);
  return {neuron, std::move(img), std::move(f)};
}

std::vector<int> covering_neurons(const Code& code) {
  std::uint64_t alive = 0;
  for (int i = 1; i <= code.n(); ++i) {
    if (trunk_members(code, Codeword::singleton(i)).any()) alive |= std::uint64_t{1} << (i - 1);
  }
  // Same deletion order as reduce_code: drop the highest redundant neuron
  // among the survivors until none is left.
  for (bool dropped = true; dropped;) {
    dropped = false;
    for (int i = code.n(); i >= 1 && !dropped; --i) {
      const std::uint64_t bit = std::uint64_t{1} << (i - 1);
      if (!(alive & bit)) continue;
      const MemberSet ti = trunk_members(code, Codeword::singleton(i));
      const Codeword sigma(meet_of(code, ti).bits() & alive & ~bit);
      if (trunk_members(code, sigma) == ti) {
        alive &= ~bit;
        dropped = true;
      }
    }
  }
  return Codeword(alive).neurons();
}

std::vector<CoveredCode> covered_codes_by_neuron(const Code& code) {
  std::vector<CoveredCode> out;
  for (int i : covering_neurons(code)) out.push_back(covered_code(code, i));
  return out;
}

std::vector<CoveredCode> all_covered_codes(const Code& code) {
  std::vector<CoveredCode> out;
  std::set<std::string> keys;
  for (auto& cc : covered_codes_by_neuron(code)) {
    if (keys.insert(canonical_form(cc.code).key).second) out.push_back(std::move(cc));
  }
  return out;
}

bool covers(const Code& upper, const Code& lower) {
  bool by_enumeration = false;
  for (const auto& cc : all_covered_codes(upper)) {
    if (is_isomorphic(cc.code, lower)) {
      by_enumeration = true;
      break;
    }
  }
  const bool by_criterion = trunk_count(upper) == trunk_count(lower) + 1 &&
                            find_surjective_morphism(upper, lower).has_value();
  if (by_enumeration != by_criterion) {
    throw Error(ErrorKind::Internal, "covering routes disagree for " + upper.to_string() +
                                         " over " + lower.to_string());
  }
  return by_enumeration;
}

namespace {

class MinorSearch {
 public:
  MinorSearch(const Code& lower, MinorLimits limits)
      : key_(canonical_form(lower).key), trunks_(trunk_count(lower)), limits_(limits) {}

  bool below(const Code& reduced, const std::string& key) {
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > limits_.max_nodes) {
      throw Error(ErrorKind::CapExceeded,
                  "minor search exceeded " + std::to_string(limits_.max_nodes) + " codes");
    }
    const bool result = decide(reduced, key);
    memo_.emplace(key, result);
    return result;
  }

 private:
  bool decide(const Code& reduced, const std::string& key) {
    if (key == key_) return true;
    const std::size_t t = trunk_count(reduced);
    // A surjection between codes with equal trunk counts is an isomorphism.
    if (t <= trunks_) return false;
    // Reduced codes have only essential neurons.
    for (int i = 1; i <= reduced.n(); ++i) {
      CanonicalForm next = canonical_form(covered_code(reduced, i).code);
      if (below(next.code, next.key)) return true;
    }
    return false;
  }

  std::string key_;
  std::size_t trunks_;
  MinorLimits limits_;
  std::unordered_map<std::string, bool> memo_;
  std::size_t nodes_ = 0;
};

}  // namespace

bool is_minor(const Code& upper, const Code& lower, MinorLimits limits) {
  MinorSearch search(lower, limits);
  CanonicalForm start = canonical_form(upper);
  return search.below(start.code, start.key);
}

}  // namespace ncp
