#include "ncp/ascent.hpp"

#include <algorithm>

#include "ncp/canonical.hpp"
#include "ncp/descent.hpp"
#include "ncp/errors.hpp"
#include "ncp/parallel.hpp"

namespace ncp {

bool IsolatedSubset::contains(Codeword c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

namespace {

void require_complete(const Code& host) {
  if (!is_intersection_complete(host)) {
    throw Error(ErrorKind::HostNotIntersectionComplete,
                host.to_string() + " is not intersection-complete");
  }
}

bool closed_under_meet(const std::vector<Codeword>& words) {
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      if (!std::binary_search(words.begin(), words.end(), words[a] & words[b])) return false;
    }
  }
  return true;
}

// Up-sets U of the host strictly above mu; {mu} ∪ U is reported when it is
// closed under intersection. Candidates are visited largest first, so every
// strict superset of a candidate is decided before the candidate itself.
class IsolatedEnumerator {
 public:
  IsolatedEnumerator(const Code& host, Codeword mu) : host_(host), mu_(mu) {
    for (Codeword c : host) {
      if (c != mu && c.contains(mu)) above_.push_back(c);
    }
    std::stable_sort(above_.begin(), above_.end(),
                     [](Codeword a, Codeword b) { return a.size() > b.size(); });
    included_.assign(above_.size(), false);
  }

  void run(std::vector<IsolatedSubset>& out) {
    out_ = &out;
    visit(0);
  }

 private:
  bool supersets_included(std::size_t k) const {
    for (std::size_t j = 0; j < k; ++j) {
      if (!included_[j] && above_[j] != above_[k] && above_[j].contains(above_[k])) return false;
    }
    return true;
  }

  void visit(std::size_t k) {
    if (k == above_.size()) {
      std::vector<Codeword> members{mu_};
      for (std::size_t j = 0; j < above_.size(); ++j) {
        if (included_[j]) members.push_back(above_[j]);
      }
      std::sort(members.begin(), members.end());
      if (closed_under_meet(members)) out_->push_back({host_, std::move(members), mu_});
      return;
    }
    visit(k + 1);
    if (supersets_included(k)) {
      included_[k] = true;
      visit(k + 1);
      included_[k] = false;
    }
  }

  const Code& host_;
  Codeword mu_;
  std::vector<Codeword> above_;
  std::vector<bool> included_;
  std::vector<IsolatedSubset>* out_ = nullptr;
};

}  // namespace

std::optional<IsolatedSubset> is_isolated(const Code& host, std::vector<Codeword> members) {
  require_complete(host);
  for (Codeword c : members) {
    if (!host.contains(c)) {
      throw Error(ErrorKind::NotInHost, c.to_string() + " is not a codeword of the host");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || !closed_under_meet(members)) return std::nullopt;
  Codeword mu = members.front();
  for (Codeword c : members) mu = mu & c;
  for (Codeword tau : members) {
    if (tau == mu) continue;
    for (Codeword c : host) {
      if (c.contains(tau) && !std::binary_search(members.begin(), members.end(), c)) {
        return std::nullopt;
      }
    }
  }
  return IsolatedSubset{host, std::move(members), mu};
}

std::vector<IsolatedSubset> isolated_subsets(const Code& host) {
  require_complete(host);
  std::vector<IsolatedSubset> out;
  for (Codeword mu : host) IsolatedEnumerator(host, mu).run(out);
  std::stable_sort(out.begin(), out.end(), [](const IsolatedSubset& a, const IsolatedSubset& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::set<CoverType> applicable_types(const Code& base, const IsolatedSubset& isolated,
                                     CoverOptions options) {
  if (!(isolated.host == intersection_completion(base))) {
    throw Error(ErrorKind::HostMismatch, "isolated subset does not live in the completion of " +
                                             base.to_string());
  }
  const Codeword mu = isolated.mu;
  const bool mu_in_base = base.contains(mu);

  bool any_rest = false;
  Codeword meet = base.universe();
  bool trunk_escapes = false;
  for (Codeword c : base) {
    const bool in_i = isolated.contains(c);
    if (in_i && c != mu) {
      any_rest = true;
      meet = meet & c;
    }
    if (!in_i && c.contains(mu)) trunk_escapes = true;
  }
  bool meet_is_mu = false;
  if (any_rest) {
    meet_is_mu = meet == mu;
  } else if (options.empty_meet == EmptyMeet::Universe) {
    meet_is_mu = mu == base.universe();
  }

  std::set<CoverType> types;
  if (mu_in_base) types.insert(CoverType::Type1);
  if (mu_in_base && trunk_escapes) types.insert(CoverType::Type2);
  if (mu_in_base && meet_is_mu) types.insert(CoverType::Type3);
  if (!mu_in_base && meet_is_mu && trunk_escapes) types.insert(CoverType::Type4);
  return types;
}

namespace {

int fresh_neuron(const Code& code) {
  if (code.n() >= kMaxNeurons) {
    throw Error(ErrorKind::IndexOutOfRange, "no room for a new neuron beyond 64");
  }
  return code.n() + 1;
}

}  // namespace

CoverConstruction construct_cover(const Code& base, const IsolatedSubset& isolated, CoverType type,
                                  CoverOptions options) {
  if (!applicable_types(base, isolated, options).contains(type)) {
    throw Error(ErrorKind::TypeNotApplicable,
                "type " + std::to_string(static_cast<int>(type)) + " does not apply");
  }
  const int alpha = fresh_neuron(base);
  const Codeword mu = isolated.mu;
  const bool keep_mu = type == CoverType::Type1 || type == CoverType::Type3;
  const bool mu_gets_alpha = type != CoverType::Type3;

  std::vector<Codeword> words;
  for (Codeword c : base) {
    if (!isolated.contains(c)) {
      words.push_back(c);
    } else if (c != mu || mu_gets_alpha) {
      words.push_back(c.with(alpha));
    }
  }
  if (keep_mu) words.push_back(mu);
  if (std::find(words.begin(), words.end(), Codeword{}) == words.end()) {
    throw Error(ErrorKind::InvalidCover, "construction would drop the empty codeword");
  }
  Code completion = intersection_completion(base);
  Code result = Code::from_codewords(alpha, std::move(words));
  return {base, std::move(completion), isolated, type, alpha, std::move(result)};
}

Code int_comp_cover(const Code& code, const IsolatedSubset& isolated) {
  require_complete(code);
  if (!(isolated.host == code)) {
    throw Error(ErrorKind::HostMismatch, "isolated subset belongs to a different code");
  }
  const int alpha = fresh_neuron(code);
  std::vector<Codeword> words{isolated.mu};
  for (Codeword c : code) words.push_back(isolated.contains(c) ? c.with(alpha) : c);
  return Code::from_codewords(alpha, std::move(words));
}

std::vector<CoverConstruction> covering_constructions(const Code& base, CoverOptions options) {
  const Code hat = intersection_completion(base);
  std::vector<CoverConstruction> out;
  for (const IsolatedSubset& iso : isolated_subsets(hat)) {
    for (CoverType t : applicable_types(base, iso, options)) {
      // Type 2 at μ = ∅ would remove the empty codeword.
      if (t == CoverType::Type2 && iso.mu.empty()) continue;
      out.push_back(construct_cover(base, iso, t, options));
    }
  }
  return out;
}

std::vector<CoverConstruction> all_covering_codes(const Code& base, CoverOptions options) {
  std::vector<CoverConstruction> all = covering_constructions(base, options);
  std::vector<std::string> keys(all.size());
  parallel_for(all.size(), [&](std::size_t i) { keys[i] = canonical_form(all[i].result).key; });
  std::vector<CoverConstruction> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (seen.insert(keys[i]).second) out.push_back(std::move(all[i]));
  }
  return out;
}

bool verify_cover_completion(const Code& base, const CoverConstruction& cc) {
  const Code hat = intersection_completion(base);
  if (!(cc.isolated.host == hat)) return false;
  return intersection_completion(cc.result) == int_comp_cover(hat, cc.isolated);
}

PullbackReport extension_pullback(const Morphism& f) {
  const Code& c = f.source();
  const Code d = image(f);
  const Morphism g = extend_to_completion(f);
  const Code& hat_c = g.source();
  const Code hat_d = intersection_completion(d);

  PullbackReport r;
  r.extension_ok = image(g) == hat_d;
  for (std::size_t i = 0; i < c.size() && r.extension_ok; ++i) {
    r.extension_ok = g(c[i]) == f.at(i);
  }
  r.completions_cover = covers(hat_c, hat_d);
  r.completion_trunks_plus_one = trunk_count(hat_c) == trunk_count(hat_d) + 1;
  r.completion_size_plus_one = hat_c.size() == hat_d.size() + 1;
  r.trunks_plus_one = trunk_count(c) == trunk_count(d) + 1;
  r.codes_cover = covers(c, d);
  return r;
}

bool verify_extension_pullback(const Morphism& f) { return extension_pullback(f).consistent(); }

}  // namespace ncp
