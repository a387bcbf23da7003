#include "ncp/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "ncp/canonical.hpp"
#include "ncp/errors.hpp"

namespace ncp {

Morphism::Morphism(Code source, std::vector<Trunk> trunks)
    : source_(std::move(source)), trunks_(std::move(trunks)), table_(source_.size()) {
  for (std::size_t j = 0; j < trunks_.size(); ++j) {
    const MemberSet& m = trunks_[j].members;
    for (auto i = m.find_first(); i != MemberSet::npos; i = m.find_next(i)) {
      table_[i] = table_[i].with(static_cast<int>(j) + 1);
    }
  }
}

Codeword Morphism::operator()(Codeword c) const {
  auto idx = source_.index_of(c);
  if (!idx) throw Error(ErrorKind::NotTotal, "codeword " + c.to_string() + " is not in the source");
  return table_[*idx];
}

CodeMap Morphism::to_map() const {
  CodeMap out;
  for (std::size_t i = 0; i < source_.size(); ++i) out.emplace(source_[i], table_[i]);
  return out;
}

Morphism make_morphism(const Code& source, std::vector<Trunk> trunks) {
  if (trunks.size() > static_cast<std::size_t>(kMaxNeurons)) {
    throw Error(ErrorKind::IndexOutOfRange, "a morphism may target at most 64 neurons");
  }
  return Morphism(source, std::move(trunks));
}

Morphism morphism_from_trunks(const Code& source, std::vector<Trunk> trunks) {
  for (std::size_t j = 0; j < trunks.size(); ++j) {
    const Trunk& t = trunks[j];
    const std::string where = "trunk " + std::to_string(j + 1);
    if (t.owner != source.fingerprint() || t.members.size() != source.size()) {
      throw Error(ErrorKind::NotAProperTrunk, where + " belongs to a different code");
    }
    if (t.members.none()) throw Error(ErrorKind::NotAProperTrunk, where + " is empty");
    if (t.members.all()) throw Error(ErrorKind::NotAProperTrunk, where + " is the whole code");
    if (!is_trunk(source, t.members)) {
      throw Error(ErrorKind::NotAProperTrunk, where + " is not a trunk");
    }
  }
  return make_morphism(source, std::move(trunks));
}

namespace {

// Source-indexed images of an explicit map; throws NotTotal on gaps.
std::vector<Codeword> tabulate(const Code& source, const Code& target, const CodeMap& f) {
  std::vector<Codeword> images;
  images.reserve(source.size());
  for (Codeword c : source) {
    auto it = f.find(c);
    if (it == f.end()) throw Error(ErrorKind::NotTotal, "map is undefined on " + c.to_string());
    if (!target.contains(it->second)) {
      throw Error(ErrorKind::NotTotal,
                  "map sends " + c.to_string() + " outside the target to " + it->second.to_string());
    }
    images.push_back(it->second);
  }
  if (f.size() != source.size()) {
    throw Error(ErrorKind::NotTotal, "map is defined on codewords outside the source");
  }
  return images;
}

MemberSet preimage(const std::vector<Codeword>& images, const Code& target, const MemberSet& t) {
  MemberSet out(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (t.test(*target.index_of(images[i]))) out.set(i);
  }
  return out;
}

std::uint64_t drop_bit(std::uint64_t b, int neuron) {
  const std::uint64_t low = (std::uint64_t{1} << (neuron - 1)) - 1;
  const std::uint64_t high = neuron == 64 ? 0 : (b >> neuron);
  return (b & low) | (high << (neuron - 1));
}

}  // namespace

bool is_morphism(const Code& source, const Code& target, const CodeMap& f) {
  const std::vector<Codeword> images = tabulate(source, target, f);
  for (const Trunk& t : proper_trunks(target)) {
    const MemberSet pre = preimage(images, target, t.members);
    if (pre.none() || pre.all() || !is_trunk(source, pre)) return false;
  }
  return true;
}

Morphism recover_determining_trunks(const Code& source, const Code& target, const CodeMap& f) {
  if (!is_morphism(source, target, f)) {
    throw Error(ErrorKind::NotAMorphism, "map is not a morphism of codes");
  }
  const std::vector<Codeword> images = tabulate(source, target, f);
  std::vector<Trunk> trunks;
  for (int j = 1; j <= target.n(); ++j) {
    const MemberSet tj = trunk_members(target, Codeword::singleton(j));
    trunks.push_back(trunk_from_members(source, preimage(images, target, tj)));
  }
  Morphism m = make_morphism(source, std::move(trunks));
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (m.at(i) != images[i]) {
      throw Error(ErrorKind::Internal, "recovered trunks disagree with the map");
    }
  }
  return m;
}

Code image(const Morphism& f) {
  return Code::from_codewords(f.target_n(), {f.table().begin(), f.table().end()});
}

std::pair<Code, CodeMap> trunk_minor(const Code& code, Codeword sigma) {
  const Trunk t = trunk(code, sigma);
  std::vector<Codeword> words{Codeword{}};
  CodeMap map;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const Codeword image_of = t.has(i) ? code[i] : Codeword{};
    map.emplace(code[i], image_of);
    words.push_back(image_of);
  }
  return {Code::from_codewords(code.n(), std::move(words)), std::move(map)};
}

bool is_generated(const Code& code, const MemberSet& t, std::span<const MemberSet> generators) {
  // The largest subcollection whose intersection can still contain t is the
  // set of generators above t; t is generated iff that intersection is t.
  MemberSet meet(code.size());
  meet.set();
  for (const MemberSet& g : generators) {
    if (g.size() == t.size() && t.is_subset_of(g)) meet &= g;
  }
  return meet == t;
}

bool is_generated(const Trunk& t, std::span<const Trunk> generators) {
  MemberSet meet(t.members.size());
  meet.set();
  for (const Trunk& g : generators) {
    if (g.owner == t.owner && t.members.is_subset_of(g.members)) meet &= g.members;
  }
  return meet == t.members;
}

bool factor_exists(const Morphism& f, const Morphism& g) {
  if (!(f.source() == g.source())) {
    throw Error(ErrorKind::SourceMismatch, "factorization needs morphisms from the same code");
  }
  std::vector<MemberSet> generators;
  for (const Trunk& t : f.trunks()) {
    if (!t.empty()) generators.push_back(t.members);
  }
  for (const Trunk& t : g.trunks()) {
    if (t.empty()) continue;
    if (!is_generated(f.source(), t.members, generators)) return false;
  }
  return true;
}

bool is_isomorphism(const Morphism& f, const Code& target) {
  const Code img = image(f);
  if (!std::equal(img.begin(), img.end(), target.begin(), target.end())) {
    throw Error(ErrorKind::NotSurjective, "morphism image differs from " + target.to_string());
  }
  return trunk_count(f.source()) == trunk_count(target);
}

Morphism compose(const Morphism& f, const Morphism& g) {
  const Code& mid = g.source();
  const Code& src = f.source();
  std::vector<MemberSet> slots(static_cast<std::size_t>(g.target_n()), MemberSet(src.size()));
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto idx = mid.index_of(f.at(i));
    if (!idx) {
      throw Error(ErrorKind::SourceMismatch,
                  "image codeword " + f.at(i).to_string() + " is not in the second source");
    }
    const Codeword out = g.at(*idx);
    for (int k : out.neurons()) slots[static_cast<std::size_t>(k - 1)].set(i);
  }
  std::vector<Trunk> trunks;
  trunks.reserve(slots.size());
  for (auto& s : slots) trunks.push_back(trunk_from_members(src, std::move(s)));
  return make_morphism(src, std::move(trunks));
}

namespace {

class SurjectionSearch {
 public:
  SurjectionSearch(const Code& source, const Code& target, bool exact_sizes, SearchLimits limits)
      : source_(source), target_(target), exact_(exact_sizes), limits_(limits),
        candidates_(proper_trunks(source)), partial_(source.size(), 0),
        chosen_(static_cast<std::size_t>(target.n())) {
    for (int j = 1; j <= target.n(); ++j) {
      const std::size_t need = trunk_members(target, Codeword::singleton(j)).count();
      if (need > 0) order_.push_back({j, need});
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [](const Slot& a, const Slot& b) { return a.need > b.need; });
  }

  std::optional<Morphism> run() {
    if (!descend(0)) return std::nullopt;
    std::vector<Trunk> trunks;
    for (std::size_t j = 0; j < chosen_.size(); ++j) {
      trunks.push_back(chosen_[j] ? candidates_[*chosen_[j]]
                                  : trunk_from_members(source_, MemberSet(source_.size())));
    }
    return make_morphism(source_, std::move(trunks));
  }

 private:
  struct Slot {
    int neuron;
    std::size_t need;
  };

  bool projections_match(std::uint64_t mask) const {
    std::vector<std::uint64_t> lhs(partial_);
    std::vector<std::uint64_t> rhs;
    rhs.reserve(target_.size());
    for (Codeword d : target_) rhs.push_back(d.bits() & mask);
    std::sort(lhs.begin(), lhs.end());
    lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());
    return lhs == rhs;
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) return projections_match(target_.universe().bits());
    const Slot slot = order_[depth];
    const std::uint64_t bit = std::uint64_t{1} << (slot.neuron - 1);
    mask_ |= bit;
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      const MemberSet& m = candidates_[c].members;
      const std::size_t size = m.count();
      if (size < slot.need || (exact_ && size != slot.need)) continue;
      if (++assignments_ > limits_.max_assignments) {
        throw Error(ErrorKind::CapExceeded,
                    "morphism search exceeded " + std::to_string(limits_.max_assignments) +
                        " assignments");
      }
      for (auto i = m.find_first(); i != MemberSet::npos; i = m.find_next(i)) partial_[i] |= bit;
      chosen_[static_cast<std::size_t>(slot.neuron - 1)] = c;
      if (projections_match(mask_) && descend(depth + 1)) return true;
      for (auto i = m.find_first(); i != MemberSet::npos; i = m.find_next(i)) partial_[i] &= ~bit;
      chosen_[static_cast<std::size_t>(slot.neuron - 1)].reset();
    }
    mask_ &= ~bit;
    return false;
  }

  const Code& source_;
  const Code& target_;
  bool exact_;
  SearchLimits limits_;
  std::vector<Trunk> candidates_;
  std::vector<Slot> order_;
  std::vector<std::uint64_t> partial_;
  std::vector<std::optional<std::size_t>> chosen_;
  std::uint64_t mask_ = 0;
  std::size_t assignments_ = 0;
};

}  // namespace

std::optional<Morphism> find_surjective_morphism(const Code& source, const Code& target,
                                                 SearchLimits limits) {
  if (target.size() > source.size()) return std::nullopt;
  const std::size_t ts = trunk_count(source);
  const std::size_t tt = trunk_count(target);
  // Preimage is injective on trunks, so a surjection cannot add trunks.
  if (ts < tt) return std::nullopt;
  const bool iso = ts == tt;
  if (iso && source.size() != target.size()) return std::nullopt;
  return SurjectionSearch(source, target, iso, limits).run();
}

bool is_isomorphic(const Code& a, const Code& b) {
  if (canonical_form(a).key == canonical_form(b).key) return true;
  if (a.size() != b.size() || trunk_count(a) != trunk_count(b)) return false;
  return find_surjective_morphism(a, b).has_value();
}

Morphism extend_to_completion(const Morphism& f) {
  const Code& c = f.source();
  const Code hat = intersection_completion(c);
  std::vector<Trunk> smallest;
  smallest.reserve(f.trunks().size());
  for (const Trunk& t : f.trunks()) {
    if (t.empty()) {
      smallest.push_back(trunk_from_members(hat, MemberSet(hat.size())));
      continue;
    }
    smallest.push_back(trunk(hat, meet_of(c, t.members)));
  }
  return make_morphism(hat, std::move(smallest));
}

std::pair<Code, CodeMap> deletion_map(const Code& code, int neuron) {
  Code target = delete_neuron(code, neuron);
  CodeMap map;
  for (Codeword c : code) map.emplace(c, Codeword(drop_bit(c.bits(), neuron)));
  return {std::move(target), std::move(map)};
}

}  // namespace ncp
