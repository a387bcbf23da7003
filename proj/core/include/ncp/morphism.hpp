#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ncp/code.hpp"
#include "ncp/trunk.hpp"

namespace ncp {

/// An explicit codeword-to-codeword table.
using CodeMap = std::map<Codeword, Codeword>;

/// A morphism of codes stored by its determining trunks T_1..T_m in the
/// source: c ↦ { j | c ∈ T_j }. Each T_j is a proper trunk, except that a
/// morphism recovered from a target with trivial neurons carries an empty
/// slot for each such neuron (that output neuron never fires).
class Morphism {
 public:
  const Code& source() const { return source_; }
  int target_n() const { return static_cast<int>(trunks_.size()); }
  std::span<const Trunk> trunks() const { return trunks_; }
  /// Image of the i-th source codeword.
  Codeword at(std::size_t source_index) const { return table_[source_index]; }
  std::span<const Codeword> table() const { return table_; }
  /// Throws Error(NotTotal) if c is not a source codeword.
  Codeword operator()(Codeword c) const;
  CodeMap to_map() const;

 private:
  friend Morphism make_morphism(const Code&, std::vector<Trunk>);
  Morphism(Code source, std::vector<Trunk> trunks);

  Code source_;
  std::vector<Trunk> trunks_;
  std::vector<Codeword> table_;
};

/// Unchecked constructor used by the library; trunks must belong to `source`
/// and be proper or empty.
Morphism make_morphism(const Code& source, std::vector<Trunk> trunks);

/// Throws Error(NotAProperTrunk) if a trunk is empty, the whole code, not a
/// trunk, or owned by another code; Error(IndexOutOfRange) for m > 64.
Morphism morphism_from_trunks(const Code& source, std::vector<Trunk> trunks);

/// Definitional test: the preimage of every proper trunk of `target` is a
/// proper trunk of `source`. Throws Error(NotTotal) when `f` misses a source
/// codeword or maps outside `target`.
bool is_morphism(const Code& source, const Code& target, const CodeMap& f);

/// T_j = f⁻¹(Tk_D(j)) for j in [m]. Throws Error(NotAMorphism).
Morphism recover_determining_trunks(const Code& source, const Code& target,
                                    const CodeMap& f);

Code image(const Morphism& f);

/// {∅} ∪ Tk_C(σ) with the map fixing the trunk and sending the rest to ∅.
std::pair<Code, CodeMap> trunk_minor(const Code& code, Codeword sigma);

/// True iff `t` is an intersection of some subcollection of `generators`
/// (the empty intersection being the whole code).
bool is_generated(const Code& code, const MemberSet& t,
                  std::span<const MemberSet> generators);
bool is_generated(const Trunk& t, std::span<const Trunk> generators);

/// Whether g factors as h∘f with h a surjective morphism image(f) → image(g).
/// Throws Error(SourceMismatch) for different sources.
bool factor_exists(const Morphism& f, const Morphism& g);

/// Throws Error(NotSurjective) unless image(f) == target.
bool is_isomorphism(const Morphism& f, const Code& target);

/// Mapping tables composed, then trunks re-derived. Throws
/// Error(SourceMismatch) if image(f) is not inside source(g).
Morphism compose(const Morphism& f, const Morphism& g);

struct SearchLimits {
  std::size_t max_assignments = 10'000'000;
};

/// Some surjective morphism C → D given by proper trunks of C, or nullopt
/// if none exists. Throws Error(CapExceeded) when the search budget runs out.
std::optional<Morphism> find_surjective_morphism(const Code& source, const Code& target,
                                                 SearchLimits limits = {});

bool is_isomorphic(const Code& a, const Code& b);

/// The unique morphism hat(C) → hat(image f) that agrees with f on C.
Morphism extend_to_completion(const Morphism& f);

/// Deleting `neuron` as an explicit map C → delete_neuron(C, neuron).
std::pair<Code, CodeMap> deletion_map(const Code& code, int neuron);

}  // namespace ncp
