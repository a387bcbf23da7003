#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ncp/code.hpp"
#include "ncp/morphism.hpp"

namespace ncp {

/// Nonempty intersection-complete subset I of an intersection-complete host
/// such that no codeword outside I contains a non-minimal member of I.
struct IsolatedSubset {
  Code host;
  std::vector<Codeword> members;  // sorted
  Codeword mu;

  bool contains(Codeword c) const;
};

/// Throws Error(HostNotIntersectionComplete), or Error(NotInHost) when a
/// member is not a host codeword.
std::optional<IsolatedSubset> is_isolated(const Code& host, std::vector<Codeword> members);

/// Every isolated subset of `host`, ordered by size and then by codeword
/// sequence. Throws Error(HostNotIntersectionComplete).
std::vector<IsolatedSubset> isolated_subsets(const Code& host);

enum class CoverType { Type1 = 1, Type2 = 2, Type3 = 3, Type4 = 4 };

/// How the Type 3/4 condition "μ is the intersection of (D∩I)\{μ}" treats
/// an empty collection.
enum class EmptyMeet {
  Fails,     // the condition never holds for an empty collection
  Universe,  // the empty intersection is [n]
};

struct CoverOptions {
  EmptyMeet empty_meet = EmptyMeet::Fails;
};

/// Table conditions for each covering type. Throws Error(HostMismatch)
/// unless I.host is hat(D).
std::set<CoverType> applicable_types(const Code& base, const IsolatedSubset& isolated,
                                     CoverOptions options = {});

struct CoverConstruction {
  Code base;
  Code completion;
  IsolatedSubset isolated;
  CoverType type;
  int alpha;
  Code result;
};

/// Throws Error(TypeNotApplicable), Error(InvalidCover) (the result would
/// lose the empty codeword) or Error(IndexOutOfRange) (no room for α).
CoverConstruction construct_cover(const Code& base, const IsolatedSubset& isolated,
                                  CoverType type, CoverOptions options = {});

/// C_[I] = {μ} ∪ C \ I ∪ (I)_α for an intersection-complete C.
Code int_comp_cover(const Code& code, const IsolatedSubset& isolated);

/// Every (I, type) construction over hat(D), before any dedupe.
std::vector<CoverConstruction> covering_constructions(const Code& base,
                                                      CoverOptions options = {});

/// One construction per isomorphism class of covering code.
std::vector<CoverConstruction> all_covering_codes(const Code& base, CoverOptions options = {});

/// hat(result) == hat(D)_[I] as sets over [n+1].
bool verify_cover_completion(const Code& base, const CoverConstruction& cc);

struct PullbackReport {
  bool completions_cover = false;       // hat C covers hat D
  bool completion_trunks_plus_one = false;
  bool completion_size_plus_one = false;
  bool trunks_plus_one = false;
  bool codes_cover = false;              // C covers D
  bool extension_ok = false;             // g extends f, is surjective

  bool consistent() const {
    return extension_ok && completions_cover == completion_trunks_plus_one &&
           completions_cover == completion_size_plus_one &&
           completions_cover == trunks_plus_one && completions_cover == codes_cover;
  }
};

PullbackReport extension_pullback(const Morphism& f);

/// True iff covers(hat C, hat D) == covers(C, D) with the whole equivalence
/// chain agreeing, where D = image(f).
bool verify_extension_pullback(const Morphism& f);

}  // namespace ncp
