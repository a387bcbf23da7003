#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ncp/code.hpp"
#include "ncp/codeword.hpp"

namespace ncp {

/// Membership bitset over the codeword indices of the owning code.
using MemberSet = boost::dynamic_bitset<std::uint64_t>;

/// Tk_C(σ): the codewords of a code that contain σ. Trunks are compared by
/// their member sets, never by the base they were built from.
struct Trunk {
  Codeword base;
  MemberSet members;
  std::uint64_t owner = 0;

  bool empty() const { return members.none(); }
  std::size_t size() const { return members.count(); }
  bool has(std::size_t codeword_index) const { return members.test(codeword_index); }

  friend bool operator==(const Trunk& a, const Trunk& b) {
    return a.owner == b.owner && a.members == b.members;
  }
};

/// Canonical trunk order: larger member sets first, then lexicographic on
/// the ascending list of member codeword indices.
bool trunk_order_less(const MemberSet& a, const MemberSet& b);

MemberSet trunk_members(const Code& code, Codeword sigma);

/// Throws Error(IndexOutOfRange) when sigma leaves [n].
Trunk trunk(const Code& code, Codeword sigma);

/// Wraps an arbitrary member set; base is the intersection of the members.
Trunk trunk_from_members(const Code& code, MemberSet members);

/// True iff `members` is exactly Tk(σ) for some σ (the empty set counts only
/// when some σ has an empty trunk).
bool is_trunk(const Code& code, const MemberSet& members);

/// Intersection of the member codewords; the universe [n] for no members.
Codeword meet_of(const Code& code, const MemberSet& members);

/// Every distinct nonempty trunk, including Tk(∅) = C, in canonical order.
std::vector<Trunk> distinct_nonempty_trunks(const Code& code);

/// Nonempty trunks other than the whole code, in canonical order.
std::vector<Trunk> proper_trunks(const Code& code);

std::size_t trunk_count(const Code& code);

std::vector<Codeword> member_codewords(const Code& code, const MemberSet& members);

}  // namespace ncp
