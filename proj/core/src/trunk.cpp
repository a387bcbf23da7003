#include "ncp/trunk.hpp"

#include <algorithm>
#include <set>

#include "ncp/errors.hpp"

namespace ncp {

bool trunk_order_less(const MemberSet& a, const MemberSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca > cb;
  std::size_t ia = a.find_first();
  std::size_t ib = b.find_first();
  while (ia != MemberSet::npos && ib != MemberSet::npos) {
    if (ia != ib) return ia < ib;
    ia = a.find_next(ia);
    ib = b.find_next(ib);
  }
  return ia == MemberSet::npos && ib != MemberSet::npos;
}

MemberSet trunk_members(const Code& code, Codeword sigma) {
  MemberSet m(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i].contains(sigma)) m.set(i);
  }
  return m;
}

Trunk trunk(const Code& code, Codeword sigma) {
  if (!code.universe().contains(sigma)) {
    throw Error(ErrorKind::IndexOutOfRange,
                "trunk base " + sigma.to_string() + " leaves [" + std::to_string(code.n()) + "]");
  }
  return Trunk{sigma, trunk_members(code, sigma), code.fingerprint()};
}

Codeword meet_of(const Code& code, const MemberSet& members) {
  Codeword meet = code.universe();
  for (auto i = members.find_first(); i != MemberSet::npos; i = members.find_next(i)) {
    meet = meet & code[i];
  }
  return meet;
}

Trunk trunk_from_members(const Code& code, MemberSet members) {
  const Codeword base = meet_of(code, members);
  return Trunk{base, std::move(members), code.fingerprint()};
}

bool is_trunk(const Code& code, const MemberSet& members) {
  if (members.size() != code.size()) return false;
  if (members.none()) return !code.contains(code.universe());
  return trunk_members(code, meet_of(code, members)) == members;
}

std::vector<Trunk> distinct_nonempty_trunks(const Code& code) {
  // A nonempty trunk is pinned down by the meet of its members, and those
  // meets are exactly the codewords of the intersection-completion.
  const Code hat = intersection_completion(code);
  std::set<MemberSet> seen;
  std::vector<Trunk> out;
  for (Codeword tau : hat) {
    MemberSet m = trunk_members(code, tau);
    if (m.none() || !seen.insert(m).second) continue;
    out.push_back(trunk_from_members(code, std::move(m)));
  }
  std::sort(out.begin(), out.end(),
            [](const Trunk& a, const Trunk& b) { return trunk_order_less(a.members, b.members); });
  return out;
}

std::vector<Trunk> proper_trunks(const Code& code) {
  std::vector<Trunk> all = distinct_nonempty_trunks(code);
  std::erase_if(all, [&](const Trunk& t) { return t.members.all(); });
  return all;
}

std::size_t trunk_count(const Code& code) { return distinct_nonempty_trunks(code).size(); }

std::vector<Codeword> member_codewords(const Code& code, const MemberSet& members) {
  std::vector<Codeword> out;
  for (auto i = members.find_first(); i != MemberSet::npos; i = members.find_next(i)) {
    out.push_back(code[i]);
  }
  return out;
}

}  // namespace ncp
