#include "ncp/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ncp/errors.hpp"
#include "ncp/trunk.hpp"

namespace ncp {
namespace {

std::optional<int> highest_trivial(const Code& code) {
  for (int i = code.n(); i >= 1; --i) {
    if (trunk_members(code, Codeword::singleton(i)).none()) return i;
  }
  return std::nullopt;
}

// Tk(i) = Tk(σ) for some σ avoiding i iff it holds for the largest such σ,
// the meet of Tk(i) minus i.
std::optional<int> highest_redundant(const Code& code) {
  for (int i = code.n(); i >= 1; --i) {
    const MemberSet ti = trunk_members(code, Codeword::singleton(i));
    if (ti.none()) continue;
    const Codeword sigma = meet_of(code, ti).without(i);
    if (trunk_members(code, sigma) == ti) return i;
  }
  return std::nullopt;
}

// Colour refinement on neurons: start from trunk sizes, then repeatedly fold
// in the colours of co-firing neurons. Colour ids follow the sorted order of
// their signatures, so they are invariant under neuron relabeling.
std::vector<int> neuron_colours(const Code& code) {
  const int n = code.n();
  std::vector<int> colour(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    colour[i] = static_cast<int>(trunk_members(code, Codeword::singleton(i)).count());
  }
  std::size_t classes = 0;
  for (int round = 0; round <= n; ++round) {
    using Signature = std::pair<int, std::vector<std::vector<int>>>;
    std::vector<Signature> sig(n + 1);
    for (int i = 1; i <= n; ++i) {
      sig[i].first = colour[i];
      for (Codeword c : code) {
        if (!c.has(i)) continue;
        std::vector<int> inner;
        for (int j : c.neurons()) inner.push_back(colour[j]);
        std::sort(inner.begin(), inner.end());
        sig[i].second.push_back(std::move(inner));
      }
      std::sort(sig[i].second.begin(), sig[i].second.end());
    }
    std::map<Signature, int> ids;
    for (int i = 1; i <= n; ++i) ids.emplace(sig[i], 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (int i = 1; i <= n; ++i) colour[i] = ids.at(sig[i]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

std::vector<Codeword> relabel(const Code& code, const std::vector<int>& label) {
  std::vector<Codeword> out;
  out.reserve(code.size());
  for (Codeword c : code) {
    std::uint64_t b = 0;
    for (std::uint64_t bits = c.bits(); bits != 0; bits &= bits - 1) {
      b |= std::uint64_t{1} << (label[std::countr_zero(bits) + 1] - 1);
    }
    out.emplace_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Code reduce_code(const Code& code) {
  Code cur = code;
  while (auto i = highest_trivial(cur)) cur = delete_neuron(cur, *i);
  while (auto i = highest_redundant(cur)) cur = delete_neuron(cur, *i);
  return cur;
}

std::string serialize_key(const Code& code) {
  std::string key = std::to_string(code.n()) + ":";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i != 0) key += ',';
    key += '[';
    bool first = true;
    for (int j : code[i].neurons()) {
      if (!first) key += ',';
      key += std::to_string(j);
      first = false;
    }
    key += ']';
  }
  return key;
}

CanonicalForm canonical_form(const Code& code, std::size_t max_permutations) {
  const Code reduced = reduce_code(code);
  const int n = reduced.n();
  if (n == 0) return {reduced, serialize_key(reduced)};

  const std::vector<int> colour = neuron_colours(reduced);
  // Neurons ordered by colour; each run of equal colour is a tie class that
  // must be tried in every order.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return colour[a] < colour[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  double budget = 1.0;
  for (std::size_t s = 0; s < order.size();) {
    std::size_t e = s + 1;
    while (e < order.size() && colour[order[e]] == colour[order[s]]) ++e;
    runs.emplace_back(s, e);
    for (std::size_t k = 2; k <= e - s; ++k) budget *= static_cast<double>(k);
    s = e;
  }
  if (budget > static_cast<double>(max_permutations)) {
    throw Error(ErrorKind::CapExceeded,
                "canonical relabeling needs more than " + std::to_string(max_permutations) +
                    " permutations");
  }

  std::vector<int> label(n + 1, 0);
  std::optional<std::vector<Codeword>> best;
  while (true) {
    for (int pos = 0; pos < n; ++pos) label[order[pos]] = pos + 1;
    std::vector<Codeword> candidate = relabel(reduced, label);
    if (!best || candidate < *best) best = std::move(candidate);
    // Odometer over the tie classes.
    std::size_t r = 0;
    for (; r < runs.size(); ++r) {
      auto first = order.begin() + static_cast<std::ptrdiff_t>(runs[r].first);
      auto last = order.begin() + static_cast<std::ptrdiff_t>(runs[r].second);
      if (std::next_permutation(first, last)) break;
    }
    if (r == runs.size()) break;
  }
  Code canonical = Code::from_codewords(n, std::move(*best));
  std::string key = serialize_key(canonical);
  return {std::move(canonical), std::move(key)};
}

}  // namespace ncp
