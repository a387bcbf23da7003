#include "ncp/code.hpp"

#include <algorithm>
#include <unordered_set>

#include "ncp/errors.hpp"

namespace ncp {

Codeword Codeword::of(std::initializer_list<int> neurons) {
  return from_indices(std::span<const int>(neurons.begin(), neurons.size()));
}

Codeword Codeword::from_indices(std::span<const int> neurons) {
  std::uint64_t bits = 0;
  for (int i : neurons) {
    if (i < 1 || i > kMaxNeurons) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "neuron index " + std::to_string(i) + " outside 1..64");
    }
    bits |= std::uint64_t{1} << (i - 1);
  }
  return Codeword(bits);
}

std::vector<int> Codeword::neurons() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Codeword::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : neurons()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

namespace {

std::uint64_t hash_words(int n, const std::vector<Codeword>& words) {
  // FNV-1a over n and the sorted bitmasks.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
      h ^= (v >> (8 * k)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  for (Codeword c : words) mix(c.bits());
  return h;
}

}  // namespace

Code::Code() : Code(0, {Codeword{}}) {}

Code::Code(int n, std::vector<Codeword> words)
    : n_(n), words_(std::move(words)), fingerprint_(hash_words(n_, words_)) {}

Code Code::from_codewords(int n, std::vector<Codeword> words) {
  if (n < 0 || n > kMaxNeurons) {
    throw Error(ErrorKind::IndexOutOfRange,
                "ambient neuron count " + std::to_string(n) + " outside 0..64");
  }
  const Codeword all = Codeword::universe(n);
  for (Codeword c : words) {
    if (!all.contains(c)) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "codeword " + c.to_string() + " uses a neuron outside [" + std::to_string(n) + "]");
    }
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  if (words.empty() || !words.front().empty()) {
    throw Error(ErrorKind::MissingEmptyCodeword, "a code must contain the empty codeword");
  }
  return Code(n, std::move(words));
}

Code Code::from_lists(int n, const std::vector<std::vector<int>>& raw) {
  std::vector<Codeword> words;
  words.reserve(raw.size());
  for (const auto& list : raw) {
    for (int i : list) {
      if (i < 1 || i > n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "neuron " + std::to_string(i) + " outside [" + std::to_string(n) + "]");
      }
    }
    words.push_back(Codeword::from_indices(list));
  }
  return from_codewords(n, std::move(words));
}

bool Code::contains(Codeword c) const { return std::binary_search(words_.begin(), words_.end(), c); }

std::optional<std::size_t> Code::index_of(Codeword c) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), c);
  if (it == words_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

Code Code::with_ambient(int n) const { return from_codewords(n, words_); }

std::string Code::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i != 0) s += ", ";
    s += words_[i].empty() ? "∅" : words_[i].to_string();
  }
  return s + "} over [" + std::to_string(n_) + "]";
}

bool is_intersection_complete(const Code& code) {
  for (std::size_t a = 0; a < code.size(); ++a) {
    for (std::size_t b = a + 1; b < code.size(); ++b) {
      if (!code.contains(code[a] & code[b])) return false;
    }
  }
  return true;
}

Code intersection_completion(const Code& code) {
  std::vector<Codeword> all(code.begin(), code.end());
  std::unordered_set<Codeword> seen(all.begin(), all.end());
  // Each new element only needs pairing with everything found so far.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Codeword meet = all[i] & all[j];
      if (seen.insert(meet).second) all.push_back(meet);
    }
  }
  return Code::from_codewords(code.n(), std::move(all));
}

Code delete_neuron(const Code& code, int neuron) {
  if (neuron < 1 || neuron > code.n()) {
    throw Error(ErrorKind::IndexOutOfRange, "neuron " + std::to_string(neuron) + " not in code");
  }
  const std::uint64_t low = (std::uint64_t{1} << (neuron - 1)) - 1;
  std::vector<Codeword> words;
  words.reserve(code.size());
  for (Codeword c : code) {
    const std::uint64_t b = c.bits();
    const std::uint64_t high = neuron == 64 ? 0 : (b >> neuron);
    words.emplace_back((b & low) | (high << (neuron - 1)));
  }
  return Code::from_codewords(code.n() - 1, std::move(words));
}

Code permute_neurons(const Code& code, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != code.n()) {
    throw Error(ErrorKind::IndexOutOfRange, "permutation length differs from n");
  }
  std::vector<bool> used(perm.size() + 1, false);
  for (int p : perm) {
    if (p < 1 || p > code.n() || used[p]) {
      throw Error(ErrorKind::IndexOutOfRange, "not a permutation of [n]");
    }
    used[p] = true;
  }
  std::vector<Codeword> words;
  words.reserve(code.size());
  for (Codeword c : code) {
    std::uint64_t b = 0;
    for (int i : c.neurons()) b |= std::uint64_t{1} << (perm[i - 1] - 1);
    words.emplace_back(b);
  }
  return Code::from_codewords(code.n(), std::move(words));
}

}  // namespace ncp
