#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncp/codeword.hpp"

namespace ncp {

/// A combinatorial neural code over the ambient neuron set [n]. Always holds
/// the empty codeword; codewords are unique and kept in lexicographic order,
/// so two codes over the same n compare equal iff they have the same
/// codewords. Immutable once built.
class Code {
 public:
  /// The trivial code {∅} over n = 0.
  Code();

  /// Validating constructor. Deduplicates; throws
  /// Error(MissingEmptyCodeword) or Error(IndexOutOfRange).
  static Code from_codewords(int n, std::vector<Codeword> words);
  static Code from_lists(int n, const std::vector<std::vector<int>>& raw);

  int n() const { return n_; }
  std::size_t size() const { return words_.size(); }
  std::span<const Codeword> codewords() const { return words_; }
  Codeword operator[](std::size_t i) const { return words_[i]; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  bool contains(Codeword c) const;
  std::optional<std::size_t> index_of(Codeword c) const;
  Codeword universe() const { return Codeword::universe(n_); }

  /// Identity of the code's value, used to tie trunks to their owner.
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// Same codewords over a different ambient set; n must cover every index.
  Code with_ambient(int n) const;

  std::string to_string() const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  Code(int n, std::vector<Codeword> words);

  int n_ = 0;
  std::vector<Codeword> words_;
  std::uint64_t fingerprint_ = 0;
};

/// Builds a code from index lists, enforcing the code invariants.
inline Code validate_code(int n, const std::vector<std::vector<int>>& raw) {
  return Code::from_lists(n, raw);
}

bool is_intersection_complete(const Code& code);

/// Smallest superset of `code` closed under pairwise intersection.
Code intersection_completion(const Code& code);

/// c ↦ c \ {neuron}, with neurons above `neuron` shifted down by one.
Code delete_neuron(const Code& code, int neuron);

/// Relabels neuron i as perm[i-1]; perm must be a permutation of 1..n.
Code permute_neurons(const Code& code, std::span<const int> perm);

}  // namespace ncp
