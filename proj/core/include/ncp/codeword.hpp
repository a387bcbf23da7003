#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ncp {

/// Largest ambient neuron count a code may use.
inline constexpr int kMaxNeurons = 64;

/// A set of neuron indices in 1..64, stored as a bitmask (neuron i is bit
/// i-1). Ordering is the lexicographic order of the ascending index lists,
/// so [] < [1] < [1,2] < [1,2,3] < [1,3] < [2].
class Codeword {
 public:
  constexpr Codeword() = default;
  constexpr explicit Codeword(std::uint64_t bits) : bits_(bits) {}

  /// Throws Error(IndexOutOfRange) for indices outside 1..64.
  static Codeword of(std::initializer_list<int> neurons);
  static Codeword from_indices(std::span<const int> neurons);

  /// The full neuron set [n].
  static constexpr Codeword universe(int n) {
    return Codeword(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Codeword singleton(int neuron) {
    return Codeword(std::uint64_t{1} << (neuron - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool has(int neuron) const { return (bits_ >> (neuron - 1)) & 1U; }
  /// Largest neuron index present, 0 for the empty codeword.
  constexpr int max_neuron() const { return 64 - std::countl_zero(bits_); }

  constexpr Codeword with(int neuron) const { return *this | singleton(neuron); }
  constexpr Codeword without(int neuron) const {
    return Codeword(bits_ & ~singleton(neuron).bits_);
  }
  /// Superset test: every neuron of `other` is in this codeword.
  constexpr bool contains(Codeword other) const {
    return (bits_ & other.bits_) == other.bits_;
  }
  constexpr bool subset_of(Codeword other) const { return other.contains(*this); }

  constexpr Codeword operator&(Codeword o) const { return Codeword(bits_ & o.bits_); }
  constexpr Codeword operator|(Codeword o) const { return Codeword(bits_ | o.bits_); }
  constexpr Codeword minus(Codeword o) const { return Codeword(bits_ & ~o.bits_); }

  std::vector<int> neurons() const;
  /// "{1,2,3}" style; the empty codeword prints as "{}".
  std::string to_string() const;

  friend constexpr bool operator==(Codeword, Codeword) = default;
  friend constexpr std::strong_ordering operator<=>(Codeword a, Codeword b) {
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    const int d = std::countr_zero(diff);
    // Both agree below d. The one holding d is smaller unless the other one
    // stops there (then the other one is a proper prefix).
    const std::uint64_t above = d == 63 ? 0 : (~std::uint64_t{0} << (d + 1));
    if ((a.bits_ >> d) & 1U) {
      return (b.bits_ & above) != 0 ? std::strong_ordering::less
                                    : std::strong_ordering::greater;
    }
    return (a.bits_ & above) != 0 ? std::strong_ordering::greater
                                  : std::strong_ordering::less;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace ncp

template <>
struct std::hash<ncp::Codeword> {
  std::size_t operator()(ncp::Codeword c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits());
  }
};
