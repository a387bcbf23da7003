#pragma once

#include <string>

#include "ncp/code.hpp"

namespace ncp {

struct CanonicalForm {
  Code code;
  std::string key;
};

/// Strips trivial neurons, then deletes redundant neurons one at a time
/// (highest index first) until none remain. The result is isomorphic to the
/// input and has only essential neurons.
Code reduce_code(const Code& code);

/// Reduced code relabeled to its lexicographically least codeword sequence
/// among neuron orders compatible with the per-neuron invariants. Equal keys
/// mean isomorphic codes. Throws Error(CapExceeded) if the tie classes
/// would need more than `max_permutations` relabelings.
CanonicalForm canonical_form(const Code& code,
                             std::size_t max_permutations = 10'000'000);

/// Stable text form "n:[..],[..]" of the codeword list in sorted order.
std::string serialize_key(const Code& code);

}  // namespace ncp
