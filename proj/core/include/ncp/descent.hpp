#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ncp/code.hpp"
#include "ncp/morphism.hpp"

namespace ncp {

enum class NeuronStatus { Trivial, Redundant, Essential };

struct NeuronClassification {
  int neuron = 0;
  NeuronStatus status = NeuronStatus::Essential;
  /// For redundant neurons, a σ ⊆ [n] \ {neuron} with Tk(σ) = Tk(neuron).
  std::optional<Codeword> witness;
};

std::vector<NeuronClassification> classify_neurons(const Code& code);

struct CoveredCode {
  int neuron = 0;
  Code code;
  Morphism morphism;
};

/// C^(i). The determining trunks are deduplicated, empty ones dropped, and
/// sorted in canonical trunk order before being numbered 1..m. Throws
/// Error(TrivialNeuron) or Error(IndexOutOfRange).
CoveredCode covered_code(const Code& code, int neuron);

/// Nontrivial neurons left after deleting redundant ones, highest index
/// first. Every essential neuron survives; of a group of neurons that only
/// witness each other (as in {∅,12}) exactly one survives.
std::vector<int> covering_neurons(const Code& code);

/// C^(i) for every covering neuron, one representative per isomorphism
/// class (lowest neuron wins).
std::vector<CoveredCode> all_covered_codes(const Code& code);

/// Same, without the isomorphism dedupe.
std::vector<CoveredCode> covered_codes_by_neuron(const Code& code);

/// C covers D. Decided through the covered codes and cross-checked against
/// the trunk-count criterion; disagreement throws Error(Internal).
bool covers(const Code& upper, const Code& lower);

struct MinorLimits {
  std::size_t max_nodes = 100'000;
};

/// D ≤ C by memoized descent through covered codes. Throws
/// Error(CapExceeded) beyond the node budget.
bool is_minor(const Code& upper, const Code& lower, MinorLimits limits = {});

}  // namespace ncp
