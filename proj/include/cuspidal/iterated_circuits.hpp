#pragma once

#include <optional>
#include <vector>

#include "cuspidal/configuration.hpp"

namespace cusp {

/// One diagonal block of an upper-diagonal decomposition: the point
/// indices (into the original configuration) and the block dimension n_j.
/// A block holds n_j + 1 points beyond the shared base point.
struct CircuitBlock {
  std::vector<Index> points;
  Index dim = 0;
};

/// Certificate that a configuration (or a subset of one) is an iterated
/// circuit. `transform` is the invertible (1+n) x (1+n) row operation that
/// exhibits the upper-diagonal shape on the columns ordered
/// [base, blocks...]; `subset` lists the participating points of the
/// ambient configuration in that order.
struct IteratedCircuitWitness {
  Index base_point = 0;
  std::vector<CircuitBlock> blocks;
  Mat transform;
  std::vector<Index> subset;
};

/// Decides whether A itself is an iterated circuit: a base point plus an
/// ordered partition of the remaining points into blocks G_1,...,G_j such
/// that each block raises the spanned dimension by exactly its size minus
/// one and projects to a circuit in the quotient. Deterministic search
/// order: base points ascending, block dimensions ascending, block point
/// sets lexicographic. Returns the first witness found.
std::optional<IteratedCircuitWitness> is_iterated_circuit(const PointConfiguration& a);

/// Runs is_iterated_circuit over full-dimensional point subsets, largest
/// first, subsets in lexicographic order. Witness indices refer to the
/// ambient configuration.
std::optional<IteratedCircuitWitness> contains_iterated_circuit(const PointConfiguration& a);

struct ClassifyReport {
  bool dual_defective = false;
  std::optional<IteratedCircuitWitness> witness;
  bool consistent = false;
};

/// Decides dual defectiveness via triviality of the cuspidal form, finds a
/// contained iterated circuit, and cross-checks the two criteria. Throws
/// InconsistencyDetected when they disagree (they never should).
ClassifyReport classify(const PointConfiguration& a);

/// Replays a witness: applies its transform to the witness columns and
/// checks the literal upper-diagonal shape with circuit diagonal blocks.
bool witness_is_sound(const PointConfiguration& a, const IteratedCircuitWitness& w);

}  // namespace cusp
