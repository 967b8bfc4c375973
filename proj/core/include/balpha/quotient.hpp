#pragma once

#include "balpha/graph.hpp"
#include "balpha/matrix.hpp"
#include "balpha/structure.hpp"

namespace balpha {

struct QuotientResult {
  Partition partition;
  Matrix quotient;  // t x t, entry (i, j) = average row sum of block M_ij
  bool equitable = false;

  // D^{1/2} Q D^{-1/2} with D = diag(|V_i|): entry sum(M_ij) / sqrt(|V_i||V_j|).
  // Similar to `quotient` whenever the partition is equitable, and symmetric
  // always, so the symmetric eigensolver applies.
  SymmetricMatrix symmetrized() const;

  std::vector<double> block_sums;  // row-major t x t, sum of all entries of M_ij
};

// Blockwise average row sums of m. The equitable flag is decided on g alone:
// every vertex of block i has the same number of neighbors in block j, for
// all i, j. For the degree/adjacency families this is exactly equitability
// of m, independent of alpha.
QuotientResult quotient_matrix(const SymmetricMatrix& m, const Graph& g, const Partition& partition);

bool is_equitable(const Graph& g, const Partition& partition);

// Coarsest equitable partition, by color refinement from the trivial partition.
// Blocks are sorted by smallest member.
Partition equitable_refinement(const Graph& g);

// Partition of h_ln(n, ell) into: unmatched vertices of copy 1, matched
// vertices of copy 1, matched vertices of copy 2, unmatched vertices of copy 2.
// For ell == n the unmatched blocks are empty and omitted.
Partition hln_partition(int n, int ell);

}  // namespace balpha
