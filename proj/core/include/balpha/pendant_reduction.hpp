#pragma once

#include <vector>

#include "balpha/graph.hpp"
#include "balpha/matrix.hpp"
#include "balpha/structure.hpp"

namespace balpha {

enum class ReductionCase { quasi_only, general };

// Reduced matrices for a graph with pendant stars.
//
// Row layout of `reduced`: for star i (roots in labeling order) rows 2i and
// 2i+1 hold C_i(alpha), the second of them being the root; then one row per
// core vertex in labeling order. quasi_only means V_C is empty and `reduced`
// is the 2q x 2q matrix M; otherwise it is X = [[Q, P], [P^T, N]] of order
// n + q - p.
struct PendantReduction {
  ReductionCase kind = ReductionCase::quasi_only;
  double alpha = 0.0;
  int p = 0;
  int q = 0;
  std::vector<int> roots;       // original ids of the quasi-pendant roots
  std::vector<int> star_sizes;  // s_i, aligned with roots
  std::vector<int> core;        // original ids of V_C, in reduced-row order
  std::vector<SymmetricMatrix> c_blocks;
  SymmetricMatrix reduced;
  SymmetricMatrix n_matrix;  // empty in the quasi_only case
  // N_i = (2a-1) A(G_i) + (1-a) D_i per core component, D_i from degrees in G.
  std::vector<SymmetricMatrix> n_components;
  Partition component_vertices;  // original ids per N_i
};

// [[1-a, (2a-1) sqrt(s)], [(2a-1) sqrt(s), (1-a) d]]
SymmetricMatrix c_block(int s, int degree, double alpha);

// E(alpha) of the Lemma: B_alpha of the star K_{1,s} with the root's diagonal
// replaced by (1-a) d. The root is the last row.
SymmetricMatrix e_block(int s, double d, double alpha);

// Throws StructureError when g has no pendant vertex.
PendantReduction pendant_reduction(const Graph& g, double alpha, const StructureReport& report,
                                   const Labeling& labeling);
PendantReduction pendant_reduction(const Graph& g, double alpha);

}  // namespace balpha
