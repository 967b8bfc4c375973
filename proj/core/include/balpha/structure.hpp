#pragma once

#include <optional>
#include <vector>

#include "balpha/graph.hpp"

namespace balpha {

using Partition = std::vector<std::vector<int>>;

// Pendant / quasi-pendant / core split of V(G).
//
// A vertex of degree 1 is pendant; a neighbor of a pendant is quasi-pendant;
// everything else (including isolated vertices) is core. An isolated edge is
// the one place where a pendant touches a pendant: its lower endpoint is
// pendant and its higher endpoint quasi-pendant, so V_P stays independent.
struct StructureReport {
  std::vector<int> pendants;        // V_P, sorted
  std::vector<int> quasi_pendants;  // V_Q, sorted; these are the star roots
  std::vector<int> core;            // V_C, sorted
  int p = 0;
  int q = 0;
  int r = 0;  // q + |V_C|
  // star_sizes[i] = number of pendant neighbors of quasi_pendants[i].
  std::vector<int> star_sizes;
  // Pendant vertices of each star, aligned with quasi_pendants.
  std::vector<std::vector<int>> star_leaves;
  Partition twin_classes_true;
  Partition twin_classes_false;
  // Vertex sets of the connected components of G[V_C].
  Partition core_components;
};

// Permutation from structural position to original vertex id: each star's
// pendants then its root, stars in root order, then the core vertices.
struct Labeling {
  std::vector<int> order;
};

enum class TwinKind { true_twins, false_twins };

StructureReport classify_vertices(const Graph& g);
// classify_vertices plus both twin partitions.
StructureReport analyze(const Graph& g);
Labeling global_labeling(const StructureReport& report);

// Maximal classes (size >= 2) of equal closed (true) or open (false)
// neighborhoods, ordered by smallest member.
Partition twin_partition(const Graph& g, TwinKind kind);

// BFS two-coloring from the lowest vertex of each component; nullopt when an
// odd cycle exists.
std::optional<std::vector<int>> bipartition(const Graph& g);

// Some component with at least one edge is bipartite. Equivalent to
// bipartite for connected graphs; this is what Q having a zero eigenvalue
// with an edge present actually detects.
bool has_bipartite_edge_component(const Graph& g);

struct CoreComponent {
  std::vector<int> vertices;   // original ids, sorted
  Graph subgraph;              // G[vertices]
  std::vector<int> degrees;    // degree in G (not in subgraph) per vertex
};

std::vector<CoreComponent> core_components(const Graph& g, const StructureReport& report);

}  // namespace balpha
