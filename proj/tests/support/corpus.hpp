#pragma once

#include <vector>

#include "balpha/campaign.hpp"
#include "balpha/graph.hpp"
#include "balpha/matrix.hpp"

namespace corpus {

// 200 seeded graphs, n <= 12, each with at least one edge: 120 G(n, p),
// 40 random trees, 40 random bipartite graphs.
const std::vector<balpha::Graph>& random_graphs();

// Small named graphs with their family parameters where they have one.
const std::vector<balpha::GraphCase>& named();

// 20 graphs whose internal vertices are all quasi-pendant, and 20 with a
// nonempty core. Both include the gallery constructions.
const std::vector<balpha::Graph>& quasi_only();
const std::vector<balpha::Graph>& general_pendant();

balpha::Graph petersen();

}  // namespace corpus

namespace oracle {

// Leibniz expansion over all permutations; n <= 8.
long double permutation_det(const balpha::Matrix& m);

// Enumerates simple cycles directly; n <= 10.
bool has_odd_cycle(const balpha::Graph& g);

}  // namespace oracle
