#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "balpha/graph.hpp"

namespace balpha {

enum class Family { complete, path, cycle, star, complete_bipartite, h_ln, pendant_attach };

// Parameters for generate(). Which fields are read depends on `family`:
//   complete/path/cycle: n     star: s          complete_bipartite: a, b
//   h_ln: n, ell               pendant_attach: star_sizes over a path base
struct FamilySpec {
  Family family = Family::complete;
  int n = 0;
  int ell = 0;
  int s = 0;
  int a = 0;
  int b = 0;
  // pendant_attach: base is the path on star_sizes.size() vertices and
  // vertex i receives star_sizes[i] new pendant neighbors (0 = none).
  std::vector<int> star_sizes;

  std::string name() const;
};

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);

Graph generate(const FamilySpec& spec);

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
// K_{1,s}; the center is vertex 0.
Graph star(int s);
// K_{a,b}; parts are {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
// Two copies of K_n on {0..n-1} and {n..2n-1}, plus the ell edges {i, n+i}, i < ell.
Graph h_ln(int n, int ell);
// Attaches star_sizes[v] new pendant vertices to each listed base vertex v.
// New vertices are appended in increasing base-vertex order.
Graph pendant_attach(const Graph& base, const std::map<int, int>& star_sizes);

// G(n, p) with a portable draw sequence: identical output for a given seed on
// every platform. Pairs (u, v), u < v, are visited in lexicographic order.
Graph erdos_renyi(int n, double p, std::uint64_t seed);
// Uniform labelled tree from a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

// Portable draws on top of std::mt19937_64 (whose output sequence is fixed by
// the standard). Standard distributions are implementation-defined, so the
// conversions to double and to bounded integers are done here.
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}
  double next();  // [0, 1)
  std::uint64_t next_u64() { return engine_(); }
  int next_int(int lo, int hi);  // inclusive range

 private:
  std::mt19937_64 engine_;
};

// Small worked examples with known structure.
namespace gallery {

// 20 vertices with false-twin classes {0..4}, {5,6,7}, {8,9,10} and
// true-twin classes {11,12}, {13,14,15}; hubs a=16, b=17, c=18, s=19.
Graph twin_showcase();
// 18 vertices, p=9, q=5, r=9, V_C={14,15,16,17} (0-based).
Graph pendant_showcase();
// G(2,3,2,2,1,4,2,1): every internal vertex is quasi-pendant; 25 vertices.
Graph quasi_pendant_showcase();
// G(2,3,2,0,0,0,0,0): roots {2,6,9}, V_C={10,..,14} (0-based); 15 vertices.
Graph mixed_pendant_showcase();

}  // namespace gallery

}  // namespace balpha
