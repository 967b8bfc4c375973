#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace balpha {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1.
//
// Adjacency is kept as one sorted neighbor list per vertex. Duplicate edges
// collapse; self-loops and out-of-range endpoints are rejected. A Graph is
// immutable once built: edits return a new graph.
class Graph {
 public:
  explicit Graph(int n, std::string label = {});
  Graph(int n, std::span<const Edge> edges, std::string label = {});
  Graph(int n, std::initializer_list<Edge> edges, std::string label = {});

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return edge_count_; }

  const std::vector<int>& neighbors(int v) const { return adjacency_[check(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  bool adjacent(int u, int v) const;

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  const std::string& label() const { return label_; }
  Graph relabeled(std::string label) const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  // Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;

  bool connected() const;
  std::vector<std::vector<int>> components() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  int check(int v) const;
  void insert(int u, int v);

  std::vector<std::vector<int>> adjacency_;
  int edge_count_ = 0;
  std::string label_;
};

// Reads the canonical edge-list format: a header line "n m" followed by m
// lines "u v" (0-based, u != v). Blank lines are ignored. Repeated edges
// collapse to one edge.
Graph parse_edge_list(std::string_view text, std::string label = {});
Graph read_edge_list_file(const std::string& path);

// Canonical writer: "n m" then one "u v" line per edge, u < v, sorted.
std::string to_edge_list(const Graph& g);

}  // namespace balpha
