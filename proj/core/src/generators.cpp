#include "balpha/generators.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <stdexcept>

namespace balpha {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::complete, "complete"},
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::h_ln, "h_ln"},
    {Family::pendant_attach, "pendant"},
}};

// Paper-style 1-based edge lists for the gallery graphs.
Graph from_one_based(int n, std::initializer_list<Edge> edges, std::string label) {
  std::vector<Edge> shifted;
  for (auto [u, v] : edges) shifted.emplace_back(u - 1, v - 1);
  return Graph(n, shifted, std::move(label));
}

}  // namespace

std::string_view family_name(Family f) {
  for (auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (auto& [fam, n] : kFamilyNames) {
    if (n == name) return fam;
  }
  if (name == "pendant_attach") return Family::pendant_attach;
  return std::nullopt;
}

std::string FamilySpec::name() const {
  std::string out(family_name(family));
  auto args = [&](std::initializer_list<int> xs) {
    out += '(';
    bool first = true;
    for (int x : xs) {
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    }
    out += ')';
  };
  switch (family) {
    case Family::complete:
    case Family::path:
    case Family::cycle:
      args({n});
      break;
    case Family::star:
      args({s});
      break;
    case Family::complete_bipartite:
      args({a, b});
      break;
    case Family::h_ln:
      args({n, ell});
      break;
    case Family::pendant_attach: {
      out += '(';
      for (std::size_t i = 0; i < star_sizes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(star_sizes[i]);
      }
      out += ')';
      break;
    }
  }
  return out;
}

Graph generate(const FamilySpec& spec) {
  Graph g = [&] {
    switch (spec.family) {
      case Family::complete: return complete(spec.n);
      case Family::path: return path(spec.n);
      case Family::cycle: return cycle(spec.n);
      case Family::star: return star(spec.s);
      case Family::complete_bipartite: return complete_bipartite(spec.a, spec.b);
      case Family::h_ln: return h_ln(spec.n, spec.ell);
      case Family::pendant_attach: {
        require(!spec.star_sizes.empty(), "pendant_attach needs at least one star size");
        std::map<int, int> sizes;
        for (std::size_t i = 0; i < spec.star_sizes.size(); ++i) {
          require(spec.star_sizes[i] >= 0, "star sizes must be non-negative");
          if (spec.star_sizes[i] > 0) sizes[static_cast<int>(i)] = spec.star_sizes[i];
        }
        return pendant_attach(path(static_cast<int>(spec.star_sizes.size())), sizes);
      }
    }
    throw std::invalid_argument("unknown family");
  }();
  return g.relabeled(spec.name());
}

Graph complete(int n) {
  require(n >= 2, "complete graph needs n >= 2");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e, "complete(" + std::to_string(n) + ")");
}

Graph path(int n) {
  // A one-vertex path is allowed as the base of pendant_attach.
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e, "path(" + std::to_string(n) + ")");
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, e, "cycle(" + std::to_string(n) + ")");
}

Graph star(int s) {
  require(s >= 1, "star needs s >= 1");
  std::vector<Edge> e;
  for (int v = 1; v <= s; ++v) e.emplace_back(0, v);
  return Graph(s + 1, e, "star(" + std::to_string(s) + ")");
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, e,
               "complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Graph h_ln(int n, int ell) {
  require(n >= 3, "h_ln needs n >= 3");
  require(ell >= 1 && ell <= n, "h_ln needs 1 <= ell <= n");
  std::vector<Edge> e;
  for (int base : {0, n}) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) e.emplace_back(base + u, base + v);
  }
  for (int i = 0; i < ell; ++i) e.emplace_back(i, n + i);
  return Graph(2 * n, e, "h_ln(" + std::to_string(n) + "," + std::to_string(ell) + ")");
}

Graph pendant_attach(const Graph& base, const std::map<int, int>& star_sizes) {
  int total = 0;
  for (auto [v, s] : star_sizes) {
    require(v >= 0 && v < base.order(), "pendant_attach: base vertex out of range");
    require(s >= 1, "pendant_attach: star sizes must be >= 1");
    total += s;
  }
  std::vector<Edge> e = base.edges();
  int next = base.order();
  for (auto [v, s] : star_sizes) {
    for (int k = 0; k < s; ++k) e.emplace_back(v, next++);
  }
  return Graph(base.order() + total, e, base.label().empty() ? "" : base.label() + "+pendants");
}

double SeededUniform::next() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int SeededUniform::next_int(int lo, int hi) {
  require(lo <= hi, "next_int: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % range);
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  require(n >= 1, "erdos_renyi needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "erdos_renyi needs p in [0, 1]");
  SeededUniform rng(seed);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next() < p) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random_tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {{0, 1}});
  SeededUniform rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = rng.next_int(0, n - 1);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> e;
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  int u = *leaves.begin();
  int v = *std::next(leaves.begin());
  e.emplace_back(u, v);
  return Graph(n, e);
}

namespace gallery {

Graph twin_showcase() {
  constexpr int a = 16, b = 17, c = 18, s = 19;
  std::vector<Edge> e;
  for (int v : {5, 6, 7, 8, 9, 10}) e.emplace_back(a, v);
  for (int v : {8, 9, 10, 13, 14, 15}) e.emplace_back(b, v);
  for (int v : {13, 14, 15, 11, 12}) e.emplace_back(c, v);
  e.insert(e.end(), {{13, 14}, {14, 15}, {13, 15}, {11, 12}, {s, 11}, {s, 12}});
  for (int v : {0, 1, 2, 3, 4}) e.emplace_back(s, v);
  return Graph(20, e, "twin_showcase");
}

Graph pendant_showcase() {
  return from_one_based(18,
                        {{1, 2},   {2, 15},  {15, 16}, {16, 18}, {18, 17}, {17, 4}, {4, 3},
                         {14, 10}, {10, 18}, {16, 14}, {14, 12}, {14, 11}, {14, 13}, {10, 9},
                         {10, 8},  {10, 16}, {17, 7},  {7, 6},   {7, 5}},
                        "pendant_showcase");
}

Graph quasi_pendant_showcase() {
  return from_one_based(
      25,
      {{25, 20}, {20, 15}, {15, 3},  {3, 25},  {25, 23}, {23, 20}, {23, 22}, {23, 21}, {25, 24},
       {20, 16}, {20, 17}, {20, 18}, {20, 19}, {15, 14}, {15, 13}, {13, 10}, {10, 9},  {10, 8},
       {13, 12}, {13, 11}, {1, 3},   {2, 3},   {3, 7},   {7, 15},  {7, 4},   {7, 5},   {7, 6}},
      "quasi_pendant_showcase");
}

Graph mixed_pendant_showcase() {
  return from_one_based(15,
                        {{1, 3},   {3, 12},  {12, 11}, {11, 7},  {7, 5},  {3, 2},
                         {3, 14},  {14, 15}, {15, 13}, {14, 13}, {12, 10}, {10, 9},
                         {10, 8},  {13, 10}, {7, 6},   {7, 4}},
                        "mixed_pendant_showcase");
}

}  // namespace gallery

}  // namespace balpha
