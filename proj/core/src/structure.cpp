#include "balpha/structure.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace balpha {

StructureReport classify_vertices(const Graph& g) {
  const int n = g.order();
  enum : char { kCore, kPendant, kQuasi };
  std::vector<char> kind(static_cast<std::size_t>(n), kCore);

  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 1) continue;
    int w = g.neighbors(v).front();
    // Isolated edge: only the lower endpoint is pendant.
    if (g.degree(w) == 1 && w < v) continue;
    kind[v] = kPendant;
  }
  for (int v = 0; v < n; ++v) {
    if (kind[v] != kPendant) continue;
    kind[g.neighbors(v).front()] = kQuasi;
  }

  StructureReport rep;
  for (int v = 0; v < n; ++v) {
    switch (kind[v]) {
      case kPendant: rep.pendants.push_back(v); break;
      case kQuasi: rep.quasi_pendants.push_back(v); break;
      default: rep.core.push_back(v); break;
    }
  }
  rep.p = static_cast<int>(rep.pendants.size());
  rep.q = static_cast<int>(rep.quasi_pendants.size());
  rep.r = rep.q + static_cast<int>(rep.core.size());

  for (int root : rep.quasi_pendants) {
    std::vector<int> leaves;
    for (int w : g.neighbors(root)) {
      if (kind[w] == kPendant) leaves.push_back(w);
    }
    rep.star_sizes.push_back(static_cast<int>(leaves.size()));
    rep.star_leaves.push_back(std::move(leaves));
  }

  if (!rep.core.empty()) {
    Graph sub = g.induced(rep.core);
    for (const auto& comp : sub.components()) {
      std::vector<int> ids;
      for (int i : comp) ids.push_back(rep.core[i]);
      rep.core_components.push_back(std::move(ids));
    }
  }
  return rep;
}

StructureReport analyze(const Graph& g) {
  StructureReport rep = classify_vertices(g);
  rep.twin_classes_true = twin_partition(g, TwinKind::true_twins);
  rep.twin_classes_false = twin_partition(g, TwinKind::false_twins);
  return rep;
}

Labeling global_labeling(const StructureReport& report) {
  Labeling lab;
  for (std::size_t i = 0; i < report.quasi_pendants.size(); ++i) {
    lab.order.insert(lab.order.end(), report.star_leaves[i].begin(), report.star_leaves[i].end());
    lab.order.push_back(report.quasi_pendants[i]);
  }
  lab.order.insert(lab.order.end(), report.core.begin(), report.core.end());
  return lab;
}

Partition twin_partition(const Graph& g, TwinKind kind) {
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> key = g.neighbors(v);
    if (kind == TwinKind::true_twins) key.insert(std::lower_bound(key.begin(), key.end(), v), v);
    classes[std::move(key)].push_back(v);
  }
  Partition out;
  for (auto& [key, members] : classes) {
    if (members.size() >= 2) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          frontier.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool has_bipartite_edge_component(const Graph& g) {
  for (const auto& comp : g.components()) {
    if (comp.size() < 2) continue;
    if (bipartition(g.induced(comp))) return true;
  }
  return false;
}

std::vector<CoreComponent> core_components(const Graph& g, const StructureReport& report) {
  std::vector<CoreComponent> out;
  for (const auto& vertices : report.core_components) {
    CoreComponent c{vertices, g.induced(vertices), {}};
    for (int v : vertices) c.degrees.push_back(g.degree(v));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace balpha
