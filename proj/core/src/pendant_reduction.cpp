#include "balpha/pendant_reduction.hpp"

#include <cmath>
#include <unordered_map>

#include "balpha/errors.hpp"

namespace balpha {

SymmetricMatrix c_block(int s, int degree, double alpha) {
  const double gamma = 2.0 * alpha - 1.0;
  SymmetricMatrix c(2, Provenance{MatrixFamily::reduced, alpha, "C"});
  c.set(0, 0, 1.0 - alpha);
  c.set(0, 1, gamma * std::sqrt(static_cast<double>(s)));
  c.set(1, 1, (1.0 - alpha) * degree);
  return c;
}

SymmetricMatrix e_block(int s, double d, double alpha) {
  const double gamma = 2.0 * alpha - 1.0;
  SymmetricMatrix e(s + 1, Provenance{MatrixFamily::reduced, alpha, "E"});
  for (int i = 0; i < s; ++i) {
    e.set(i, i, 1.0 - alpha);
    e.set(i, s, gamma);
  }
  e.set(s, s, (1.0 - alpha) * d);
  return e;
}

PendantReduction pendant_reduction(const Graph& g, double alpha, const StructureReport& report,
                                   const Labeling& labeling) {
  if (report.p == 0) throw StructureError("no pendant vertices");
  if (static_cast<int>(labeling.order.size()) != g.order()) {
    throw StructureError("labeling does not match graph order");
  }

  PendantReduction red;
  red.alpha = alpha;
  red.p = report.p;
  red.q = report.q;

  std::unordered_map<int, int> star_of_root;
  for (std::size_t i = 0; i < report.quasi_pendants.size(); ++i) {
    star_of_root[report.quasi_pendants[i]] = static_cast<int>(i);
  }
  std::vector<char> is_core(static_cast<std::size_t>(g.order()), 0);
  for (int v : report.core) is_core[v] = 1;
  for (int v : labeling.order) {
    if (auto it = star_of_root.find(v); it != star_of_root.end()) {
      red.roots.push_back(v);
      red.star_sizes.push_back(report.star_sizes[it->second]);
    } else if (is_core[v]) {
      red.core.push_back(v);
    }
  }
  red.kind = red.core.empty() ? ReductionCase::quasi_only : ReductionCase::general;

  const double gamma = 2.0 * alpha - 1.0;
  const int q = red.q;
  const int k = static_cast<int>(red.core.size());
  red.reduced = SymmetricMatrix(2 * q + k, Provenance{MatrixFamily::reduced, alpha, g.label()});

  for (int i = 0; i < q; ++i) {
    if (red.star_sizes[i] < 1) throw StructureError("quasi-pendant root without pendant");
    SymmetricMatrix c = c_block(red.star_sizes[i], g.degree(red.roots[i]), alpha);
    red.reduced.set(2 * i, 2 * i, c(0, 0));
    red.reduced.set(2 * i, 2 * i + 1, c(0, 1));
    red.reduced.set(2 * i + 1, 2 * i + 1, c(1, 1));
    red.c_blocks.push_back(std::move(c));
  }
  // R couplings: only the root rows (2i+1) see other internal vertices.
  std::vector<int> internal_row;
  std::vector<int> internal_vertex;
  for (int i = 0; i < q; ++i) {
    internal_row.push_back(2 * i + 1);
    internal_vertex.push_back(red.roots[i]);
  }
  for (int j = 0; j < k; ++j) {
    internal_row.push_back(2 * q + j);
    internal_vertex.push_back(red.core[j]);
    red.reduced.set(2 * q + j, 2 * q + j, (1.0 - alpha) * g.degree(red.core[j]));
  }
  for (std::size_t a = 0; a < internal_row.size(); ++a)
    for (std::size_t b = a + 1; b < internal_row.size(); ++b)
      if (g.adjacent(internal_vertex[a], internal_vertex[b]))
        red.reduced.set(internal_row[a], internal_row[b], gamma);

  if (k > 0) {
    std::vector<int> idx;
    for (int j = 0; j < k; ++j) idx.push_back(2 * q + j);
    red.n_matrix = red.reduced.principal(idx);

    std::unordered_map<int, int> pos_in_core;
    for (int j = 0; j < k; ++j) pos_in_core[red.core[j]] = j;
    for (const auto& comp : report.core_components) {
      std::vector<int> rows;
      for (int v : comp) rows.push_back(pos_in_core.at(v));
      std::vector<int> ordered;
      for (int r : rows) ordered.push_back(2 * q + r);
      SymmetricMatrix ni = red.reduced.principal(ordered);
      ni.set_provenance(Provenance{MatrixFamily::reduced, alpha, g.label()});
      red.n_components.push_back(std::move(ni));
      red.component_vertices.push_back(comp);
    }
  }
  return red;
}

PendantReduction pendant_reduction(const Graph& g, double alpha) {
  const StructureReport report = classify_vertices(g);
  return pendant_reduction(g, alpha, report, global_labeling(report));
}

}  // namespace balpha
