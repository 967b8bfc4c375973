#include "balpha/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace balpha {

namespace {

// block_of[v] for a partition covering 0..n-1 exactly once.
std::vector<int> block_index(int n, const Partition& partition) {
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty()) throw std::invalid_argument("partition has an empty block");
    for (int v : partition[b]) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
      if (block_of[v] != -1) throw std::invalid_argument("partition blocks overlap");
      block_of[v] = static_cast<int>(b);
    }
  }
  for (int b : block_of) {
    if (b == -1) throw std::invalid_argument("partition does not cover every vertex");
  }
  return block_of;
}

}  // namespace

SymmetricMatrix QuotientResult::symmetrized() const {
  const int t = quotient.rows();
  SymmetricMatrix s(t, Provenance{MatrixFamily::quotient, 0.0, {}});
  for (int i = 0; i < t; ++i) {
    for (int j = i; j < t; ++j) {
      const double size_i = static_cast<double>(partition[i].size());
      const double size_j = static_cast<double>(partition[j].size());
      s.set(i, j, block_sums[static_cast<std::size_t>(i) * t + j] / std::sqrt(size_i * size_j));
    }
  }
  return s;
}

bool is_equitable(const Graph& g, const Partition& partition) {
  const std::vector<int> block_of = block_index(g.order(), partition);
  const std::size_t t = partition.size();
  for (const auto& block : partition) {
    std::vector<int> first;
    for (std::size_t k = 0; k < block.size(); ++k) {
      std::vector<int> counts(t, 0);
      for (int w : g.neighbors(block[k])) ++counts[block_of[w]];
      if (k == 0) {
        first = std::move(counts);
      } else if (counts != first) {
        return false;
      }
    }
  }
  return true;
}

QuotientResult quotient_matrix(const SymmetricMatrix& m, const Graph& g, const Partition& partition) {
  if (m.order() != g.order()) throw std::invalid_argument("matrix and graph orders differ");
  const std::vector<int> block_of = block_index(g.order(), partition);
  const int t = static_cast<int>(partition.size());

  QuotientResult out;
  out.partition = partition;
  out.quotient = Matrix(t, t);
  out.block_sums.assign(static_cast<std::size_t>(t) * t, 0.0);
  for (int u = 0; u < m.order(); ++u)
    for (int v = 0; v < m.order(); ++v)
      out.block_sums[static_cast<std::size_t>(block_of[u]) * t + block_of[v]] += m(u, v);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      out.quotient(i, j) = out.block_sums[static_cast<std::size_t>(i) * t + j] /
                           static_cast<double>(partition[i].size());
  out.equitable = is_equitable(g, partition);
  return out;
}

Partition equitable_refinement(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  int classes = 1;
  for (;;) {
    // New color = (old color, sorted neighbor colors), numbered by first vertex.
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      for (int w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin(), sig.end());
      auto [it, inserted] = ids.try_emplace({color[v], std::move(sig)}, static_cast<int>(ids.size()));
      next[v] = it->second;
    }
    const int refined = static_cast<int>(ids.size());
    color = std::move(next);
    if (refined == classes) break;
    classes = refined;
  }
  Partition out(static_cast<std::size_t>(classes));
  for (int v = 0; v < n; ++v) out[color[v]].push_back(v);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

Partition hln_partition(int n, int ell) {
  if (n < 3 || ell < 1 || ell > n) throw std::invalid_argument("hln_partition: need n >= 3, 1 <= ell <= n");
  auto range = [](int lo, int hi) {
    std::vector<int> r;
    for (int v = lo; v < hi; ++v) r.push_back(v);
    return r;
  };
  Partition out;
  if (ell < n) out.push_back(range(ell, n));
  out.push_back(range(0, ell));
  out.push_back(range(n, n + ell));
  if (ell < n) out.push_back(range(n + ell, 2 * n));
  return out;
}

}  // namespace balpha
