#include "balpha/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "balpha/errors.hpp"

namespace balpha {

Graph::Graph(int n, std::string label) : label_(std::move(label)) {
  if (n < 1) throw std::invalid_argument("graph order must be at least 1");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges, std::string label) : Graph(n, std::move(label)) {
  for (auto [u, v] : edges) insert(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges, std::string label)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label)) {}

int Graph::check(int v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(order()) + ")");
  }
  return v;
}

void Graph::insert(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nu = neighbors(u);
  check(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.insert(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!adjacent(u, v)) {
    throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(v) +
                                "} is not an edge");
  }
  Graph g = *this;
  auto erase = [](std::vector<int>& nb, int x) {
    nb.erase(std::lower_bound(nb.begin(), nb.end(), x));
  };
  erase(g.adjacency_[u], v);
  erase(g.adjacency_[v], u);
  --g.edge_count_;
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> index(adjacency_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = check(vertices[i]);
    if (index[v] != -1) throw std::invalid_argument("duplicate vertex in induced set");
    index[v] = static_cast<int>(i);
  }
  Graph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : adjacency_[vertices[i]]) {
      if (index[w] > static_cast<int>(i)) sub.insert(static_cast<int>(i), index[w]);
    }
  }
  return sub;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(adjacency_.size(), 0);
  for (int s = 0; s < order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> frontier;
    frontier.push(s);
    seen[s] = 1;
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      comp.push_back(u);
      for (int w : adjacency_[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          frontier.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return components().size() == 1; }

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_integer(std::string_view tok, int line_no, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text, std::string label) {
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  long long seen_edges = 0;
  std::vector<Edge> edges;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = tokens(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tok.size() != 2) {
      throw ParseError(line_no, "expected two integers, found " + std::to_string(tok.size()) +
                                    " fields");
    }
    if (!have_header) {
      n = to_integer(tok[0], line_no, "vertex count");
      m = to_integer(tok[1], line_no, "edge count");
      if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
      if (m < 0) throw ParseError(line_no, "edge count must be non-negative");
      have_header = true;
    } else {
      long long u = to_integer(tok[0], line_no, "vertex index");
      long long v = to_integer(tok[1], line_no, "vertex index");
      if (seen_edges == m) {
        throw ParseError(line_no, "more edge lines than the declared " + std::to_string(m));
      }
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ParseError(line_no, "vertex index out of range [0, " + std::to_string(n) + ")");
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      ++seen_edges;
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(0, "missing header line 'n m'");
  if (seen_edges != m) {
    throw ParseError(0, "expected " + std::to_string(m) + " edge lines, found " +
                            std::to_string(seen_edges));
  }
  return Graph(static_cast<int>(n), edges, std::move(label));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string label = path;
  if (auto slash = label.find_last_of('/'); slash != std::string::npos) label.erase(0, slash + 1);
  return parse_edge_list(buf.str(), label);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace balpha
