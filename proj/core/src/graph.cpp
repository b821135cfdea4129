#include "clusterforge/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace clusterforge {

void Graph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) throw std::invalid_argument("self-loop");
  if (a >= vertex_count || b >= vertex_count)
    throw std::out_of_range("edge endpoint out of range");
  if (a > b) std::swap(a, b);
  edges.insert({a, b});
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  return edges.contains({a, b});
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    else if (b == v) out.push_back(a);
  }
  return out;
}

std::size_t Graph::degree(std::size_t v) const { return neighbors(v).size(); }

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
  Graph g;
  g.vertex_count = rows * cols;
  auto idx = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(idx(r, c), idx(r, c + 1));
      if (r + 1 < rows) g.add_edge(idx(r, c), idx(r + 1, c));
    }
  }
  return g;
}

Graph string_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("string length must be positive");
  Graph g;
  g.vertex_count = n;
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star_graph(std::size_t k) {
  if (k < 1) throw std::invalid_argument("star needs at least one leaf");
  Graph g;
  g.vertex_count = k + 1;
  for (std::size_t i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

Graph box_graph() {
  Graph g;
  g.vertex_count = 4;
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  return g;
}

std::vector<PauliString> graph_stabilizers(const Graph& g) {
  std::vector<PauliString> out;
  out.reserve(g.vertex_count);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    PauliString p(g.vertex_count);
    p.set_x(v, true);
    for (std::size_t u : g.neighbors(v)) p.set_z(u, true);
    out.push_back(std::move(p));
  }
  return out;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count; ++v) os << "  " << v << ";\n";
  for (const auto& [a, b] : g.edges) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace clusterforge
