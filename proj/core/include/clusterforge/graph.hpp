#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clusterforge/pauli.hpp"

namespace clusterforge {

/// Undirected simple graph over vertices 0..vertex_count-1. Edges are the
/// target cluster-state bonds.
struct Graph {
  std::size_t vertex_count = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;  // stored with first < second

  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;

  bool operator==(const Graph&) const = default;
};

/// rows x cols lattice with 4-neighbour bonds; row-major vertex numbering.
Graph grid_graph(std::size_t rows, std::size_t cols);

/// Path graph on n vertices.
Graph string_graph(std::size_t n);

/// One hub (vertex 0) joined to k leaves.
Graph star_graph(std::size_t k);

/// 4-cycle 0-1-2-3-0.
Graph box_graph();

/// One stabilizer generator per vertex v: X on v, Z on every neighbour, sign +1.
std::vector<PauliString> graph_stabilizers(const Graph& g);

/// DOT text with vertices labeled by index.
std::string to_dot(const Graph& g, const std::string& name = "g");

}  // namespace clusterforge
