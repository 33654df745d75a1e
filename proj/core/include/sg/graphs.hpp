#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sg/matrix.hpp"

namespace sg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>; // always first < second

/// Simple undirected loopless graph on vertices 0..n-1.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  /// Builds a graph from a symmetric 0/1 matrix with zero diagonal.
  static Graph from_adjacency(const Matrix& adj);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }

  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u * n_ + v] != 0; }
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Edges (u, v) with u < v in row-major order.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;
  /// Returns k if every vertex has degree k, -1 otherwise (and for n = 0).
  long regular_degree() const;

  Matrix adjacency() const;
  Graph complement() const;

  bool operator==(const Graph&) const = default;

private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
};

inline constexpr std::size_t kMaxGraph6Order = 10000;

/// Decodes one graph6 line (trailing whitespace ignored). Throws ParseError
/// carrying the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Named constructors. Vertex orderings:
///  cycle(n): i ~ i+1 mod n.
///  path(n): i ~ i+1.
///  complete_bipartite(a,b): parts {0..a-1} and {a..a+b-1}.
///  petersen: outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram 5+i ~ 5+(i+2)%5.
///  paley(q): field elements c_{e-1}..c_0 over GF(p), index sum c_i p^i, so
///    polynomial representatives appear in lexicographic coefficient order.
///  hamming(d,q), hypercube(d): words of length d over {0..q-1}, index in
///    base q with the first coordinate most significant.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();
Graph paley_graph(std::size_t q);
Graph hamming_graph(std::size_t d, std::size_t q);
Graph hypercube_graph(std::size_t d);

/// Parses "name" or "name(p1,p2,...)" and dispatches to the constructors above.
Graph named_graph(std::string_view desc);

/// L = D - A.
Matrix laplacian(const Graph& g);
/// K = D + A.
Matrix signless_laplacian(const Graph& g);

/// Edges with exactly one endpoint in `side`; `side` is a vertex subset.
std::vector<Edge> cut_edges(const Graph& g, std::span<const Vertex> side);

/// All-pairs BFS distances; unreachable pairs are -1.
std::vector<int> distance_matrix(const Graph& g);
bool is_connected(const Graph& g);
/// Diameter of a connected graph; throws InputError when disconnected.
std::size_t diameter(const Graph& g);

/// [G_1, ..., G_diam], G_i joining vertices at distance exactly i.
/// Throws InputError when g is disconnected.
std::vector<Graph> distance_graphs(const Graph& g);

} // namespace sg
