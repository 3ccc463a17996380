#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace repgas {

// k-uniform hypergraph on up to 25 vertices.  Vertices are 0-based
// internally; edges are stored as vertex bitmasks, sorted and deduplicated.
//
// File format: first line "N k", then one edge per line as k space-separated
// 1-based vertex indices.  Blank lines and lines starting with '#' are
// ignored.  Duplicate edges, repeated vertices within an edge, and indices
// outside [1, N] are rejected.
class Hypergraph {
 public:
  static constexpr int kMaxVertices = 25;

  Hypergraph(int vertex_count, int edge_size,
             const std::vector<std::vector<int>>& edges_zero_based);
  static Hypergraph from_file(const std::string& path);

  int vertex_count() const { return n_; }
  int edge_size() const { return k_; }
  const std::vector<std::uint32_t>& edge_masks() const { return edges_; }
  bool is_edge(std::uint32_t mask) const { return edge_set_.count(mask) != 0; }

  // Largest number of edges incident to a single vertex.
  int max_degree() const;

  // Length of the shortest chain of pairwise-intersecting edges joining
  // u to v (0 for u == v, 1 for vertices sharing an edge).  Throws
  // DomainError when u and v lie in different components.
  int hop_distance(int u, int v) const;
  bool connected() const;

 private:
  std::vector<int> hops_from(int source) const;

  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint32_t> edges_;
  std::unordered_set<std::uint32_t> edge_set_;
  std::vector<std::uint32_t> vertex_adjacency_;  // per-vertex neighbour mask
};

// |I_l| for l = 0..N: number of independent sets of each size, where a set is
// independent when it contains no edge entirely.  Exact 64-bit counts via
// depth-first search with per-edge occupancy pruning; vertex counts above 25
// are rejected up front.
std::vector<std::uint64_t> independent_set_counts(const Hypergraph& g);

}  // namespace repgas
