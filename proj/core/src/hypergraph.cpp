#include "repgas/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <sstream>

#include "repgas/errors.hpp"

namespace repgas {

Hypergraph::Hypergraph(int vertex_count, int edge_size,
                       const std::vector<std::vector<int>>& edges_zero_based) {
  if (vertex_count < 1 || vertex_count > kMaxVertices)
    throw DomainError("vertex count must be in [1, 25]");
  if (edge_size < 2 || edge_size > kMaxVertices)
    throw DomainError("edge size must be in [2, 25]");
  if (edge_size > vertex_count && !edges_zero_based.empty())
    throw DomainError("edges cannot be larger than the vertex set");
  n_ = vertex_count;
  k_ = edge_size;
  for (const auto& e : edges_zero_based) {
    if (static_cast<int>(e.size()) != k_) throw DomainError("edge has wrong size");
    std::uint32_t mask = 0;
    for (int v : e) {
      if (v < 0 || v >= n_) throw DomainError("edge vertex out of range");
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (mask & bit) throw DomainError("edge repeats a vertex");
      mask |= bit;
    }
    if (!edge_set_.insert(mask).second) throw DomainError("duplicate edge");
    edges_.push_back(mask);
  }
  std::sort(edges_.begin(), edges_.end());
  vertex_adjacency_.assign(static_cast<std::size_t>(n_), 0);
  for (std::uint32_t e : edges_)
    for (int v = 0; v < n_; ++v)
      if (e & (std::uint32_t{1} << v))
        vertex_adjacency_[static_cast<std::size_t>(v)] |= e & ~(std::uint32_t{1} << v);
}

Hypergraph Hypergraph::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open hypergraph file: " + path);
  std::string line;
  int n = 0, k = 0;
  bool header = false;
  std::vector<std::vector<int>> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ss(line);
    if (!header) {
      if (!(ss >> n >> k)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        throw ConfigError("expected header 'N k' in " + path);
      }
      std::string extra;
      if (ss >> extra) throw ConfigError("trailing tokens after header in " + path);
      header = true;
      continue;
    }
    std::vector<int> e;
    int v;
    while (ss >> v) e.push_back(v - 1);  // file is 1-based
    if (!ss.eof())
      throw ConfigError("bad token on line " + std::to_string(lineno) + " of " + path);
    if (e.empty()) continue;
    edges.push_back(std::move(e));
  }
  if (!header) throw ConfigError("missing header 'N k' in " + path);
  try {
    return Hypergraph(n, k, edges);
  } catch (const DomainError& err) {
    throw ConfigError(std::string(err.what()) + " in " + path);
  }
}

int Hypergraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) {
    int deg = 0;
    for (std::uint32_t e : edges_)
      if (e & (std::uint32_t{1} << v)) ++deg;
    best = std::max(best, deg);
  }
  return best;
}

std::vector<int> Hypergraph::hops_from(int source) const {
  std::vector<int> dist(static_cast<std::size_t>(n_), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    std::uint32_t nb = vertex_adjacency_[static_cast<std::size_t>(u)];
    while (nb) {
      const int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int Hypergraph::hop_distance(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex index out of range");
  const int d = hops_from(u)[static_cast<std::size_t>(v)];
  if (d < 0) throw DomainError("vertices lie in different components");
  return d;
}

bool Hypergraph::connected() const {
  const auto dist = hops_from(0);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

namespace {

void count_sets(const Hypergraph& g, int v, int chosen, std::vector<int>& occupancy,
                std::vector<std::uint64_t>& counts) {
  if (v == g.vertex_count()) {
    ++counts[static_cast<std::size_t>(chosen)];
    return;
  }
  // branch 1: leave v out
  count_sets(g, v + 1, chosen, occupancy, counts);
  // branch 2: take v unless that completes an edge
  const auto& edges = g.edge_masks();
  const std::uint32_t bit = std::uint32_t{1} << v;
  bool violates = false;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((edges[i] & bit) && occupancy[i] + 1 == g.edge_size()) {
      violates = true;
      break;
    }
  if (violates) return;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i] & bit) ++occupancy[i];
  count_sets(g, v + 1, chosen + 1, occupancy, counts);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i] & bit) --occupancy[i];
}

}  // namespace

std::vector<std::uint64_t> independent_set_counts(const Hypergraph& g) {
  if (g.vertex_count() > Hypergraph::kMaxVertices)
    throw ResourceError("independent-set enumeration capped at 25 vertices",
                        std::size_t{1} << g.vertex_count());
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::vector<int> occupancy(g.edge_masks().size(), 0);
  count_sets(g, 0, 0, occupancy, counts);
  return counts;
}

}  // namespace repgas
