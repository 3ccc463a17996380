#pragma once

#include <cstdint>
#include <vector>

#include "repgas/space.hpp"

namespace repgas {

// Deterministic quadrature rule selector.
//
//  - tensor_midpoint: `resolution` midpoint nodes per axis and box part;
//    k-tuple rules are the k-fold product of the single-point rule.
//  - quasi_random: `resolution` total k-tuple nodes from a seeded
//    digit-scrambled Halton sequence, each weighted volume^k / resolution.
//
// `budget` caps the total number of k-tuple nodes a single integral may use;
// exceeding it is a ResourceError carrying the required size.
struct QuadratureSpec {
  enum class Scheme { tensor_midpoint, quasi_random };
  Scheme scheme = Scheme::tensor_midpoint;
  int resolution = 64;
  std::uint64_t seed = 0;
  std::size_t budget = std::size_t{1} << 22;
};

// Single-point rule over a region: weights sum to the region volume.
struct NodeSet {
  std::vector<Point> points;
  std::vector<double> weights;
  std::size_t size() const { return points.size(); }
};

NodeSet single_point_rule(const MetricMeasureSpace& space, const Region& region,
                          const QuadratureSpec& spec);

// Lazily indexed rule for Region^k.  Nodes are visited by flat index so
// reductions can be chunked deterministically without materializing tuples.
class TupleRule {
 public:
  TupleRule(const MetricMeasureSpace& space, const Region& region,
            const QuadratureSpec& spec, int k);

  std::size_t count() const { return count_; }
  int arity() const { return k_; }

  // Writes the i-th tuple into `tuple` (resized to k) and returns its weight.
  double node(std::size_t i, std::vector<Point>& tuple) const;

 private:
  int k_;
  int dim_;
  QuadratureSpec::Scheme scheme_;
  std::size_t count_ = 0;
  NodeSet base_;                       // tensor_midpoint
  std::vector<Box> parts_;             // quasi_random placement
  std::vector<double> part_offsets_;   // cumulative 1D part lengths
  double weight_ = 0.0;                // quasi_random per-node weight
  std::uint64_t seed_ = 0;
  std::vector<std::vector<int>> perms_;  // scrambling permutation per axis
};

// Materialized spec-facing variant; ResourceError when the tuple count would
// exceed spec.budget.
struct TupleNodes {
  std::vector<std::vector<Point>> tuples;
  std::vector<double> weights;
};
TupleNodes quadrature_nodes(const MetricMeasureSpace& space, const Region& region,
                            const QuadratureSpec& spec, int k);

// Largest per-axis resolution not above spec.resolution whose k-fold product
// rule fits the budget.  ResourceError if even one node per part overflows.
QuadratureSpec adapted_for_arity(const MetricMeasureSpace& space, const Region& region,
                                 const QuadratureSpec& spec, int k);

}  // namespace repgas
