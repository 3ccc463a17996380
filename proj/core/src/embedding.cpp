#include "repgas/embedding.hpp"

#include "repgas/errors.hpp"

namespace repgas {

Embedding build_embedding(std::shared_ptr<const Hypergraph> graph, double range) {
  if (!graph) throw DomainError("embedding needs a hypergraph");
  if (!graph->connected())
    throw DomainError("embedding needs a connected hypergraph");
  auto space = std::make_shared<const MetricMeasureSpace>(
      MetricMeasureSpace::hypergraph_intervals(graph, range));
  Potential potential = Potential::hypergraph_pure(*space);
  Region region = space->carrier_region();
  return Embedding{std::move(space), std::move(potential), std::move(region)};
}

}  // namespace repgas
