#pragma once

#include <memory>

#include "repgas/hypergraph.hpp"
#include "repgas/potential.hpp"
#include "repgas/space.hpp"

namespace repgas {

// Continuum realization of a hypergraph gas: one unit interval of carrier
// per vertex, the hop metric scaled so that any edge fits within the
// interaction range, and the pure k-body potential that is infinite exactly
// on edges.  The partition function of this system at activity lambda equals
// the independence polynomial evaluated at e^lambda - 1.
//
// The potential and region refer to the space; the struct keeps all three
// together so the references stay valid.
struct Embedding {
  std::shared_ptr<const MetricMeasureSpace> space;
  Potential potential;
  Region region;
};

// Requires a connected graph (the hop metric is undefined otherwise).
// `range` is the interaction range R of the resulting potential.
Embedding build_embedding(std::shared_ptr<const Hypergraph> graph, double range);

}  // namespace repgas
