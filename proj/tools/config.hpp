#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "repgas/potential.hpp"
#include "repgas/quadrature.hpp"
#include "repgas/space.hpp"

namespace repgas::tools {

// Declarative run description, loaded from an INI-style text file:
//
//   # hard rods on the unit interval
//   [space]
//   kind = euclidean_box          # or hypergraph_intervals
//   dimension = 1
//   lower = [0.0]
//   upper = [1.0]
//   # file = graphs/path.hg       # hypergraph_intervals only
//   # range = 1.0                 #   "     metric range R
//
//   [region]                      # optional sub-box, euclidean only
//   lower = [0.0]
//   upper = [1.0]
//
//   [potential]
//   kind = hard_sphere            # hard_sphere | soft_sphere | zero |
//   k = 2                         #   hypergraph_pure_k
//   r = 0.25                      # ball radius; interaction range is 2r
//   # alpha = 1.0                 # soft_sphere strength
//   # range = 0.0                 # zero: nominal range for B_R bookkeeping
//   arity_cap = 8
//
//   [activity]
//   fraction = 0.99               # of the disk radius 1/(e B_R)
//   radial = 40
//   angular = 16
//
//   [series]
//   truncation = -1               # K; -1 picks the smallest K with tail
//   k_id = 2                      #   below tolerances.tail
//
//   [quadrature]
//   scheme = tensor_midpoint      # or quasi_random
//   resolution = 64
//   budget = 4194304
//   seed = 0
//
//   [identity]
//   probe = [0.5]                 # pinned point y
//   lambda_re = 0.2
//   lambda_im = 0.0
//   thresholds = [0.0, 0.5, inf]  # partial-pin thresholds t
//
//   [contraction]
//   levels = 3
//   grid = 50
//
//   [tolerances]
//   log_bound = 1e-3
//   contraction = 1e-6
//   tail = 1e-8
//
//   [output]
//   directory = .
//
// Keys may be omitted (the defaults below apply); unknown sections or keys
// are rejected so typos cannot silently fall back to defaults.

struct SpaceConfig {
  std::string kind = "euclidean_box";
  int dimension = 1;
  std::vector<double> lower{0.0};
  std::vector<double> upper{1.0};
  std::string file;    // hypergraph_intervals: edge list path
  double range = 1.0;  // hypergraph_intervals: metric range R
};

struct RegionConfig {
  std::optional<std::vector<double>> lower;
  std::optional<std::vector<double>> upper;
};

struct PotentialConfig {
  std::string kind = "hard_sphere";
  int k = 2;
  double r = 0.25;
  double alpha = 1.0;
  double range = 0.0;
  int arity_cap = 8;
};

struct ActivityConfig {
  double fraction = 0.99;
  int radial = 40;
  int angular = 16;
};

struct SeriesConfig {
  int truncation = -1;
  int k_id = 2;
};

struct IdentityConfig {
  std::vector<double> probe{0.5};
  double lambda_re = 0.2;
  double lambda_im = 0.0;
  std::vector<double> thresholds{0.0, 0.5,
                                 std::numeric_limits<double>::infinity()};
};

struct ContractionConfig {
  int levels = 3;
  int grid = 50;
};

struct ToleranceConfig {
  double log_bound = 1e-3;
  double contraction = 1e-6;
  double tail = 1e-8;
};

struct RunConfig {
  SpaceConfig space;
  RegionConfig region;
  PotentialConfig potential;
  ActivityConfig activity;
  SeriesConfig series;
  QuadratureSpec quadrature;
  IdentityConfig identity;
  ContractionConfig contraction;
  ToleranceConfig tolerances;
  std::string output_directory = ".";

  // Parses and validates; ConfigError on unreadable files, syntax errors,
  // unknown keys, or out-of-range values.
  static RunConfig load(const std::string& path);
};

// The configured space, region, and potential, materialized together so the
// potential's space reference stays valid.
struct Instance {
  std::shared_ptr<const MetricMeasureSpace> space;
  Region region;
  Potential potential;
};

Instance build_instance(const RunConfig& config);

// Coordinate list to Point; ConfigError outside dimensions 1..4.
Point point_from(const std::vector<double>& coords);

}  // namespace repgas::tools
