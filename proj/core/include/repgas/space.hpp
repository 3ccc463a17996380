#pragma once

#include <memory>
#include <span>
#include <vector>

#include "repgas/geometry.hpp"
#include "repgas/hypergraph.hpp"

namespace repgas {

class Region;

// Metric measure space the processes live on.  Two kinds:
//
//  - euclidean_box: a closed box in R^n (n <= 4) with the Euclidean metric
//    and Lebesgue measure restricted to the box.
//
//  - hypergraph_intervals: the union of unit intervals [2j, 2j+1], one per
//    vertex j = 1..N of a k-uniform hypergraph, with Lebesgue measure.  The
//    metric is (R/10)|x-y| within an interval and
//    (R/10)(8 hop(u,v) + |x - 2u|/10 + |y - 2v|/10) across intervals, where
//    hop is the shortest chain of pairwise-intersecting edges.  Points in
//    intervals of a common edge are then within distance R of each other,
//    while the measure of any ball of radius R is at most Delta + 1.
//
// The ordering base z anchors the tuple functional D(x) = sum_j d(z, x_j)
// used by partial pins.  It defaults to the box's lower corner, or to the
// leftmost carrier point (coordinate 2) for interval carriers.
class MetricMeasureSpace {
 public:
  enum class Kind { euclidean_box, hypergraph_intervals };

  static MetricMeasureSpace euclidean_box(Point lo, Point hi);
  static MetricMeasureSpace euclidean_box(Point lo, Point hi, Point ordering_base);
  static MetricMeasureSpace hypergraph_intervals(std::shared_ptr<const Hypergraph> graph,
                                                 double range);

  Kind kind() const { return kind_; }
  int dim() const { return kind_ == Kind::euclidean_box ? box_.dim() : 1; }
  const Point& ordering_base() const { return base_; }
  const Box& box() const { return box_; }

  bool in_carrier(const Point& p) const;
  double carrier_volume() const;
  Region carrier_region() const;

  // Distance between carrier points; DomainError outside the carrier or
  // (interval kind) across disconnected components.
  double distance(const Point& a, const Point& b) const;

  // Largest measure of a closed metric ball of radius r.  Euclidean boxes
  // report the unclipped ambient value (2r in 1D, pi r^2 in 2D, the usual
  // Gamma-function expression beyond); interval carriers report Delta + 1,
  // the degree bound satisfied at the embedding range.
  double ball_volume(double r) const;

  // D(x) = sum_j d(z, x_j); zero on the empty tuple.
  double ordering_value(std::span<const Point> tuple) const;

  // Interval-carrier accessors.
  const Hypergraph& graph() const;
  const std::shared_ptr<const Hypergraph>& graph_ptr() const { return graph_; }
  double range() const { return range_; }
  int vertex_of(const Point& p) const;  // 0-based; DomainError off the carrier
  int hop(int u, int v) const;          // cached table; DomainError if disconnected

 private:
  MetricMeasureSpace() = default;

  Kind kind_ = Kind::euclidean_box;
  Box box_;
  Point base_;
  std::shared_ptr<const Hypergraph> graph_;
  double range_ = 0.0;
  std::vector<int> hop_table_;  // n*n, -1 for unreachable
};

// Integration / exclusion domain.  Either a finite union of disjoint closed
// boxes (single boxes and the interval-union carrier are the common cases)
// or a strict metric sublevel set {y : d(center, y) < radius}, which is what
// the log-partition construction excludes.  Volumes are analytic: products
// and sums for boxes, interval overlaps for 1D and interval-carrier balls.
class Region {
 public:
  enum class Kind { boxes, metric_ball };

  static Region box(Point lo, Point hi);
  static Region box_union(std::vector<Box> parts);
  static Region metric_ball(const MetricMeasureSpace& space, Point center, double radius);

  Kind kind() const { return kind_; }
  const std::vector<Box>& parts() const { return parts_; }
  const Point& center() const { return center_; }
  double radius() const { return radius_; }

  double volume() const { return volume_; }
  int dim() const;
  bool contains(const MetricMeasureSpace& space, const Point& p) const;

 private:
  Region() = default;

  Kind kind_ = Kind::boxes;
  std::vector<Box> parts_;
  Point center_;
  double radius_ = 0.0;
  double volume_ = 0.0;
};

}  // namespace repgas
