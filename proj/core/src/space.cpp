#include "repgas/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace repgas {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

MetricMeasureSpace MetricMeasureSpace::euclidean_box(Point lo, Point hi) {
  Point base = lo;
  return euclidean_box(lo, hi, base);
}

MetricMeasureSpace MetricMeasureSpace::euclidean_box(Point lo, Point hi, Point ordering_base) {
  Box b{lo, hi};
  b.validate();
  MetricMeasureSpace s;
  s.kind_ = Kind::euclidean_box;
  s.box_ = b;
  s.base_ = ordering_base;
  if (!b.contains(ordering_base)) throw DomainError("ordering base outside the box");
  return s;
}

MetricMeasureSpace MetricMeasureSpace::hypergraph_intervals(
    std::shared_ptr<const Hypergraph> graph, double range) {
  if (!graph) throw DomainError("null hypergraph");
  if (!(range > 0.0)) throw DomainError("embedding range must be positive");
  MetricMeasureSpace s;
  s.kind_ = Kind::hypergraph_intervals;
  s.graph_ = std::move(graph);
  s.range_ = range;
  s.base_ = Point{2.0};  // leftmost carrier point
  const int n = s.graph_->vertex_count();
  s.box_ = Box{Point{2.0}, Point{2.0 * n + 1.0}};
  s.hop_table_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) {
        s.hop_table_[static_cast<std::size_t>(u) * n + v] = 0;
        continue;
      }
      try {
        s.hop_table_[static_cast<std::size_t>(u) * n + v] = s.graph_->hop_distance(u, v);
      } catch (const DomainError&) {
        // left as -1; distance() reports it if ever queried
      }
    }
  return s;
}

bool MetricMeasureSpace::in_carrier(const Point& p) const {
  if (kind_ == Kind::euclidean_box) return box_.contains(p);
  if (p.dim() != 1) return false;
  const double x = p[0];
  const double j = std::floor(x / 2.0);
  if (j < 1.0 || j > graph_->vertex_count()) return false;
  const double off = x - 2.0 * j;
  return off >= 0.0 && off <= 1.0;
}

double MetricMeasureSpace::carrier_volume() const {
  if (kind_ == Kind::euclidean_box) return box_.volume();
  return static_cast<double>(graph_->vertex_count());
}

Region MetricMeasureSpace::carrier_region() const {
  if (kind_ == Kind::euclidean_box) return Region::box(box_.lo, box_.hi);
  std::vector<Box> parts;
  parts.reserve(static_cast<std::size_t>(graph_->vertex_count()));
  for (int j = 1; j <= graph_->vertex_count(); ++j)
    parts.push_back(Box{Point{2.0 * j}, Point{2.0 * j + 1.0}});
  return Region::box_union(std::move(parts));
}

int MetricMeasureSpace::vertex_of(const Point& p) const {
  if (kind_ != Kind::hypergraph_intervals) throw DomainError("not an interval carrier");
  if (!in_carrier(p)) throw DomainError("point outside the interval carrier");
  return static_cast<int>(std::floor(p[0] / 2.0)) - 1;
}

int MetricMeasureSpace::hop(int u, int v) const {
  const int n = graph_->vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("vertex index out of range");
  const int h = hop_table_[static_cast<std::size_t>(u) * n + v];
  if (h < 0) throw DomainError("vertices lie in different components");
  return h;
}

double MetricMeasureSpace::distance(const Point& a, const Point& b) const {
  if (kind_ == Kind::euclidean_box) {
    if (!box_.contains(a) || !box_.contains(b)) throw DomainError("point outside the box");
    double s = 0.0;
    for (int i = 0; i < box_.dim(); ++i) {
      const double d = a[i] - b[i];
      s += d * d;
    }
    return std::sqrt(s);
  }
  const int u = vertex_of(a);
  const int v = vertex_of(b);
  const double scale = range_ / 10.0;
  if (u == v) return scale * std::abs(a[0] - b[0]);
  const double oa = a[0] - 2.0 * (u + 1);
  const double ob = b[0] - 2.0 * (v + 1);
  // oa + ob first, so the value is bitwise symmetric in a and b.
  return scale * (8.0 * hop(u, v) + 0.1 * (oa + ob));
}

double MetricMeasureSpace::ball_volume(double r) const {
  if (!(r >= 0.0)) throw DomainError("ball radius must be nonnegative");
  if (kind_ == Kind::hypergraph_intervals)
    return static_cast<double>(graph_->max_degree() + 1);
  const int n = box_.dim();
  switch (n) {
    case 1:
      return 2.0 * r;
    case 2:
      return kPi * r * r;
    default:
      return std::pow(kPi, n / 2.0) * std::pow(r, n) / std::tgamma(n / 2.0 + 1.0);
  }
}

double MetricMeasureSpace::ordering_value(std::span<const Point> tuple) const {
  // Summing in sorted order makes the value independent of how the tuple is
  // presented, so threshold comparisons downstream see one number per set.
  std::vector<double> terms;
  terms.reserve(tuple.size());
  for (const Point& p : tuple) terms.push_back(distance(base_, p));
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

const Hypergraph& MetricMeasureSpace::graph() const {
  if (!graph_) throw DomainError("not an interval carrier");
  return *graph_;
}

// ---------------------------------------------------------------------------

Region Region::box(Point lo, Point hi) {
  Box b{lo, hi};
  b.validate();
  Region r;
  r.kind_ = Kind::boxes;
  r.parts_ = {b};
  r.volume_ = b.volume();
  return r;
}

Region Region::box_union(std::vector<Box> parts) {
  if (parts.empty()) throw DomainError("empty box union");
  const int d = parts.front().dim();
  double vol = 0.0;
  for (const Box& b : parts) {
    b.validate();
    if (b.dim() != d) throw DomainError("box union mixes dimensions");
    vol += b.volume();
  }
  Region r;
  r.kind_ = Kind::boxes;
  r.parts_ = std::move(parts);
  r.volume_ = vol;
  return r;
}

Region Region::metric_ball(const MetricMeasureSpace& space, Point center, double radius) {
  if (!(radius >= 0.0)) throw DomainError("ball radius must be nonnegative");
  if (!space.in_carrier(center)) throw DomainError("ball center outside the carrier");
  Region r;
  r.kind_ = Kind::metric_ball;
  r.center_ = center;
  r.radius_ = radius;

  if (space.kind() == MetricMeasureSpace::Kind::euclidean_box) {
    if (space.dim() == 1) {
      const Box& b = space.box();
      const double lo = std::max(b.lo[0], center[0] - radius);
      const double hi = std::min(b.hi[0], center[0] + radius);
      r.volume_ = std::max(0.0, hi - lo);
    } else {
      // Membership works in any dimension; an exact clipped volume is only
      // carried for the 1D and interval carriers, which are the ones the
      // toolkit integrates over.
      r.volume_ = std::numeric_limits<double>::quiet_NaN();
    }
  } else {
    const double scale = space.range() / 10.0;
    const int cu = space.vertex_of(center);
    const double oc = center[0] - 2.0 * (cu + 1);
    double vol = 0.0;
    const int n = space.graph().vertex_count();
    for (int v = 0; v < n; ++v) {
      if (v == cu) {
        const double reach = radius / scale;
        const double lo = std::max(2.0 * (v + 1), center[0] - reach);
        const double hi = std::min(2.0 * (v + 1) + 1.0, center[0] + reach);
        vol += std::max(0.0, hi - lo);
        continue;
      }
      int h;
      try {
        h = space.hop(cu, v);
      } catch (const DomainError&) {
        continue;  // other component: infinitely far, contributes nothing
      }
      // (R/10)(8h + 0.1 oc + 0.1 oy) < radius  <=>  oy < cut
      const double cut = (radius / scale - 8.0 * h - 0.1 * oc) * 10.0;
      vol += std::min(1.0, std::max(0.0, cut));
    }
    r.volume_ = vol;
  }
  return r;
}

int Region::dim() const {
  return kind_ == Kind::boxes ? parts_.front().dim() : center_.dim();
}

bool Region::contains(const MetricMeasureSpace& space, const Point& p) const {
  if (kind_ == Kind::boxes) {
    for (const Box& b : parts_)
      if (b.contains(p)) return true;
    return false;
  }
  return space.distance(center_, p) < radius_;
}

}  // namespace repgas
