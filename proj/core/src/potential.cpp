#include "repgas/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "repgas/errors.hpp"
#include "repgas/hypergraph.hpp"

namespace repgas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sq(double v) { return v * v; }

double euclid_dist(const Point& a, const Point& b, int dim) {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += sq(a[i] - b[i]);
  return std::sqrt(s);
}

// Smallest enclosing ball radius for a planar tuple.  The optimal center is
// either the midpoint of two support points or the circumcenter of three, so
// scanning those candidates and taking the best covering radius is exact.
double enclosing_radius_2d(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  if (n == 1) return 0.0;
  double best = kInf;
  auto consider = [&](double cx, double cy) {
    double r = 0.0;
    for (const Point& p : pts) r = std::max(r, sq(p[0] - cx) + sq(p[1] - cy));
    best = std::min(best, r);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      consider(0.5 * (pts[i][0] + pts[j][0]), 0.5 * (pts[i][1] + pts[j][1]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l) {
        const double d1x = pts[j][0] - pts[i][0], d1y = pts[j][1] - pts[i][1];
        const double d2x = pts[l][0] - pts[i][0], d2y = pts[l][1] - pts[i][1];
        const double det = d1x * d2y - d1y * d2x;
        const double scale = (sq(d1x) + sq(d1y)) * (sq(d2x) + sq(d2y));
        if (sq(det) <= 1e-28 * scale) continue;  // collinear: pairs cover it
        const double r1 = 0.5 * (sq(d1x) + sq(d1y));
        const double r2 = 0.5 * (sq(d2x) + sq(d2y));
        consider(pts[i][0] + (d2y * r1 - d1y * r2) / det,
                 pts[i][1] + (d1x * r2 - d2x * r1) / det);
      }
  return std::sqrt(best);
}

bool fits_in_ball(std::span<const Point> pts, int dim, double r) {
  if (dim == 1) {
    double lo = pts[0][0], hi = pts[0][0];
    for (const Point& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo <= 2.0 * r;
  }
  return enclosing_radius_2d(pts) <= r;
}

double tuple_diameter(const MetricMeasureSpace& space, const Point* pts, int n) {
  double d = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d = std::max(d, space.distance(pts[i], pts[j]));
  return d;
}

}  // namespace

Potential::Potential(const MetricMeasureSpace& space) : space_(&space) {}

Potential Potential::zero(const MetricMeasureSpace& space, double range) {
  if (range < 0.0) throw DomainError("range must be >= 0");
  Potential p(space);
  p.base_ = Base::zero;
  p.range_ = range;
  return p;
}

Potential Potential::hard_sphere(const MetricMeasureSpace& space, int k, double r) {
  return soft_sphere(space, k, r, kInf);
}

Potential Potential::soft_sphere(const MetricMeasureSpace& space, int k, double r,
                                 double alpha) {
  if (space.kind() != MetricMeasureSpace::Kind::euclidean_box)
    throw DomainError("sphere potentials need a euclidean carrier");
  if (space.dim() > 2)
    throw DomainError("ball containment is only decided in 1 and 2 dimensions");
  if (k < 2) throw DomainError("sphere potentials are k-body with k >= 2");
  if (!(r > 0.0)) throw DomainError("sphere radius must be positive");
  if (!(alpha > 0.0)) throw DomainError("sphere strength must be positive");
  Potential p(space);
  p.base_ = Base::sphere;
  p.base_arity_ = k;
  p.sphere_radius_ = r;
  p.sphere_value_ = alpha;
  p.range_ = 2.0 * r;
  p.active_mask_ = std::uint64_t{1} << k;
  return p;
}

Potential Potential::hypergraph_pure(const MetricMeasureSpace& space) {
  if (space.kind() != MetricMeasureSpace::Kind::hypergraph_intervals)
    throw DomainError("hypergraph potential needs an interval carrier");
  Potential p(space);
  p.base_ = Base::hypergraph;
  p.base_arity_ = space.graph().edge_size();
  p.range_ = space.range();
  p.active_mask_ = std::uint64_t{1} << p.base_arity_;
  return p;
}

Potential Potential::custom(const MetricMeasureSpace& space, int arity, double range,
                            Kernel kernel) {
  if (arity < 1 || arity >= kMaxEvalPoints) throw DomainError("bad custom arity");
  if (range < 0.0) throw DomainError("range must be >= 0");
  if (!kernel) throw DomainError("custom kernel must be callable");
  Potential p(space);
  p.base_ = Base::custom;
  p.base_arity_ = arity;
  p.kernel_ = std::move(kernel);
  p.range_ = range;
  p.active_mask_ = std::uint64_t{1} << arity;
  return p;
}

Potential Potential::appended(Decoration d) const {
  Potential out = *this;
  switch (d.kind) {
    case Decoration::Kind::pin:
    case Decoration::Kind::partial_pin:
      out.active_mask_ |= active_mask_ >> 1;
      out.active_mask_ &= ~std::uint64_t{1};  // arity stays >= 1
      if (active_above_) out.active_from_ = std::max(1, active_from_ - 1);
      break;
    case Decoration::Kind::exclude:
      out.active_mask_ |= std::uint64_t{2};
      break;
    case Decoration::Kind::hat: {
      const int n = d.hat_arity;
      if (active_above_)
        for (int a = std::max(1, active_from_); a <= std::min(n, 63); ++a)
          out.active_mask_ |= std::uint64_t{1} << a;
      if (n < 63) out.active_mask_ &= (std::uint64_t{1} << (n + 1)) - 1;
      out.active_above_ = true;
      out.active_from_ = n + 1;
      out.range_ = std::max(range_, d.hat_range);
      break;
    }
  }
  out.decorations_.push_back(std::move(d));
  return out;
}

Potential Potential::pinned(const Point& y) const {
  if (!space_->in_carrier(y)) throw DomainError("pin point outside carrier");
  Decoration d;
  d.kind = Decoration::Kind::pin;
  d.point = y;
  return appended(std::move(d));
}

Potential Potential::pinned(std::span<const Point> ys) const {
  Potential out = *this;
  for (const Point& y : ys) out = out.pinned(y);
  return out;
}

Potential Potential::partial_pinned(const Point& y, double threshold) const {
  if (!space_->in_carrier(y)) throw DomainError("pin point outside carrier");
  if (std::isnan(threshold) || threshold < 0.0)
    throw DomainError("partial pin threshold must be in [0, inf]");
  Decoration d;
  d.kind = Decoration::Kind::partial_pin;
  d.point = y;
  d.threshold = threshold;
  return appended(std::move(d));
}

Potential Potential::excluded(Region region) const {
  if (region.dim() != space_->dim())
    throw DomainError("excluded region dimension mismatch");
  Decoration d;
  d.kind = Decoration::Kind::exclude;
  d.region = std::make_shared<const Region>(std::move(region));
  return appended(std::move(d));
}

Potential Potential::hatted(int max_arity, double hard_range) const {
  if (max_arity < 1) throw DomainError("hat arity must be >= 1");
  if (hard_range < 0.0) throw DomainError("hat range must be >= 0");
  Decoration d;
  d.kind = Decoration::Kind::hat;
  d.hat_arity = max_arity;
  d.hat_range = hard_range;
  return appended(std::move(d));
}

Potential Potential::with_arity_cap(int cap) const {
  if (cap < 1 || cap >= kMaxEvalPoints) throw DomainError("bad arity cap");
  Potential out = *this;
  out.arity_cap_ = cap;
  return out;
}

bool Potential::arity_active(int arity) const {
  if (arity < 1) return false;
  if (active_above_ && arity >= active_from_) return true;
  if (arity > 63) return false;
  return (active_mask_ >> arity) & 1u;
}

double Potential::base_eval(std::span<const Point> tuple) const {
  const int n = static_cast<int>(tuple.size());
  switch (base_) {
    case Base::zero:
      return 0.0;
    case Base::sphere:
      if (n != base_arity_) return 0.0;
      return fits_in_ball(tuple, space_->dim(), sphere_radius_) ? sphere_value_ : 0.0;
    case Base::hypergraph: {
      if (n != base_arity_) return 0.0;
      std::uint32_t mask = 0;
      for (const Point& p : tuple) {
        const std::uint32_t bit = std::uint32_t{1} << space_->vertex_of(p);
        if (mask & bit) return 0.0;  // repeated vertex: not an edge
        mask |= bit;
      }
      return space_->graph().is_edge(mask) ? kInf : 0.0;
    }
    case Base::custom:
      if (n != base_arity_) return 0.0;
      return kernel_(tuple);
  }
  return 0.0;
}

double Potential::eval_rec(Point* buf, int len, int deco) const {
  if (deco < 0) return base_eval(std::span<const Point>(buf, static_cast<std::size_t>(len)));
  const Decoration& d = decorations_[static_cast<std::size_t>(deco)];
  switch (d.kind) {
    case Decoration::Kind::pin: {
      const double v = eval_rec(buf, len, deco - 1);
      if (std::isinf(v)) return v;
      buf[len] = d.point;
      return v + eval_rec(buf, len + 1, deco - 1);
    }
    case Decoration::Kind::partial_pin: {
      const double v = eval_rec(buf, len, deco - 1);
      if (std::isinf(v)) return v;
      const double order =
          space_->ordering_value(std::span<const Point>(buf, static_cast<std::size_t>(len)));
      if (!(order < d.threshold)) return v;  // ties stay unpinned
      buf[len] = d.point;
      return v + eval_rec(buf, len + 1, deco - 1);
    }
    case Decoration::Kind::exclude:
      if (len == 1 && d.region->contains(*space_, buf[0])) return kInf;
      return eval_rec(buf, len, deco - 1);
    case Decoration::Kind::hat:
      if (len <= d.hat_arity) return eval_rec(buf, len, deco - 1);
      return tuple_diameter(*space_, buf, len) <= d.hat_range ? kInf : 0.0;
  }
  return 0.0;
}

double Potential::eval(std::span<const Point> tuple) const {
  if (tuple.empty()) throw DomainError("kernel evaluation needs a nonempty tuple");
  const std::size_t need = tuple.size() + decorations_.size();
  if (need > kMaxEvalPoints)
    throw ResourceError("tuple plus pins exceeds evaluation buffer", need);
  Point buf[kMaxEvalPoints];
  std::copy(tuple.begin(), tuple.end(), buf);
  return eval_rec(buf, static_cast<int>(tuple.size()),
                  static_cast<int>(decorations_.size()) - 1);
}

double Potential::hamiltonian(std::span<const Point> tuple) const {
  const int n = static_cast<int>(tuple.size());
  if (n == 0) return 0.0;
  if (n > arity_cap_)
    throw ResourceError("tuple exceeds arity cap", tuple.size());
  double h = 0.0;
  Point sub[kMaxEvalPoints];
  int idx[kMaxEvalPoints];
  for (int a = 1; a <= n; ++a) {
    if (!arity_active(a)) continue;
    for (int j = 0; j < a; ++j) idx[j] = j;
    while (true) {
      for (int j = 0; j < a; ++j) sub[j] = tuple[static_cast<std::size_t>(idx[j])];
      const double v = eval(std::span<const Point>(sub, static_cast<std::size_t>(a)));
      if (std::isinf(v)) return v;
      h += v;
      int j = a - 1;
      while (j >= 0 && idx[j] == j + n - a) --j;
      if (j < 0) break;
      ++idx[j];
      for (int l = j + 1; l < a; ++l) idx[l] = idx[l - 1] + 1;
    }
  }
  return h;
}

double Potential::boltzmann(std::span<const Point> tuple) const {
  const double h = hamiltonian(tuple);
  return std::isinf(h) ? 0.0 : std::exp(-h);
}

}  // namespace repgas
