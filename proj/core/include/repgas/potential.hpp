#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "repgas/geometry.hpp"
#include "repgas/space.hpp"

namespace repgas {

// Largest tuple an evaluation may touch, counting points appended by pins.
inline constexpr int kMaxEvalPoints = 40;

// A repulsive, symmetric, finite-range multi-body potential together with an
// ordered list of decorations.  Values are extended reals in [0, +inf]; the
// conventions inf + finite = inf and exp(-inf) = 0 are applied throughout and
// no evaluation path multiplies 0 by inf.
//
// Decorations are stored in application order.  Evaluation unfolds them from
// the outermost (most recently added) inward, so a pin added later extends the
// tuple that earlier decorations see:
//
//   pin(y):             v(x) = inner(x) + inner(x, y)
//   partial_pin(y, t):  v(x) = inner(x) + [D(x) < t] * inner(x, y)
//   exclude(U):         v(x) = inf for a single point x in U, else inner(x)
//   hat(N, R):          v(x) = inner(x) for |x| <= N, else inf * [diam(x) <= R]
//
// D is the ordering value of the space (sum of distances to the base point)
// and the comparison is strict: ties are not pinned.
//
// Instances are immutable; decoration builders return new values.  Evaluation
// is pure and thread-safe.  The space is held by pointer and must outlive the
// potential.
class Potential {
 public:
  using Kernel = std::function<double(std::span<const Point>)>;

  // No interaction at any arity.  `range` only informs range(); it matters
  // when a scan needs a ball volume for an interaction-free reference gas.
  static Potential zero(const MetricMeasureSpace& space, double range = 0.0);

  // Pure k-body kernel, infinite exactly when the k points fit in some closed
  // ball of radius r.  Range 2r.  Supported in 1 and 2 dimensions.
  static Potential hard_sphere(const MetricMeasureSpace& space, int k, double r);

  // Same containment predicate, finite kernel value alpha instead of inf.
  static Potential soft_sphere(const MetricMeasureSpace& space, int k, double r,
                               double alpha);

  // Pure k-body kernel on an interval carrier, k the edge size of the
  // underlying hypergraph: infinite exactly when the points occupy k distinct
  // vertices forming an edge.  Range equals the space's interaction range.
  static Potential hypergraph_pure(const MetricMeasureSpace& space);

  // Single-arity kernel supplied by the caller.  The kernel must be symmetric,
  // nonnegative and vanish on tuples of diameter above `range`.
  static Potential custom(const MetricMeasureSpace& space, int arity, double range,
                          Kernel kernel);

  // Decoration builders, appended in application order.
  Potential pinned(const Point& y) const;
  Potential pinned(std::span<const Point> ys) const;
  Potential partial_pinned(const Point& y, double threshold) const;
  Potential excluded(Region region) const;
  Potential hatted(int max_arity, double hard_range) const;

  Potential with_arity_cap(int cap) const;

  // Kernel value at one tuple, decorations applied.  Nonempty tuple of
  // carrier points required.
  double eval(std::span<const Point> tuple) const;

  // H(x) = sum over nonempty subsets S of eval(x_S).  Only arities that can
  // carry a nonzero kernel are enumerated.  Throws ResourceError when the
  // tuple exceeds the arity cap.
  double hamiltonian(std::span<const Point> tuple) const;

  // exp(-H), exactly 0 when H is infinite.
  double boltzmann(std::span<const Point> tuple) const;

  double range() const { return range_; }
  int arity_cap() const { return arity_cap_; }
  const MetricMeasureSpace& space() const { return *space_; }

  // Whether tuples of this size can have a nonzero kernel value.
  bool arity_active(int arity) const;

 private:
  enum class Base { zero, sphere, hypergraph, custom };
  struct Decoration {
    enum class Kind { pin, partial_pin, exclude, hat };
    Kind kind;
    Point point = Point::scalar(0.0);
    double threshold = 0.0;                  // partial_pin
    std::shared_ptr<const Region> region;    // exclude
    int hat_arity = 0;                       // hat
    double hat_range = 0.0;                  // hat
  };

  explicit Potential(const MetricMeasureSpace& space);
  double base_eval(std::span<const Point> tuple) const;
  double eval_rec(Point* buf, int len, int deco) const;
  Potential appended(Decoration d) const;

  const MetricMeasureSpace* space_;
  Base base_ = Base::zero;
  int base_arity_ = 0;
  double sphere_radius_ = 0.0;
  double sphere_value_ = 0.0;  // +inf for hard spheres
  Kernel kernel_;
  double range_ = 0.0;
  int arity_cap_ = 8;
  std::vector<Decoration> decorations_;
  std::uint64_t active_mask_ = 0;  // bit a: arity a possibly nonzero
  bool active_above_ = false;      // every arity >= active_from_ possibly nonzero
  int active_from_ = 0;
};

}  // namespace repgas
