#include "repgas/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "repgas/errors.hpp"

namespace repgas {

namespace {

constexpr int kPrimes[32] = {2,  3,  5,  7,  11, 13, 17, 19, 23,  29,  31,
                             37, 41, 43, 47, 53, 59, 61, 67, 71,  73,  79,
                             83, 89, 97, 101, 103, 107, 109, 113, 127, 131};

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// perm[0] stays 0 so the radical inverse keeps its closed form on the
// (implicit) infinite tail of zero digits.
std::vector<int> digit_permutation(int p, std::uint64_t seed, int axis) {
  std::vector<int> perm(static_cast<std::size_t>(p));
  for (int d = 0; d < p; ++d) perm[static_cast<std::size_t>(d)] = d;
  std::uint64_t state = seed ^ (0xa0761d6478bd642fULL * static_cast<std::uint64_t>(axis + 1));
  for (int d = p - 1; d > 1; --d) {
    const int j = 1 + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(d));
    std::swap(perm[static_cast<std::size_t>(d)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

double scrambled_radical_inverse(std::uint64_t i, int p, const std::vector<int>& perm) {
  const double inv = 1.0 / p;
  double f = inv;
  double x = 0.0;
  while (i) {
    x += perm[static_cast<std::size_t>(i % static_cast<std::uint64_t>(p))] * f;
    i /= static_cast<std::uint64_t>(p);
    f *= inv;
  }
  return x;
}

// base^exp saturated at cap+1 (anything above `cap` compares equal for us).
std::size_t checked_pow(std::size_t base, int exp, std::size_t cap) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

NodeSet single_point_rule(const MetricMeasureSpace& space, const Region& region,
                          const QuadratureSpec& spec) {
  if (region.kind() != Region::Kind::boxes)
    throw DomainError("quadrature regions must be box unions");
  if (spec.resolution < 1) throw DomainError("resolution must be positive");
  NodeSet out;
  const int m = spec.resolution;
  for (const Box& part : region.parts()) {
    if (!space.in_carrier(part.lo) || !space.in_carrier(part.hi))
      throw DomainError("integration region leaves the carrier");
    const int d = part.dim();
    std::size_t cells = 1;
    for (int i = 0; i < d; ++i) cells *= static_cast<std::size_t>(m);
    double cell_weight = part.volume();
    for (int i = 0; i < d; ++i) cell_weight /= m;
    for (std::size_t c = 0; c < cells; ++c) {
      std::size_t rem = c;
      Point p = part.lo;
      for (int i = 0; i < d; ++i) {
        const auto idx = static_cast<double>(rem % static_cast<std::size_t>(m));
        rem /= static_cast<std::size_t>(m);
        p[i] = part.lo[i] + (idx + 0.5) / m * (part.hi[i] - part.lo[i]);
      }
      out.points.push_back(p);
      out.weights.push_back(cell_weight);
    }
  }
  return out;
}

TupleRule::TupleRule(const MetricMeasureSpace& space, const Region& region,
                     const QuadratureSpec& spec, int k)
    : k_(k), dim_(region.dim()), scheme_(spec.scheme), seed_(spec.seed) {
  if (k < 1) throw DomainError("tuple arity must be >= 1");
  if (region.kind() != Region::Kind::boxes)
    throw DomainError("quadrature regions must be box unions");

  if (scheme_ == QuadratureSpec::Scheme::tensor_midpoint) {
    base_ = single_point_rule(space, region, spec);
    count_ = checked_pow(base_.size(), k, spec.budget);
    if (count_ > spec.budget)
      throw ResourceError("quadrature budget exceeded", count_);
    return;
  }

  // quasi_random
  parts_ = region.parts();
  if (parts_.size() > 1 && dim_ != 1)
    throw DomainError("multi-part quasi-random regions are 1D only");
  const int axes = k * dim_;
  if (axes > 32) throw ResourceError("quasi-random rule limited to 32 axes",
                                     static_cast<std::size_t>(axes));
  count_ = static_cast<std::size_t>(spec.resolution);
  if (count_ < 1) throw DomainError("resolution must be positive");
  if (count_ > spec.budget) throw ResourceError("quadrature budget exceeded", count_);
  double vol = region.volume();
  weight_ = 1.0;
  for (int j = 0; j < k; ++j) weight_ *= vol;
  weight_ /= static_cast<double>(count_);
  part_offsets_.assign(parts_.size() + 1, 0.0);
  for (std::size_t i = 0; i < parts_.size(); ++i)
    part_offsets_[i + 1] = part_offsets_[i] + parts_[i].volume();
  perms_.reserve(static_cast<std::size_t>(axes));
  for (int a = 0; a < axes; ++a)
    perms_.push_back(digit_permutation(kPrimes[a], seed_, a));
}

double TupleRule::node(std::size_t i, std::vector<Point>& tuple) const {
  tuple.resize(static_cast<std::size_t>(k_));
  if (scheme_ == QuadratureSpec::Scheme::tensor_midpoint) {
    double w = 1.0;
    std::size_t rem = i;
    const std::size_t n = base_.size();
    for (int j = 0; j < k_; ++j) {
      const std::size_t idx = rem % n;
      rem /= n;
      tuple[static_cast<std::size_t>(j)] = base_.points[idx];
      w *= base_.weights[idx];
    }
    return w;
  }

  for (int j = 0; j < k_; ++j) {
    Point p = parts_.front().lo;
    for (int d = 0; d < dim_; ++d) {
      const int axis = j * dim_ + d;
      const double u = scrambled_radical_inverse(i + 1, kPrimes[axis],
                                                 perms_[static_cast<std::size_t>(axis)]);
      if (parts_.size() == 1) {
        const Box& b = parts_.front();
        p[d] = b.lo[d] + u * (b.hi[d] - b.lo[d]);
      } else {
        const double s = u * part_offsets_.back();
        auto it = std::upper_bound(part_offsets_.begin(), part_offsets_.end(), s);
        std::size_t pi = static_cast<std::size_t>(it - part_offsets_.begin());
        pi = pi == 0 ? 0 : pi - 1;
        if (pi >= parts_.size()) pi = parts_.size() - 1;
        p[0] = parts_[pi].lo[0] + (s - part_offsets_[pi]);
      }
    }
    tuple[static_cast<std::size_t>(j)] = p;
  }
  return weight_;
}

TupleNodes quadrature_nodes(const MetricMeasureSpace& space, const Region& region,
                            const QuadratureSpec& spec, int k) {
  TupleRule rule(space, region, spec, k);
  TupleNodes out;
  out.tuples.reserve(rule.count());
  out.weights.reserve(rule.count());
  std::vector<Point> scratch;
  for (std::size_t i = 0; i < rule.count(); ++i) {
    out.weights.push_back(rule.node(i, scratch));
    out.tuples.push_back(scratch);
  }
  return out;
}

QuadratureSpec adapted_for_arity(const MetricMeasureSpace& space, const Region& region,
                                 const QuadratureSpec& spec, int k) {
  (void)space;
  if (k < 1) throw DomainError("tuple arity must be >= 1");
  QuadratureSpec adapted = spec;
  if (spec.scheme == QuadratureSpec::Scheme::quasi_random) {
    adapted.resolution = static_cast<int>(std::min<std::size_t>(
        static_cast<std::size_t>(std::max(spec.resolution, 1)), spec.budget));
    return adapted;
  }
  const std::size_t nparts =
      region.kind() == Region::Kind::boxes ? region.parts().size() : 1;
  const int d = region.dim();
  for (int r = std::max(spec.resolution, 1); r >= 1; --r) {
    const std::size_t single = nparts * checked_pow(static_cast<std::size_t>(r), d, spec.budget);
    if (checked_pow(single, k, spec.budget) <= spec.budget) {
      adapted.resolution = r;
      return adapted;
    }
  }
  throw ResourceError("quadrature budget below one node per region part",
                      checked_pow(nparts, k, std::numeric_limits<std::size_t>::max() / 2));
}

}  // namespace repgas
