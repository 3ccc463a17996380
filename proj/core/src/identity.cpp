#include "repgas/identity.hpp"

#include <algorithm>
#include <cmath>

#include "repgas/errors.hpp"
#include "repgas/series.hpp"
#include "repgas/threading.hpp"

namespace repgas {

namespace {

// 1 - exp(-phi(y, w_1..w_k)) with the bare kernel at the extended tuple.
double escape_factor(const Potential& potential, const Point& y,
                     const std::vector<Point>& w) {
  Point ext[kMaxEvalPoints];
  ext[0] = y;
  std::copy(w.begin(), w.end(), ext + 1);
  const double phi =
      potential.eval(std::span<const Point>(ext, w.size() + 1));
  if (std::isinf(phi)) return 1.0;
  return -std::expm1(-phi);
}

int pick_series_truncation(int requested, std::complex<double> lambda, double volume) {
  if (requested >= 0) return requested;
  return default_truncation(std::abs(lambda) * volume);
}

struct IdentityParts {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double analytic_tail = 0.0;
};

IdentityParts integral_identity_once(const MetricMeasureSpace& space,
                                     const Region& region, const Potential& potential,
                                     std::complex<double> lambda, const Point& y,
                                     int k_levels, const QuadratureSpec& spec,
                                     int z_truncation, double delta_floor) {
  IdentityParts parts;
  const double volume = region.volume();
  const Point probe[1] = {y};
  parts.lhs = modified_density(space, region, potential, lambda, probe, z_truncation,
                               spec, delta_floor);

  const SeriesResult zbase =
      partition_function(space, region, potential, lambda, z_truncation, spec);
  const double delta_eff =
      std::max(std::abs(zbase.value) - zbase.tail_bound, delta_floor);

  std::complex<double> ksum = 0.0;
  double factorial = 1.0;
  for (int k = 1; k <= k_levels; ++k) {
    factorial *= k;
    const QuadratureSpec adapted = adapted_for_arity(space, region, spec, k);
    const TupleRule rule(space, region, adapted, k);
    const auto level = [&](std::size_t begin, std::size_t end) {
      std::vector<Point> w;
      std::complex<double> acc = 0.0;
      for (std::size_t i = begin; i < end; ++i) {
        const double weight = rule.node(i, w);
        const double factor = escape_factor(potential, y, w);
        if (factor == 0.0) continue;
        const double t = space.ordering_value(w);
        const Potential conditioned = potential.partial_pinned(y, t);
        const double bw = conditioned.boltzmann(w);
        if (bw == 0.0) continue;
        const std::complex<double> kappa = telescoped_density(
            space, region, conditioned, lambda, w, z_truncation, spec, delta_floor);
        acc += weight * factor * bw * kappa;
      }
      return acc;
    };
    ksum += chunked_sum(rule.count(), level) / factorial;
  }
  parts.rhs = lambda * std::exp(-ksum);

  // Dropped k-levels are bounded by |kappa| <= |lambda|^k e^{|lambda| vol} /
  // delta_eff, the factor and Boltzmann weight by 1.
  parts.analytic_tail = std::exp(std::abs(lambda) * volume) / delta_eff *
                        series_tail(std::abs(lambda) * volume, k_levels);
  return parts;
}

// Integral table at exactly the requested resolution, no per-arity
// adaptation and no constant-integrand shortcut: nested partition sums must
// share one node grid for the partition identity to telescope bitwise.
std::vector<double> fixed_grid_integrals(const MetricMeasureSpace& space,
                                         const Region& region,
                                         const Potential& potential, int truncation,
                                         const QuadratureSpec& spec) {
  std::vector<double> table(static_cast<std::size_t>(truncation) + 1);
  table[0] = 1.0;
  for (int k = 1; k <= truncation; ++k) {
    const TupleRule rule(space, region, spec, k);
    const auto partial = [&](std::size_t begin, std::size_t end) {
      std::vector<Point> tuple;
      double acc = 0.0;
      for (std::size_t i = begin; i < end; ++i) {
        const double w = rule.node(i, tuple);
        acc += w * potential.boltzmann(tuple);
      }
      return std::complex<double>(acc, 0.0);
    };
    table[static_cast<std::size_t>(k)] = chunked_sum(rule.count(), partial).real();
  }
  return table;
}

struct LogPartitionParts {
  std::complex<double> exp_integral;
  std::complex<double> z;
  double z_tail = 0.0;
  double density_tail = 0.0;
};

LogPartitionParts log_partition_once(const MetricMeasureSpace& space,
                                     const Region& region, const Potential& potential,
                                     std::complex<double> lambda,
                                     const QuadratureSpec& spec, int z_truncation,
                                     double delta_floor) {
  LogPartitionParts parts;
  const SeriesResult zres =
      partition_function(space, region, potential, lambda, z_truncation, spec);
  parts.z = zres.value;
  parts.z_tail = zres.tail_bound;
  const double delta_eff =
      std::max(std::abs(zres.value) - zres.tail_bound, delta_floor);

  const Point base = space.ordering_base();
  const NodeSet nodes = single_point_rule(space, region, spec);
  const auto partial = [&](std::size_t begin, std::size_t end) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const Point& x = nodes.points[i];
      const Region shadow =
          Region::metric_ball(space, base, space.distance(base, x));
      const Potential screened = potential.excluded(shadow);
      const Point probe[1] = {x};
      const double field = screened.eval(probe);
      if (std::isinf(field)) continue;
      const std::complex<double> kappa = modified_density(
          space, region, screened, lambda, probe, z_truncation, spec, delta_floor);
      acc += nodes.weights[i] * std::exp(-field) * kappa;
    }
    return acc;
  };
  const std::complex<double> integral = chunked_sum(nodes.size(), partial);
  parts.exp_integral = std::exp(integral);

  // First-order effect of the series tails on each one-point density.
  parts.density_tail = region.volume() * std::abs(parts.exp_integral) *
                       std::abs(lambda) * 2.0 * zres.tail_bound / delta_eff;
  return parts;
}

}  // namespace

IdentityReport integral_identity_check(const MetricMeasureSpace& space,
                                       const Region& region, const Potential& potential,
                                       std::complex<double> lambda, const Point& y,
                                       int k_levels, const QuadratureSpec& spec,
                                       int series_truncation, double delta_floor) {
  if (k_levels < 1) throw DomainError("identity needs at least one k-level");
  if (k_levels > potential.arity_cap())
    throw DomainError("identity depth exceeds the arity cap");
  const int z_trunc = pick_series_truncation(series_truncation, lambda, region.volume());

  const IdentityParts fine = integral_identity_once(
      space, region, potential, lambda, y, k_levels, spec, z_trunc, delta_floor);
  QuadratureSpec half = spec;
  half.resolution = std::max(1, spec.resolution / 2);
  const IdentityParts coarse = integral_identity_once(
      space, region, potential, lambda, y, k_levels, half, z_trunc, delta_floor);

  IdentityReport report;
  report.lhs = fine.lhs;
  report.rhs = fine.rhs;
  report.residual = std::abs(fine.lhs - fine.rhs);
  report.truncation = k_levels;
  report.tolerance_budget = std::abs(fine.rhs) * std::expm1(fine.analytic_tail) +
                            2.0 * (std::abs(fine.lhs - coarse.lhs) +
                                   std::abs(fine.rhs - coarse.rhs));
  return report;
}

IdentityReport partition_identity_check(const MetricMeasureSpace& space,
                                        const Region& region, const Potential& potential,
                                        std::complex<double> lambda, const Point& y,
                                        double threshold, int k_levels,
                                        const QuadratureSpec& spec) {
  if (k_levels < 1) throw DomainError("identity needs at least one k-level");
  if (std::isnan(threshold) || threshold < 0.0)
    throw DomainError("threshold must be in [0, inf]");
  const double volume = region.volume();

  const Potential conditioned_lhs = potential.partial_pinned(y, threshold);
  const auto lhs_table =
      fixed_grid_integrals(space, region, conditioned_lhs, k_levels, spec);
  const std::complex<double> lhs =
      partition_from_integrals(lhs_table, lambda, volume, spec).value;

  const auto plain_table = fixed_grid_integrals(space, region, potential, k_levels, spec);
  const SeriesResult plain = partition_from_integrals(plain_table, lambda, volume, spec);

  std::complex<double> rhs = plain.value;
  std::complex<double> lambda_pow = 1.0;
  double factorial = 1.0;
  for (int k = 1; k <= k_levels; ++k) {
    lambda_pow *= lambda;
    factorial *= k;
    const TupleRule rule(space, region, spec, k);
    const auto level = [&](std::size_t begin, std::size_t end) {
      std::vector<Point> w;
      std::complex<double> acc = 0.0;
      for (std::size_t i = begin; i < end; ++i) {
        const double weight = rule.node(i, w);
        const double order = space.ordering_value(w);
        if (!(order < threshold)) continue;
        const double factor = escape_factor(potential, y, w);
        if (factor == 0.0) continue;
        const Potential conditioned = potential.partial_pinned(y, order);
        const double bw = conditioned.boltzmann(w);
        if (bw == 0.0) continue;
        const Potential nested = conditioned.pinned(w);
        const auto nested_table =
            fixed_grid_integrals(space, region, nested, k_levels - k, spec);
        const std::complex<double> zw =
            partition_from_integrals(nested_table, lambda, volume, spec).value;
        acc += weight * factor * bw * zw;
      }
      return acc;
    };
    rhs -= lambda_pow / factorial * chunked_sum(rule.count(), level);
  }

  IdentityReport report;
  report.lhs = lhs;
  report.rhs = rhs;
  report.residual = std::abs(lhs - rhs);
  report.truncation = k_levels;
  report.tolerance_budget =
      2.0 * series_tail(std::abs(lambda) * volume, k_levels) *
          std::exp(std::abs(lambda) * volume) +
      1e-12 * (1.0 + std::abs(plain.value));
  return report;
}

IdentityReport log_partition_check(const MetricMeasureSpace& space, const Region& region,
                                   const Potential& potential,
                                   std::complex<double> lambda,
                                   const QuadratureSpec& spec, int series_truncation,
                                   double delta_floor) {
  const int z_trunc = pick_series_truncation(series_truncation, lambda, region.volume());
  const LogPartitionParts fine = log_partition_once(space, region, potential, lambda,
                                                    spec, z_trunc, delta_floor);
  QuadratureSpec half = spec;
  half.resolution = std::max(1, spec.resolution / 2);
  const LogPartitionParts coarse = log_partition_once(space, region, potential, lambda,
                                                      half, z_trunc, delta_floor);

  IdentityReport report;
  report.lhs = fine.exp_integral;
  report.rhs = fine.z;
  report.residual = std::abs(report.lhs - report.rhs);
  report.truncation = z_trunc;
  report.tolerance_budget =
      fine.z_tail + fine.density_tail +
      2.0 * (std::abs(fine.exp_integral - coarse.exp_integral) +
             std::abs(fine.z - coarse.z));
  return report;
}

std::vector<double> contraction_coefficients(const MetricMeasureSpace& space,
                                             const Region& region,
                                             const Potential& potential, const Point& y,
                                             int levels, const QuadratureSpec& spec) {
  if (levels < 1) throw DomainError("contraction needs at least one level");
  if (levels > potential.arity_cap())
    throw DomainError("contraction depth exceeds the arity cap");
  std::vector<double> coeffs(static_cast<std::size_t>(levels) + 1, 0.0);
  double factorial = 1.0;
  for (int k = 1; k <= levels; ++k) {
    factorial *= k;
    const QuadratureSpec adapted = adapted_for_arity(space, region, spec, k);
    const TupleRule rule(space, region, adapted, k);
    const auto level = [&](std::size_t begin, std::size_t end) {
      std::vector<Point> w;
      double acc = 0.0;
      for (std::size_t i = begin; i < end; ++i) {
        const double weight = rule.node(i, w);
        const double factor = escape_factor(potential, y, w);
        if (factor == 0.0) continue;
        const double bw =
            potential.partial_pinned(y, space.ordering_value(w)).boltzmann(w);
        if (bw == 0.0) continue;
        acc += weight * factor * bw;
      }
      return std::complex<double>(acc, 0.0);
    };
    coeffs[static_cast<std::size_t>(k)] =
        chunked_sum(rule.count(), level).real() / factorial;
  }
  return coeffs;
}

double contraction_G(const MetricMeasureSpace& space, const Region& region,
                     const Potential& potential, const Point& y, int levels, double z,
                     const QuadratureSpec& spec) {
  if (!(z >= 0.0)) throw DomainError("contraction argument must be >= 0");
  const double ball = space.ball_volume(potential.range());
  if (ball > 0.0 && z > 1.0 / ball + 1e-12)
    throw DomainError("contraction argument above 1/B_R");
  const auto coeffs = contraction_coefficients(space, region, potential, y, levels, spec);
  double value = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) value = (value + coeffs[k]) * z;
  return value;
}

IdentityReport ftc_check(const std::vector<PathSample>& path) {
  if (path.size() < 2) throw DomainError("path needs at least two samples");
  std::vector<std::complex<double>> ratio(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0 && !(path[i].s > path[i - 1].s))
      throw DomainError("path samples must be strictly increasing in s");
    if (std::abs(path[i].value) == 0.0) throw DomainError("path touches zero");
    ratio[i] = path[i].derivative / path[i].value;
  }

  std::complex<double> integral = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    integral += 0.5 * (path[i + 1].s - path[i].s) * (ratio[i] + ratio[i + 1]);

  IdentityReport report;
  report.lhs = path.back().value / path.front().value;
  report.rhs = std::exp(integral);
  report.residual = std::abs(report.lhs - report.rhs);
  report.truncation = static_cast<int>(path.size());

  // Trapezoid error via the largest second difference of f'/f.
  double curvature = 0.0;
  double max_step = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    max_step = std::max(max_step, path[i + 1].s - path[i].s);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const double h0 = path[i].s - path[i - 1].s;
    const double h1 = path[i + 1].s - path[i].s;
    const std::complex<double> second =
        2.0 * ((ratio[i + 1] - ratio[i]) / h1 - (ratio[i] - ratio[i - 1]) / h0) /
        (h0 + h1);
    curvature = std::max(curvature, std::abs(second));
  }
  const double span = path.back().s - path.front().s;
  report.tolerance_budget =
      std::abs(report.rhs) * (span * max_step * max_step * curvature / 12.0) + 1e-9;
  return report;
}

}  // namespace repgas
