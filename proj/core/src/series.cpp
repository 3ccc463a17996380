#include "repgas/series.hpp"

#include <cmath>
#include <limits>

#include "repgas/errors.hpp"
#include "repgas/threading.hpp"

namespace repgas {

double series_tail(double mu, int truncation) {
  if (mu < 0.0 || std::isnan(mu)) throw DomainError("tail argument must be >= 0");
  if (truncation < 0) throw DomainError("truncation must be >= 0");
  double term = 1.0;
  for (int k = 1; k <= truncation + 1; ++k) term *= mu / k;
  double sum = 0.0;
  for (int k = truncation + 1; term > 0.0; ++k) {
    sum += term;
    if (term < sum * 1e-18) break;
    term *= mu / (k + 1);
  }
  return sum;
}

int default_truncation(double mu, double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  for (int k = 0; k <= 1000; ++k)
    if (series_tail(mu, k) < tolerance) return k;
  throw NumericError("activity-volume product too large for a practical truncation");
}

std::vector<double> interaction_integrals(const MetricMeasureSpace& space,
                                          const Region& region,
                                          const Potential& potential, int truncation,
                                          const QuadratureSpec& spec) {
  if (truncation < 0) throw DomainError("truncation must be >= 0");
  std::vector<double> table(static_cast<std::size_t>(truncation) + 1);
  table[0] = 1.0;
  const double volume = region.volume();
  bool any_active = false;
  double constant_value = 1.0;
  for (int k = 1; k <= truncation; ++k) {
    any_active = any_active || potential.arity_active(k);
    constant_value *= volume;
    if (!any_active) {
      // every subset of a k-tuple has kernel 0, so the integrand is 1
      table[static_cast<std::size_t>(k)] = constant_value;
      continue;
    }
    const QuadratureSpec adapted = adapted_for_arity(space, region, spec, k);
    const TupleRule rule(space, region, adapted, k);
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

SeriesResult partition_from_integrals(const std::vector<double>& integrals,
                                      std::complex<double> lambda, double volume,
                                      const QuadratureSpec& spec) {
  if (integrals.empty() || integrals[0] != 1.0)
    throw DomainError("integral table must start with S_0 = 1");
  SeriesResult out;
  out.truncation = static_cast<int>(integrals.size()) - 1;
  out.quadrature = spec;
  std::complex<double> value = 1.0;
  std::complex<double> factor = 1.0;  // lambda^k / k!
  for (int k = 1; k <= out.truncation; ++k) {
    factor *= lambda / static_cast<double>(k);
    value += factor * integrals[static_cast<std::size_t>(k)];
  }
  out.value = value;
  out.tail_bound = series_tail(std::abs(lambda) * volume, out.truncation);
  return out;
}

SeriesResult partition_function(const MetricMeasureSpace& space, const Region& region,
                                const Potential& potential, std::complex<double> lambda,
                                int truncation, const QuadratureSpec& spec,
                                bool estimate_quad_error) {
  const auto table = interaction_integrals(space, region, potential, truncation, spec);
  SeriesResult out = partition_from_integrals(table, lambda, region.volume(), spec);
  if (estimate_quad_error) {
    QuadratureSpec half = spec;
    half.resolution = std::max(1, spec.resolution / 2);
    const auto coarse = interaction_integrals(space, region, potential, truncation, half);
    const SeriesResult ref = partition_from_integrals(coarse, lambda, region.volume(), half);
    out.quad_error = std::abs(out.value - ref.value);
  }
  return out;
}

namespace {

// Shared ratio core: lambda^{|x|} * Z(pinned) / Z, with the zero-freeness
// guard on the denominator.
std::complex<double> density_ratio(const MetricMeasureSpace& space, const Region& region,
                                   const Potential& base, const Potential& pinned,
                                   std::complex<double> lambda, std::size_t order,
                                   int truncation, const QuadratureSpec& spec,
                                   double delta_floor) {
  const SeriesResult denom =
      partition_function(space, region, base, lambda, truncation, spec);
  if (!(std::abs(denom.value) - denom.tail_bound > delta_floor))
    throw NearZeroError("partition function too close to zero", std::abs(denom.value),
                        denom.tail_bound, delta_floor);
  const SeriesResult num =
      partition_function(space, region, pinned, lambda, truncation, spec);
  std::complex<double> scale = 1.0;
  for (std::size_t j = 0; j < order; ++j) scale *= lambda;
  return scale * num.value / denom.value;
}

}  // namespace

std::complex<double> modified_density(const MetricMeasureSpace& space,
                                      const Region& region, const Potential& potential,
                                      std::complex<double> lambda,
                                      std::span<const Point> x, int truncation,
                                      const QuadratureSpec& spec, double delta_floor) {
  return density_ratio(space, region, potential, potential.pinned(x), lambda, x.size(),
                       truncation, spec, delta_floor);
}

std::complex<double> telescoped_density(const MetricMeasureSpace& space,
                                        const Region& region, const Potential& potential,
                                        std::complex<double> lambda,
                                        std::span<const Point> x, int truncation,
                                        const QuadratureSpec& spec, double delta_floor) {
  std::complex<double> product = 1.0;
  Potential prefix = potential;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Potential next = prefix.pinned(x[j]);
    product *= density_ratio(space, region, prefix, next, lambda, 1, truncation, spec,
                             delta_floor);
    prefix = next;
  }
  return product;
}

std::complex<double> classical_density(const MetricMeasureSpace& space,
                                       const Region& region, const Potential& potential,
                                       std::complex<double> lambda,
                                       std::span<const Point> x, int truncation,
                                       const QuadratureSpec& spec, double delta_floor) {
  const double weight = potential.boltzmann(x);
  if (weight == 0.0) return 0.0;
  return weight *
         modified_density(space, region, potential, lambda, x, truncation, spec,
                          delta_floor);
}

}  // namespace repgas
