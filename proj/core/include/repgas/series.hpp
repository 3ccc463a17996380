#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "repgas/potential.hpp"
#include "repgas/quadrature.hpp"
#include "repgas/space.hpp"

namespace repgas {

// Truncated grand-canonical partition sum
//
//   Z = sum_{k=0}^{K} lambda^k / k! * Integral_{Lambda^k} exp(-H)
//
// together with the analytic remainder of the dominating exponential series.
// The tail bound is rigorous; the quadrature error is not, and is reported
// separately as an empirical two-resolution estimate when requested.
struct SeriesResult {
  std::complex<double> value;
  double tail_bound = 0.0;
  int truncation = 0;
  QuadratureSpec quadrature;
  std::optional<double> quad_error;
};

// Remainder sum_{k>K} mu^k / k! for mu >= 0, summed term by term (every term
// is positive, so no cancellation).
double series_tail(double mu, int truncation);

// Smallest K whose remainder falls below `tolerance`.
int default_truncation(double mu, double tolerance = 1e-8);

// The activity-independent integral table S_k = Quad(Integral_{Lambda^k}
// exp(-H)) for k = 0..K, with S_0 = 1.  Each arity gets the largest per-axis
// resolution whose node count fits the budget.  When no arity up to k can
// carry a nonzero kernel the integrand is the constant 1 and S_k is written
// as volume^k directly.
std::vector<double> interaction_integrals(const MetricMeasureSpace& space,
                                          const Region& region,
                                          const Potential& potential, int truncation,
                                          const QuadratureSpec& spec);

// Assembles Z from a precomputed table; `volume` is the region measure used
// for the tail bound.  This is the cheap path when many activities share one
// table.
SeriesResult partition_from_integrals(const std::vector<double>& integrals,
                                      std::complex<double> lambda, double volume,
                                      const QuadratureSpec& spec);

SeriesResult partition_function(const MetricMeasureSpace& space, const Region& region,
                                const Potential& potential, std::complex<double> lambda,
                                int truncation, const QuadratureSpec& spec,
                                bool estimate_quad_error = false);

// kappa(x) = lambda^k * Z(lambda | x) / Z(lambda), the pinned-to-unpinned
// ratio.  Throws NearZeroError when the denominator cannot be certified
// further than `delta_floor` from zero (|Z| - tail must exceed it).
std::complex<double> modified_density(const MetricMeasureSpace& space,
                                      const Region& region, const Potential& potential,
                                      std::complex<double> lambda,
                                      std::span<const Point> x, int truncation,
                                      const QuadratureSpec& spec,
                                      double delta_floor = 1e-6);

// Product of one-point densities kappa(x_j | x_1..x_{j-1}); telescopes to
// modified_density(x) up to quadrature.
std::complex<double> telescoped_density(const MetricMeasureSpace& space,
                                        const Region& region, const Potential& potential,
                                        std::complex<double> lambda,
                                        std::span<const Point> x, int truncation,
                                        const QuadratureSpec& spec,
                                        double delta_floor = 1e-6);

// rho(x) = exp(-H(x)) * kappa(x); exactly 0 when H(x) is infinite.
std::complex<double> classical_density(const MetricMeasureSpace& space,
                                       const Region& region, const Potential& potential,
                                       std::complex<double> lambda,
                                       std::span<const Point> x, int truncation,
                                       const QuadratureSpec& spec,
                                       double delta_floor = 1e-6);

}  // namespace repgas
