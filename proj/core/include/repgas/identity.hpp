#pragma once

#include <complex>
#include <vector>

#include "repgas/potential.hpp"
#include "repgas/quadrature.hpp"
#include "repgas/space.hpp"

namespace repgas {

// Two evaluations of one identity, their gap, and a tolerance assembled from
// analytic series tails plus empirical two-resolution quadrature estimates.
// The tails are rigorous; the quadrature part is an estimate, so `pass` is a
// strong sanity signal, not a proof.
struct IdentityReport {
  std::complex<double> lhs{};
  std::complex<double> rhs{};
  double residual = 0.0;
  double tolerance_budget = 0.0;
  int truncation = 0;

  bool pass() const { return residual <= tolerance_budget; }
};

// Recursive density identity.  Compares
//
//   lhs = kappa(y)        (direct pinned-to-unpinned ratio)
//   rhs = lambda * exp(-sum_{k=1}^{k_levels} (1/k!) *
//             Integral (1 - e^{-phi(y,w)}) e^{-H(w | y_before_w)}
//                      kappa(w | y_before_w) d w^k)
//
// where phi(y,w) is the bare (k+1)-point kernel, the conditioning decorates
// the potential with a partial pin of y at threshold D(w), and the inner
// densities are telescoped products of pinned one-point ratios.  Each
// k-level uses the largest per-axis resolution fitting the budget; the whole
// computation is repeated at half resolution for the error estimate.
// `series_truncation` overrides the truncation of every partition sum
// involved (-1 picks the smallest order with analytic tail below 1e-8).
IdentityReport integral_identity_check(const MetricMeasureSpace& space,
                                       const Region& region, const Potential& potential,
                                       std::complex<double> lambda, const Point& y,
                                       int k_levels, const QuadratureSpec& spec,
                                       int series_truncation = -1,
                                       double delta_floor = 1e-6);

// Partial-pin partition identity at threshold t:
//
//   Z(lambda | y_before_t) = Z(lambda)
//       - sum_{k=1}^{k_levels} (lambda^k/k!) *
//         Integral 1{D(w) < t} (1 - e^{-phi(y,w)}) e^{-H(w | y_before_w)}
//                  Z(lambda | y_before_w; w) d w^k
//
// All partition sums truncate at k_levels total points (the nested one at
// k_levels - k) and share one fixed-resolution node grid, which makes the
// two sides agree to floating-point roundoff; at t = 0 they agree exactly.
IdentityReport partition_identity_check(const MetricMeasureSpace& space,
                                        const Region& region, const Potential& potential,
                                        std::complex<double> lambda, const Point& y,
                                        double threshold, int k_levels,
                                        const QuadratureSpec& spec);

// Density representation of the partition function: compares
//
//   exp(Integral_Lambda e^{-phi_x(x)} kappa_x(x) d x)  against  Z(lambda)
//
// where phi_x excludes the open metric ball around the ordering base with
// radius d(base, x), and kappa_x is the one-point density of that excluded
// potential.  Comparison happens on the Z scale; the complex logarithm is
// never taken.
IdentityReport log_partition_check(const MetricMeasureSpace& space, const Region& region,
                                   const Potential& potential,
                                   std::complex<double> lambda,
                                   const QuadratureSpec& spec,
                                   int series_truncation = -1,
                                   double delta_floor = 1e-6);

// Coefficients c_k of the contraction functional
//
//   G(z) = sum_{k=1}^{levels} c_k z^k,
//   c_k = (1/k!) Integral (1 - e^{-phi(y,w)}) e^{-H(w | y_before_w)} d w^k.
//
// Entry k of the returned vector is c_k; entry 0 is 0.
std::vector<double> contraction_coefficients(const MetricMeasureSpace& space,
                                             const Region& region,
                                             const Potential& potential, const Point& y,
                                             int levels, const QuadratureSpec& spec);

// G evaluated at real z in [0, 1/B_R] (B_R the measure of a range-R ball).
// For repulsive finite-range potentials the value stays <= 1 on that
// interval.
double contraction_G(const MetricMeasureSpace& space, const Region& region,
                     const Potential& potential, const Point& y, int levels, double z,
                     const QuadratureSpec& spec);

// One sample of a zero-free path s -> f(s) with its derivative.
struct PathSample {
  double s = 0.0;
  std::complex<double> value{};
  std::complex<double> derivative{};
};

// Logarithm-free fundamental theorem of calculus: compares f(end)/f(start)
// against exp of the trapezoidal integral of f'/f along the sampled path.
// Throws DomainError when the path touches zero.  The budget is a curvature
// estimate from second differences of f'/f; grid refinement is the caller's
// job.
IdentityReport ftc_check(const std::vector<PathSample>& path);

}  // namespace repgas
