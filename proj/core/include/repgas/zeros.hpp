#pragma once

#include <complex>
#include <vector>

#include "repgas/hypergraph.hpp"
#include "repgas/polynomial.hpp"

namespace repgas {

// Z_G(z) = sum_l |I_l| z^l over independent sets, exact integer counts
// converted to complex coefficients.
Polynomial independence_polynomial(const Hypergraph& graph);

// 1 + sum_l |I_l| (e^lambda - 1)^l by direct powers; deliberately not routed
// through Polynomial's Horner evaluation so the two can cross-check.
std::complex<double> closed_form_partition(const Hypergraph& graph,
                                           std::complex<double> lambda);

// Zeros of the continuum partition function in the activity plane, obtained
// from the roots of Z_G via lambda = log(1 + z) over a window of logarithm
// branches, held against the zero-free-disk radius 1/(e (max degree + 1)).
struct ZeroReport {
  std::vector<std::complex<double>> polynomial_roots;  // roots of Z_G in z
  std::vector<std::complex<double>> lambda_zeros;      // all branch values kept
  double lambda_min_modulus = 0.0;  // +inf when every root sits at z = -1
  double bound = 0.0;               // 1 / (e (max degree + 1))
  int branch_window = 0;            // branches m in [-window, window]
  // lambda_min_modulus / (log(max degree)/max degree); NaN below degree 2.
  // Tracks how far the instance sits from the known near-optimal scaling of
  // zero locations; reported, never asserted.
  double extremal_ratio = 0.0;
  bool pass = false;  // lambda_min_modulus >= bound

  bool vacuous() const { return lambda_zeros.empty(); }
};

ZeroReport activity_zero_report(const Hypergraph& graph, int branch_window = 3);

}  // namespace repgas
