#include "repgas/zeros.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "repgas/errors.hpp"

namespace repgas {

Polynomial independence_polynomial(const Hypergraph& graph) {
  const auto counts = independent_set_counts(graph);
  std::vector<std::complex<double>> coeffs(counts.size());
  for (std::size_t l = 0; l < counts.size(); ++l)
    coeffs[l] = static_cast<double>(counts[l]);
  return Polynomial(std::move(coeffs));
}

std::complex<double> closed_form_partition(const Hypergraph& graph,
                                           std::complex<double> lambda) {
  const auto counts = independent_set_counts(graph);
  const std::complex<double> w = std::exp(lambda) - 1.0;
  std::complex<double> sum = 0.0;
  std::complex<double> power = 1.0;
  for (std::size_t l = 0; l < counts.size(); ++l) {
    sum += static_cast<double>(counts[l]) * power;
    power *= w;
  }
  return sum;
}

ZeroReport activity_zero_report(const Hypergraph& graph, int branch_window) {
  if (branch_window < 0) throw DomainError("branch window must be >= 0");
  ZeroReport report;
  report.branch_window = branch_window;
  const int max_degree = graph.max_degree();
  report.bound = 1.0 / (std::numbers::e * (max_degree + 1));
  report.polynomial_roots = independence_polynomial(graph).roots();

  report.lambda_min_modulus = std::numeric_limits<double>::infinity();
  for (const auto& z : report.polynomial_roots) {
    const std::complex<double> shifted = 1.0 + z;
    // a root at z = -1 is hit by no finite activity (e^lambda - 1 = -1 needs
    // lambda at -inf)
    if (std::abs(shifted) <= 1e-12) continue;
    const double log_mod = std::log(std::abs(shifted));
    const double arg = std::arg(shifted);
    for (int m = -branch_window; m <= branch_window; ++m) {
      const std::complex<double> lambda(log_mod,
                                        arg + 2.0 * std::numbers::pi * m);
      report.lambda_zeros.push_back(lambda);
      report.lambda_min_modulus =
          std::min(report.lambda_min_modulus, std::abs(lambda));
    }
  }

  report.extremal_ratio = std::numeric_limits<double>::quiet_NaN();
  if (max_degree >= 2 && !report.lambda_zeros.empty())
    report.extremal_ratio =
        report.lambda_min_modulus / (std::log(static_cast<double>(max_degree)) / max_degree);
  report.pass = report.lambda_min_modulus >= report.bound;
  return report;
}

}  // namespace repgas
