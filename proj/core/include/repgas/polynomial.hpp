#pragma once

#include <complex>
#include <vector>

namespace repgas {

// Dense univariate polynomial over the complex numbers, coefficients stored
// lowest degree first.  Trailing zero coefficients are trimmed on
// construction; the zero polynomial is rejected.
class Polynomial {
 public:
  explicit Polynomial(std::vector<std::complex<double>> coefficients);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<std::complex<double>>& coefficients() const {
    return coefficients_;
  }

  // Horner evaluation.
  std::complex<double> operator()(std::complex<double> z) const;

  // All complex roots with multiplicity, via companion-matrix eigenvalues
  // plus one Newton polish per root.  Degree must be in [1, 64].  Every root
  // is validated against |p(root)| <= 1e-8 * max|coefficient|; violation
  // raises NumericError.
  std::vector<std::complex<double>> roots() const;

 private:
  std::vector<std::complex<double>> coefficients_;
};

}  // namespace repgas
