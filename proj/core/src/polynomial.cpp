#include "repgas/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "repgas/errors.hpp"

namespace repgas {

Polynomial::Polynomial(std::vector<std::complex<double>> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0.0)
    coefficients_.pop_back();
  if (coefficients_.empty()) throw DomainError("the zero polynomial has no degree");
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = coefficients_.size(); i-- > 0;) acc = acc * z + coefficients_[i];
  return acc;
}

std::vector<std::complex<double>> Polynomial::roots() const {
  const int d = degree();
  if (d < 1) throw DomainError("root extraction needs degree >= 1");
  if (d > 64) throw DomainError("root extraction capped at degree 64");

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i)
    companion(i, d - 1) = -coefficients_[static_cast<std::size_t>(i)] /
                          coefficients_[static_cast<std::size_t>(d)];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw NumericError("companion eigenvalue iteration did not converge");

  double max_coeff = 0.0;
  for (const auto& c : coefficients_) max_coeff = std::max(max_coeff, std::abs(c));

  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::complex<double> z = solver.eigenvalues()(i);
    // single Newton step, kept only when it actually helps
    std::complex<double> derivative = 0.0;
    for (std::size_t j = coefficients_.size(); j-- > 1;)
      derivative = derivative * z + coefficients_[j] * static_cast<double>(j);
    if (std::abs(derivative) > 0.0) {
      const std::complex<double> polished = z - (*this)(z) / derivative;
      if (std::abs((*this)(polished)) < std::abs((*this)(z))) z = polished;
    }
    const double residual = std::abs((*this)(z));
    if (!(residual <= 1e-8 * max_coeff)) {
      std::ostringstream msg;
      msg << "root " << i << " at (" << z.real() << ", " << z.imag()
          << ") has residual " << residual << " above " << 1e-8 * max_coeff;
      throw NumericError(msg.str());
    }
    out.push_back(z);
  }
  return out;
}

}  // namespace repgas
