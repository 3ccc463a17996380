#include "repgas/stirling.hpp"

#include <cmath>
#include <vector>

#include "repgas/errors.hpp"

namespace repgas {

namespace {

using BigInt = boost::multiprecision::cpp_int;

constexpr int kMaxIndex = 64;

// Row m of the triangle, entries l = 0..m.
std::vector<BigInt> stirling_row(int m) {
  std::vector<BigInt> row{1};  // S(0, 0) = 1
  for (int i = 1; i <= m; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(i) + 1);
    next[0] = 0;
    for (int l = 1; l < i; ++l)
      next[static_cast<std::size_t>(l)] =
          l * row[static_cast<std::size_t>(l)] + row[static_cast<std::size_t>(l - 1)];
    next[static_cast<std::size_t>(i)] = 1;
    row = std::move(next);
  }
  return row;
}

}  // namespace

BigInt stirling2(int m, int l) {
  if (l < 0 || m < l || m > kMaxIndex)
    throw DomainError("stirling2 requires 0 <= l <= m <= 64");
  return stirling_row(m)[static_cast<std::size_t>(l)];
}

double stirling_sum_check(double x, int l, int terms) {
  if (l < 0 || terms < l || terms > kMaxIndex)
    throw DomainError("stirling_sum_check requires 0 <= l <= terms <= 64");
  double sum = 0.0;
  double power_over_factorial = 1.0;  // x^m / m!
  for (int m = 0; m <= terms; ++m) {
    if (m >= l)
      sum += power_over_factorial * stirling2(m, l).convert_to<double>();
    power_over_factorial *= x / (m + 1);
  }
  double l_factorial = 1.0;
  for (int i = 2; i <= l; ++i) l_factorial *= i;
  const double closed = std::pow(std::expm1(x), l) / l_factorial;
  return std::abs(sum - closed);
}

}  // namespace repgas
