#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace repgas {

// Stirling number of the second kind S(m, l) via the recurrence
// S(m, l) = l * S(m-1, l) + S(m-1, l-1), exact for 0 <= l <= m <= 64.
boost::multiprecision::cpp_int stirling2(int m, int l);

// Residual of the truncated identity
//
//   sum_{m=l}^{terms} x^m/m! * S(m, l)  =  (e^x - 1)^l / l!
//
// evaluated in double precision; `terms` capped at 64.
double stirling_sum_check(double x, int l, int terms);

}  // namespace repgas
