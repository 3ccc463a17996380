#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repgas {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or point/region outside the space it belongs to.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured cap (quadrature budget,
// tuple arity, enumeration size, ...).  `required` carries the size
// that would have been needed, when known.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what, std::size_t required_size = 0)
      : Error(what), required(required_size) {}
  std::size_t required;
};

// Iterative numerics failed to converge to the promised tolerance.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A density ratio was requested while the partition-function estimate
// could not be certified away from zero.
class NearZeroError : public Error {
 public:
  NearZeroError(const std::string& what, double magnitude_, double tail_, double floor_)
      : Error(what), magnitude(magnitude_), tail(tail_), floor(floor_) {}
  double magnitude;  // |Z| estimate
  double tail;       // truncation tail bound
  double floor;      // required margin
};

// Malformed configuration or input file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace repgas
