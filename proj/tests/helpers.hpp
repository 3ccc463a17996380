#pragma once

#include <random>
#include <string>
#include <vector>

#include "repgas/geometry.hpp"
#include "repgas/space.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(REPGAS_TEST_DATA_DIR) + "/" + name;
}

// Uniform points in a box; fixed seeds keep every run identical.
inline repgas::Point random_point(std::mt19937_64& rng, const repgas::Box& box) {
  repgas::Point p = box.lo;
  for (int i = 0; i < box.dim(); ++i) {
    std::uniform_real_distribution<double> uni(box.lo[i], box.hi[i]);
    p[i] = uni(rng);
  }
  return p;
}

inline std::vector<repgas::Point> random_tuple(std::mt19937_64& rng,
                                               const repgas::Box& box, int k) {
  std::vector<repgas::Point> t;
  t.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) t.push_back(random_point(rng, box));
  return t;
}

}  // namespace testutil
