#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace divpg {

/// Dense row-major matrix of doubles. Just storage plus indexing; all linear
/// algebra in this project is explicit loops at the call sites.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  std::span<double> row(int i) { return {data.data() + static_cast<std::size_t>(i) * cols, static_cast<std::size_t>(cols)}; }
  std::span<const double> row(int i) const { return {data.data() + static_cast<std::size_t>(i) * cols, static_cast<std::size_t>(cols)}; }

  std::size_t size() const { return data.size(); }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

}  // namespace divpg
