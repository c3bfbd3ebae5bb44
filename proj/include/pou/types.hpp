#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace pou {

/// Sentinel for "distance to an empty set": a member that covers the whole
/// space has no complement, so its distance function is infinite everywhere.
constexpr double kInfinite = std::numeric_limits<double>::infinity();

/// Dense row-major matrix of doubles. Just enough surface for value tables
/// (partition values, distance profiles); not a linear-algebra type.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(data_.data() + r * cols_, cols_);
    }
    std::span<double> row(std::size_t r) {
        return std::span<double>(data_.data() + r * cols_, cols_);
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

/// Empirical Lipschitz constant together with an attaining pair of points.
struct LipschitzEstimate {
    double constant = 0.0;
    int x = -1;
    int y = -1;
};

}  // namespace pou
