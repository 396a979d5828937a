#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sgd/core.hpp"

namespace sgd {

/// Dense row-major n x n matrix of doubles.
///
/// Integer-valued matrices (distance matrices, Laplacians of integer-weighted
/// graphs) are stored exactly; is_integral() reports that case and gates the
/// exact determinant.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}
  SquareMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SquareMatrix identity(int n);
  static SquareMatrix diagonal(const std::vector<double>& d);

  int order() const noexcept { return n_; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  const std::vector<double>& data() const noexcept { return data_; }
  std::vector<double> row(int i) const;

  bool is_integral() const noexcept;
  bool is_symmetric(double tol = 0.0) const noexcept;
  double max_abs() const noexcept;
  double trace() const noexcept;

  friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<double> data_;
};

/// n x m oriented weighted incidence matrix together with its orientation.
class IncidenceMatrix {
 public:
  IncidenceMatrix(int rows, int cols, Orientation orientation)
      : rows_(rows), cols_(cols), orientation_(std::move(orientation)),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  const Orientation& orientation() const noexcept { return orientation_; }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_;
  int cols_;
  Orientation orientation_;
  std::vector<double> data_;
};

}  // namespace sgd
