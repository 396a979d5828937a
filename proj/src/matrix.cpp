#include "sgd/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace sgd {

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SquareMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw InvalidArgument("matrix rows must have equal length n");
    int j = 0;
    for (double x : r) (*this)(i, j++) = x;
    ++i;
  }
}

SquareMatrix SquareMatrix::identity(int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<double>& d) {
  SquareMatrix m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

std::vector<double> SquareMatrix::row(int i) const {
  const auto begin = data_.begin() + static_cast<std::ptrdiff_t>(index(i, 0));
  return {begin, begin + n_};
}

bool SquareMatrix::is_integral() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](double x) { return std::isfinite(x) && x == std::nearbyint(x); });
}

bool SquareMatrix::is_symmetric(double tol) const noexcept {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

double SquareMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double SquareMatrix::trace() const noexcept {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) throw InvalidArgument("matrix orders differ");
  SquareMatrix out(a.n_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
  return out;
}

}  // namespace sgd
