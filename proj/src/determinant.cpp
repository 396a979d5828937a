#include <cmath>
#include <limits>

#include "sgd/balance.hpp"

namespace sgd {

BigInt det_exact(const SquareMatrix& m) {
  const int n = m.order();
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = m(i, j);
      if (!std::isfinite(x) || x != std::nearbyint(x))
        throw InvalidArgument("det_exact: entry (" + std::to_string(i + 1) + ", " +
                              std::to_string(j + 1) + ") is not an integer");
      // Integers up to 2^63 pass through long long; beyond that we go via the
      // exact binary expansion of the double.
      if (std::abs(x) < 9.0e18) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<long long>(x);
      } else {
        int exp = 0;
        const double mant = std::frexp(x, &exp);
        BigInt v = static_cast<long long>(std::ldexp(mant, 53));
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v << (exp - 53);
      }
    }
  if (n == 0) return 1;

  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

FloatDeterminant det_float(const SquareMatrix& m) {
  const int n = m.order();
  std::vector<double> a = m.data();
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };
  const double threshold = n * std::numeric_limits<double>::epsilon() * m.max_abs();
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(at(i, k)) > std::abs(at(p, k))) p = i;
    if (std::abs(at(p, k)) <= threshold) return {0.0, true};
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      det = -det;
    }
    det *= at(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = at(i, k) / at(k, k);
      for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return {det, false};
}

}  // namespace sgd
