#include "sgd/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "sgd/matrices.hpp"

namespace sgd {

Spectrum Spectrum::from_values(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  Spectrum s;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] <= tol) sum += values[j++];
    s.groups.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  s.eigenvalues = std::move(values);
  return s;
}

Spectrum sym_eig(const SquareMatrix& m) {
  const int n = m.order();
  if (!m.is_symmetric(1e-12 * std::max(1.0, m.max_abs())))
    throw InvalidArgument("sym_eig: matrix is not symmetric");

  std::vector<double> a = m.data();
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };
  double norm = 0.0;
  for (double x : a) norm += x * x;
  norm = std::sqrt(norm);
  const double threshold = 1e-12 * norm;

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > threshold; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Rotation annihilating (p, q); t is the smaller root of t^2 + 2θt - 1 = 0.
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
  }

  std::vector<double> diag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = at(i, i);
  return Spectrum::from_values(std::move(diag));
}

namespace {

double odd_cycle_simple_value(int k) {
  const double kk = k;
  const double sign_k = k % 2 == 0 ? 1.0 : -1.0;
  return kk * (kk + 1.0) - kk * sign_k - (1.0 - sign_k) / 2.0;
}

double sorted_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

}  // namespace

double spectral_distance(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.order() != b.order())
    throw InvalidArgument("cospectral: matrix orders " + std::to_string(a.order()) + " and " +
                          std::to_string(b.order()) + " differ");
  return sorted_gap(sym_eig(a).eigenvalues, sym_eig(b).eigenvalues);
}

bool cospectral(const SquareMatrix& a, const SquareMatrix& b, double tol) {
  return spectral_distance(a, b) <= tol;
}

TransmissionShiftReport transmission_regular_shift_check(const SignedGraph& g, DistanceKind kind) {
  const DistanceTable table = distance_table(g);
  const auto tr = transmission(table);
  TransmissionShiftReport report;
  if (tr.empty() || std::adjacent_find(tr.begin(), tr.end(), std::not_equal_to<>()) != tr.end())
    return report;
  report.is_transmission_regular = true;
  report.t = tr.front();
  report.laplacian = sym_eig(distance_laplacian(table, kind));
  std::vector<double> shifted;
  for (double lambda : sym_eig(distance_matrix(table, kind)).eigenvalues)
    shifted.push_back(static_cast<double>(report.t) - lambda);
  report.shifted = Spectrum::from_values(std::move(shifted));
  report.max_deviation = sorted_gap(report.laplacian.eigenvalues, report.shifted.eigenvalues);
  return report;
}

Spectrum odd_cycle_formula_spectrum(int k) {
  if (k < 1) throw InvalidArgument("odd_cycle_formula_spectrum: k must be at least 1");
  const int n = 2 * k + 1;
  const double kk = static_cast<double>(k);
  const double base = kk * (kk + 1.0);
  std::vector<double> values;
  values.push_back(odd_cycle_simple_value(k));
  for (int j = 0; j < k; ++j) {
    const double sign_j = j % 2 == 0 ? 1.0 : -1.0;
    const double odd = 2.0 * j + 1.0;
    const double s1 = std::sin(odd * std::numbers::pi / (2.0 * n));
    const double sk = std::sin(odd * kk * std::numbers::pi / (2.0 * n));
    const double v = base - kk * sign_j / s1 - (sk * sk) / (s1 * s1);
    values.push_back(v);
    values.push_back(v);
  }
  return Spectrum::from_values(std::move(values));
}

std::vector<FormulaComparisonRow> formula_vs_eigensolver_report(const std::vector<int>& ks) {
  std::vector<FormulaComparisonRow> rows;
  for (int k : ks) {
    const int n = 2 * k + 1;
    const SignedGraph cycle = generate(GraphKind::cycle, n, AllNegative{}, 0);
    Spectrum numeric = sym_eig(distance_laplacian(cycle, DistanceKind::pm));
    Spectrum formula = odd_cycle_formula_spectrum(k);
    const double simple = odd_cycle_simple_value(k);
    const bool present = std::any_of(numeric.eigenvalues.begin(), numeric.eigenvalues.end(),
                                     [&](double x) { return std::abs(x - simple) <= kMultiplicityTolerance; });
    const double dev = sorted_gap(numeric.eigenvalues, formula.eigenvalues);
    rows.push_back({k, n, std::move(numeric), std::move(formula), dev, present});
  }
  return rows;
}

}  // namespace sgd
