#pragma once

#include <vector>

#include "sgd/core.hpp"
#include "sgd/distance.hpp"
#include "sgd/matrix.hpp"

namespace sgd {

/// Eigenvalues closer than this are reported as one group.
inline constexpr double kMultiplicityTolerance = 1e-7;

struct EigenGroup {
  double value;
  int multiplicity;
};

/// Sorted eigenvalue multiset with tolerance-based multiplicity grouping.
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::vector<EigenGroup> groups;

  /// Sorts `values` and groups neighbours closer than `tol`.
  static Spectrum from_values(std::vector<double> values, double tol = kMultiplicityTolerance);
};

/// Cyclic Jacobi. Iterates until the off-diagonal Frobenius norm falls below
/// 1e-12·‖m‖_F. Throws InvalidArgument if m is not symmetric within 1e-12.
Spectrum sym_eig(const SquareMatrix& m);

/// Largest entrywise gap between the sorted spectra of a and b.
double spectral_distance(const SquareMatrix& a, const SquareMatrix& b);
bool cospectral(const SquareMatrix& a, const SquareMatrix& b, double tol);

struct TransmissionShiftReport {
  bool is_transmission_regular = false;
  long long t = 0;
  /// max |eig(L)_i - (t - eig(D))_i| over the sorted lists; 0 when not regular.
  double max_deviation = 0.0;
  Spectrum laplacian;
  Spectrum shifted;
};

/// Compares eig(L^kind) against {t - λ : λ ∈ eig(D^kind)} for a
/// t-transmission-regular graph.
TransmissionShiftReport transmission_regular_shift_check(const SignedGraph& g, DistanceKind kind);

/// The printed closed form for the L^± spectrum of the all-negative odd cycle
/// C_{2k+1}, evaluated term by term: one simple value and k doubled values.
Spectrum odd_cycle_formula_spectrum(int k);

struct FormulaComparisonRow {
  int k;
  int n;
  Spectrum numeric;
  Spectrum formula;
  double max_deviation;      // sorted entrywise
  bool simple_value_present;  // formula's simple value occurs in the numeric spectrum
};

/// Numeric L^±(C^-_{2k+1}) spectrum next to the closed form, for each k.
/// Reports deviations; never asserts agreement.
std::vector<FormulaComparisonRow> formula_vs_eigensolver_report(const std::vector<int>& ks);

}  // namespace sgd
