#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgd/balance.hpp"
#include "sgd/distance.hpp"
#include "sgd/matrix.hpp"
#include "sgd/spectra.hpp"

namespace sgd {

/// Integers print without a fractional part; other values use the shortest
/// round-trip form, or `significant` digits when that is positive.
std::string format_number(double x, int significant = 0);

/// Significant digits used when printing eigenvalues.
inline constexpr int kEigenvalueDigits = 12;

std::string to_csv(const SquareMatrix& m);
std::string to_markdown(const SquareMatrix& m);
nlohmann::json to_json(const SquareMatrix& m, const std::string& kind);

/// Unsigned hop distances.
std::string to_csv(const DistanceTable& t);
nlohmann::json to_json(const DistanceTable& t);

std::string to_csv(const IncidenceMatrix& h);
/// Includes the orientation as 1-based [tail, head] pairs.
nlohmann::json to_json(const IncidenceMatrix& h);

std::string to_csv(const Spectrum& s);
nlohmann::json to_json(const Spectrum& s);

nlohmann::json to_json(const BalanceReport& r);

std::string formula_report_markdown(const std::vector<FormulaComparisonRow>& rows);
std::string formula_report_csv(const std::vector<FormulaComparisonRow>& rows);

}  // namespace sgd
