#include "sgd/export.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace sgd {

std::string format_number(double x, int significant) {
  if (x == 0.0) return "0";  // folds -0
  if (std::isfinite(x) && x == std::nearbyint(x) && std::abs(x) < 1e15)
    return std::to_string(static_cast<long long>(x));
  char buf[64];
  if (significant > 0) {
    std::snprintf(buf, sizeof buf, "%.*g", significant, x);
    std::string s(buf);
    return s == "-0" ? "0" : s;
  }
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

namespace {

nlohmann::json number_json(double x, int significant = 0) {
  if (x == 0.0) return 0;
  if (std::isfinite(x) && x == std::nearbyint(x) && std::abs(x) < 1e15)
    return static_cast<long long>(x);
  if (significant > 0) {
    const double rounded = std::stod(format_number(x, significant));
    if (rounded == std::nearbyint(rounded)) return static_cast<long long>(rounded);
    return rounded;
  }
  return x;
}

template <class Get>
std::string csv_rows(int rows, int cols, Get get) {
  std::string out;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) out += ',';
      out += format_number(get(i, j));
    }
    out += '\n';
  }
  return out;
}

template <class Get>
nlohmann::json json_rows(int rows, int cols, Get get) {
  auto out = nlohmann::json::array();
  for (int i = 0; i < rows; ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < cols; ++j) row.push_back(number_json(get(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

std::string join(const std::vector<double>& xs, int significant, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += format_number(xs[i], significant);
  }
  return out;
}

std::vector<int> one_based(const std::vector<int>& vs) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(v + 1);
  return out;
}

}  // namespace

std::string to_csv(const SquareMatrix& m) {
  return csv_rows(m.order(), m.order(), [&](int i, int j) { return m(i, j); });
}

std::string to_markdown(const SquareMatrix& m) {
  std::string out = "|";
  for (int j = 0; j < m.order(); ++j) out += " " + std::to_string(j + 1) + " |";
  out += "\n|";
  for (int j = 0; j < m.order(); ++j) out += "---|";
  out += '\n';
  for (int i = 0; i < m.order(); ++i) {
    out += '|';
    for (int j = 0; j < m.order(); ++j) out += " " + format_number(m(i, j)) + " |";
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const SquareMatrix& m, const std::string& kind) {
  return {{"n", m.order()},
          {"kind", kind},
          {"rows", json_rows(m.order(), m.order(), [&](int i, int j) { return m(i, j); })}};
}

std::string to_csv(const DistanceTable& t) {
  return csv_rows(t.order(), t.order(), [&](int i, int j) { return double(t.at(i, j).d); });
}

nlohmann::json to_json(const DistanceTable& t) {
  return {{"n", t.order()},
          {"kind", "distance"},
          {"rows", json_rows(t.order(), t.order(), [&](int i, int j) { return double(t.at(i, j).d); })}};
}

std::string to_csv(const IncidenceMatrix& h) {
  return csv_rows(h.rows(), h.cols(), [&](int i, int j) { return h(i, j); });
}

nlohmann::json to_json(const IncidenceMatrix& h) {
  auto arcs = nlohmann::json::array();
  for (auto [t, hd] : h.orientation().arcs) arcs.push_back({t + 1, hd + 1});
  return {{"n", h.rows()},
          {"m", h.cols()},
          {"kind", "incidence"},
          {"rows", json_rows(h.rows(), h.cols(), [&](int i, int j) { return h(i, j); })},
          {"orientation", std::move(arcs)}};
}

std::string to_csv(const Spectrum& s) { return join(s.eigenvalues, kEigenvalueDigits, ",") + "\n"; }

nlohmann::json to_json(const Spectrum& s) {
  auto eig = nlohmann::json::array();
  for (double x : s.eigenvalues) eig.push_back(number_json(x, kEigenvalueDigits));
  auto groups = nlohmann::json::array();
  for (const auto& g : s.groups)
    groups.push_back({{"value", number_json(g.value, kEigenvalueDigits)}, {"multiplicity", g.multiplicity}});
  return {{"eigenvalues", std::move(eig)}, {"groups", std::move(groups)}};
}

nlohmann::json to_json(const BalanceReport& r) {
  nlohmann::json j{{"balanced", r.balanced}, {"method", to_string(r.method)}};
  j["determinant"] = r.determinant ? nlohmann::json(r.determinant->str()) : nlohmann::json(nullptr);
  nlohmann::json cert = nlohmann::json::object();
  if (const auto* z = std::get_if<SwitchingFunction>(&r.certificate)) {
    auto zeta = nlohmann::json::array();
    for (Sign s : z->zeta) zeta.push_back(to_int(s));
    cert = {{"type", "switching"}, {"zeta", std::move(zeta)}};
  } else if (const auto* c = std::get_if<NegativeCycle>(&r.certificate)) {
    cert = {{"type", "negative-cycle"}, {"cycle", one_based(c->cycle)}};
  } else if (const auto* p = std::get_if<std::pair<int, int>>(&r.certificate)) {
    cert = {{"type", "incompatible-pair"}, {"pair", {p->first + 1, p->second + 1}}};
  }
  j["certificate"] = std::move(cert);
  return j;
}

std::string formula_report_markdown(const std::vector<FormulaComparisonRow>& rows) {
  std::ostringstream out;
  out << "| k | n | numeric spectrum | formula spectrum | max deviation | simple value present |\n"
      << "|---|---|---|---|---|---|\n";
  for (const auto& r : rows)
    out << "| " << r.k << " | " << r.n << " | " << join(r.numeric.eigenvalues, 8, ", ") << " | "
        << join(r.formula.eigenvalues, 8, ", ") << " | " << format_number(r.max_deviation, 6)
        << " | " << (r.simple_value_present ? "yes" : "no") << " |\n";
  return out.str();
}

std::string formula_report_csv(const std::vector<FormulaComparisonRow>& rows) {
  std::ostringstream out;
  out << "k,n,numeric,formula,max_deviation,simple_value_present\n";
  for (const auto& r : rows)
    out << r.k << ',' << r.n << ",\"" << join(r.numeric.eigenvalues, kEigenvalueDigits, ";")
        << "\",\"" << join(r.formula.eigenvalues, kEigenvalueDigits, ";") << "\","
        << format_number(r.max_deviation, kEigenvalueDigits) << ','
        << (r.simple_value_present ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace sgd
