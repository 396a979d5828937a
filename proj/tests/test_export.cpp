#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sgd/export.hpp"
#include "sgd/matrices.hpp"

namespace sgd {
namespace {

using fixtures::c3_allneg;
using fixtures::c4_oneneg;

TEST(FormatNumber, Examples) {
  EXPECT_EQ(format_number(4.0), "4");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(-2.0), "-2");
  EXPECT_EQ(format_number(2.5), "2.5");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(3.14159265358979, 4), "3.142");
  EXPECT_EQ(format_number(1.0000000000001, kEigenvalueDigits), "1");
}

TEST(MatrixExport, CsvJsonMarkdown) {
  const SquareMatrix l = distance_laplacian(c4_oneneg(), DistanceKind::max);
  const std::string csv = to_csv(l);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "4,-1,-2,1");

  const auto j = to_json(l, "lmax");
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["kind"], "lmax");
  EXPECT_EQ(j["rows"][0], nlohmann::json({4, -1, -2, 1}));

  const std::string md = to_markdown(SquareMatrix{{1, 2}, {3, 4}});
  EXPECT_EQ(md, "| 1 | 2 |\n|---|---|\n| 1 | 2 |\n| 3 | 4 |\n");
}

TEST(MatrixExport, CsvAndJsonCarrySameNumbers) {
  const SquareMatrix m{{0.5, -1.25}, {-1.25, 3}};
  const auto j = to_json(m, "x");
  std::string rebuilt;
  for (const auto& row : j["rows"]) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) rebuilt += ',';
      rebuilt += format_number(row[c].get<double>());
    }
    rebuilt += '\n';
  }
  EXPECT_EQ(rebuilt, to_csv(m));
}

TEST(DistanceExport, HopDistances) {
  EXPECT_EQ(to_csv(distance_table(c4_oneneg())), "0,1,2,1\n1,0,1,2\n2,1,0,1\n1,2,1,0\n");
  EXPECT_EQ(to_json(distance_table(c3_allneg()))["kind"], "distance");
}

TEST(IncidenceExport, OneBasedOrientation) {
  const WeightedSignedGraph g(c3_allneg());
  const auto j = to_json(incidence_matrix(g, Orientation::canonical(g.base())));
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["orientation"][0], nlohmann::json({1, 2}));
}

TEST(SpectrumExport, RoundsToTwelveDigits) {
  const Spectrum s = sym_eig(distance_laplacian(c3_allneg(), DistanceKind::pm));
  EXPECT_EQ(to_csv(s), "1,1,4\n");
  const auto j = to_json(s);
  EXPECT_EQ(j["eigenvalues"], nlohmann::json({1, 1, 4}));
  EXPECT_EQ(j["groups"][0]["multiplicity"], 2);
  EXPECT_EQ(j["groups"][1]["value"], 4);
}

TEST(BalanceExport, Certificates) {
  const auto c3 = to_json(is_balanced_switching(c3_allneg()));
  EXPECT_EQ(c3["balanced"], false);
  EXPECT_EQ(c3["method"], "switching");
  EXPECT_TRUE(c3["determinant"].is_null());
  EXPECT_EQ(c3["certificate"]["type"], "negative-cycle");

  const auto det = to_json(is_balanced_det(c4_oneneg(), DetKind::max));
  EXPECT_EQ(det["determinant"], "84");
  EXPECT_EQ(det["method"], "det-max");

  const auto pm = to_json(is_balanced_det(c4_oneneg(), DetKind::pm));
  EXPECT_EQ(pm["certificate"]["type"], "incompatible-pair");
  EXPECT_EQ(pm["certificate"]["pair"], nlohmann::json({1, 3}));

  const auto ok = to_json(is_balanced_switching(fixtures::p3('-', '+')));
  EXPECT_EQ(ok["certificate"]["type"], "switching");
  EXPECT_EQ(ok["certificate"]["zeta"].size(), 3u);
}

TEST(FormulaReport, HasOneRowPerK) {
  const auto rows = formula_vs_eigensolver_report({1, 2, 3});
  const std::string md = formula_report_markdown(rows);
  const std::string csv = formula_report_csv(rows);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_NE(md.find("| 3 |"), std::string::npos);
}

}  // namespace
}  // namespace sgd
