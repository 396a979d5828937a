#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "sgd/core.hpp"

namespace sgd::fixtures {

/// Edges given 1-based as (u, v, '+'|'-').
inline SignedGraph graph(int n, std::initializer_list<std::tuple<int, int, char>> edges) {
  std::vector<Edge> out;
  for (auto [u, v, s] : edges) out.push_back({u - 1, v - 1, s == '+' ? Sign::positive : Sign::negative});
  return SignedGraph(n, std::move(out));
}

inline WeightedSignedGraph weighted(int n, std::initializer_list<std::tuple<int, int, char, double>> edges) {
  std::vector<Edge> out;
  std::vector<double> w;
  for (auto [u, v, s, wt] : edges) {
    out.push_back({u - 1, v - 1, s == '+' ? Sign::positive : Sign::negative});
    w.push_back(wt);
  }
  return WeightedSignedGraph(SignedGraph(n, std::move(out)), std::move(w));
}

inline SignedGraph c3_allneg() { return graph(3, {{1, 2, '-'}, {2, 3, '-'}, {1, 3, '-'}}); }
/// C4 with signs {12:+, 23:+, 34:+, 41:-}.
inline SignedGraph c4_oneneg() { return graph(4, {{1, 2, '+'}, {2, 3, '+'}, {3, 4, '+'}, {1, 4, '-'}}); }
inline SignedGraph p3(char s12, char s23) { return graph(3, {{1, 2, s12}, {2, 3, s23}}); }
/// Negative triangle with weights 2, 3, 5 on 12, 23, 31.
inline WeightedSignedGraph weighted_triangle() {
  return weighted(3, {{1, 2, '-', 2}, {2, 3, '-', 3}, {3, 1, '-', 5}});
}

}  // namespace sgd::fixtures
