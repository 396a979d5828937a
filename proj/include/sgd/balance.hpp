#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgd/core.hpp"
#include "sgd/distance.hpp"
#include "sgd/matrix.hpp"

namespace sgd {

using BigInt = boost::multiprecision::cpp_int;

/// Exact determinant by fraction-free (Bareiss) elimination over big integers.
/// Throws InvalidArgument on a non-integer entry.
BigInt det_exact(const SquareMatrix& m);

struct FloatDeterminant {
  double value = 0.0;
  /// A pivot fell below n·eps·max|entry|; value is reported as 0.
  bool singular = false;
};
/// LU with partial pivoting.
FloatDeterminant det_float(const SquareMatrix& m);

// Spanning 1-forests

struct OneTree {
  std::vector<int> vertices;
  /// Closed cycle as a vertex sequence without the repeated start vertex.
  std::vector<int> cycle;
  Sign cycle_sign = Sign::positive;
};

/// Spanning subgraph with exactly n edges whose components are all 1-trees.
struct OneForest {
  std::vector<int> edges;  // sorted indices into the host graph's edge list
  std::vector<OneTree> components;

  bool contrabalanced() const noexcept;
};

/// Graphs above this order are refused by the enumerators.
inline constexpr int kMaxForestOrder = 10;

/// Calls `visit(edge subset, component count)` for every spanning 1-forest.
/// With `contrabalanced_only`, only forests whose cycles are all negative.
void for_each_spanning_1forest(
    const SignedGraph& g, bool contrabalanced_only,
    const std::function<void(const std::vector<int>& edges, int components)>& visit);

std::vector<OneForest> enumerate_spanning_1forests(const WeightedSignedGraph& g,
                                                   bool contrabalanced_only);

/// Builds the OneForest record (components, cycles, signs) for an edge subset
/// already known to be a spanning 1-forest.
OneForest describe_1forest(const SignedGraph& g, std::vector<int> edges);

struct ForestDeterminant {
  double value = 0.0;
  /// Set when every weight is an integer.
  std::optional<BigInt> exact;
  long long forests = 0;
};

/// Sum over contrabalanced spanning 1-forests of 4^{components} · Π weights.
ForestDeterminant forest_det(const WeightedSignedGraph& g);

// Closed forms for special shapes

enum class Shape { tree, cycle, unicyclic, one_forest };
std::string to_string(Shape s);

struct ClosedFormDeterminant {
  Shape shape;
  double value = 0.0;
  std::optional<BigInt> exact;
};

/// det L(Σ,w) for trees, cycles, unicyclic graphs and 1-forests;
/// std::nullopt for any other shape.
std::optional<ClosedFormDeterminant> closed_form_det(const WeightedSignedGraph& g);

// Balance deciders

enum class BalanceMethod { switching, det_max, det_min, det_pm, forest_sum };
std::string to_string(BalanceMethod m);

/// A cycle (vertex sequence, closing edge implied) of sign -1.
struct NegativeCycle {
  std::vector<int> cycle;
};

using BalanceCertificate =
    std::variant<std::monostate, SwitchingFunction, NegativeCycle, std::pair<int, int>>;

struct BalanceReport {
  bool balanced = false;
  BalanceMethod method = BalanceMethod::switching;
  std::optional<BigInt> determinant;
  /// Switching function when balanced, negative cycle when not. A det-pm
  /// report on an incompatible graph carries the incompatible pair instead.
  BalanceCertificate certificate;
};

/// Fixes ζ along a BFS spanning tree so tree edges become positive, then
/// checks every non-tree edge. Throws DisconnectedError.
BalanceReport is_balanced_switching(const SignedGraph& g);

enum class DetKind { max, min, pm, all };

/// Balanced iff det L^kind = 0 (exact). kind=all evaluates max, min and pm,
/// checks that they agree with one another and with the switching oracle
/// (throwing InvariantViolation otherwise) and returns the max report with
/// the switching certificate attached.
BalanceReport is_balanced_det(const SignedGraph& g, DetKind kind);

/// Balanced iff the contrabalanced 1-forest sum of the associated complete
/// graph vanishes. kind is max or min.
BalanceReport is_balanced_forest(const SignedGraph& g, DistanceKind kind);

/// Applying the certificate's switching function gives all-positive signs, or
/// the witness cycle is a cycle of g with sign -1.
bool verify_certificate(const SignedGraph& g, const BalanceReport& report);

}  // namespace sgd
