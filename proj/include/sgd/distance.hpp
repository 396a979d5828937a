#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sgd/core.hpp"
#include "sgd/matrix.hpp"

namespace sgd {

/// Which signed distance to use: d_max, d_min, or the common value d_± of a
/// compatible pair.
enum class DistanceKind { max, min, pm };

/// Hop distance between two vertices plus which shortest-path signs occur.
struct PairDistanceSummary {
  int d = 0;
  bool exists_pos = true;
  bool exists_neg = false;

  /// +1 unless every shortest path is negative.
  Sign sigma_max() const noexcept { return exists_pos ? Sign::positive : Sign::negative; }
  /// -1 unless every shortest path is positive.
  Sign sigma_min() const noexcept { return exists_neg ? Sign::negative : Sign::positive; }
  bool compatible() const noexcept { return !(exists_pos && exists_neg); }

  friend bool operator==(const PairDistanceSummary&, const PairDistanceSummary&) = default;
};

/// Symmetric n x n table of PairDistanceSummary.
class DistanceTable {
 public:
  explicit DistanceTable(int n)
      : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  int order() const noexcept { return n_; }
  const PairDistanceSummary& at(int u, int v) const { return entries_[index(u, v)]; }
  PairDistanceSummary& at(int u, int v) { return entries_[index(u, v)]; }

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  std::size_t index(int u, int v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_;
  std::vector<PairDistanceSummary> entries_;
};

/// Single-source hop distances with shortest-path sign flags.
///
/// Breadth-first layering; the flags of a vertex at distance k are the OR,
/// over its predecessors at distance k-1, of the predecessor flags composed
/// with the connecting edge sign. Throws DisconnectedError if some vertex is
/// unreachable from `src`.
std::vector<PairDistanceSummary> sssp_signs(const SignedGraph& g, int src);

/// All-pairs table. Sources run in parallel when the graph is large enough
/// (SGD_THREADS caps the worker count).
DistanceTable distance_table(const SignedGraph& g);

/// D^max, D^min or D^±. kind=pm throws IncompatibleError with the least
/// incompatible pair.
SquareMatrix distance_matrix(const DistanceTable& table, DistanceKind kind);

struct Compatibility {
  bool compatible = true;
  /// Lexicographically least pair (0-based, first < second) with both signs.
  std::optional<std::pair<int, int>> witness;
};
Compatibility is_compatible(const DistanceTable& table);

/// Tr(v) = sum of hop distances from v.
std::vector<long long> transmission(const DistanceTable& table);

/// Completion of g whose new edges carry sigma_max (or sigma_min) and whose
/// weights are hop distances; original edges keep their sign and weight 1.
/// kind=pm requires compatibility.
WeightedSignedGraph associated_complete(const SignedGraph& g, const DistanceTable& table,
                                        DistanceKind kind);

}  // namespace sgd
