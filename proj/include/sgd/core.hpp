#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sgd/error.hpp"

namespace sgd {

enum class Sign : std::int8_t { positive = 1, negative = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::positive : Sign::negative;
}
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::positive ? '+' : '-'; }

struct Edge {
  int u;
  int v;
  Sign sign;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  int vertex;
  Sign sign;
  int edge;  // index into SignedGraph::edges()
};

/// Simple undirected graph with ±1 edge signs. Vertices are 0-based.
///
/// Immutable after construction; the constructor rejects loops, duplicate
/// unordered pairs and out-of-range endpoints with GraphError.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Neighbor> neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

  /// Index of the edge joining u and v, if any.
  std::optional<int> find_edge(int u, int v) const;
  bool adjacent(int u, int v) const { return find_edge(u, v).has_value(); }
  Sign sign(int u, int v) const;

  bool all_positive() const noexcept;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
};

/// SignedGraph plus a strictly positive weight per edge.
class WeightedSignedGraph {
 public:
  WeightedSignedGraph() = default;
  /// Unit weights.
  explicit WeightedSignedGraph(SignedGraph base);
  WeightedSignedGraph(SignedGraph base, std::vector<double> weights);

  const SignedGraph& base() const noexcept { return base_; }
  int order() const noexcept { return base_.order(); }
  int size() const noexcept { return base_.size(); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double weight(int e) const { return weights_.at(static_cast<std::size_t>(e)); }

  /// True when every weight is an integer; exact determinant paths are then available.
  bool integral() const noexcept { return integral_; }
  /// Weights as integers. Throws InvalidArgument unless integral().
  std::vector<long long> integer_weights() const;

  friend bool operator==(const WeightedSignedGraph& a, const WeightedSignedGraph& b) {
    return a.base_ == b.base_ && a.weights_ == b.weights_;
  }

 private:
  SignedGraph base_;
  std::vector<double> weights_;
  bool integral_ = true;
};

struct SwitchingFunction {
  std::vector<Sign> zeta;

  static SwitchingFunction identity(int n) {
    return {std::vector<Sign>(static_cast<std::size_t>(n), Sign::positive)};
  }
};

/// One (tail, head) pair per edge, aligned with the edge list.
struct Orientation {
  std::vector<std::pair<int, int>> arcs;

  /// tail = lower index.
  static Orientation canonical(const SignedGraph& g);
};

SignedGraph switch_signs(const SignedGraph& g, const SwitchingFunction& zeta);
WeightedSignedGraph switch_signs(const WeightedSignedGraph& g, const SwitchingFunction& zeta);

/// Product of edge signs along a walk. Throws InvalidArgument on a non-adjacent step.
Sign path_sign(const SignedGraph& g, std::span<const int> walk);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<int>> components(const SignedGraph& g);
bool is_connected(const SignedGraph& g);

// Edge-list text format.

WeightedSignedGraph parse_edge_list(std::istream& in);
WeightedSignedGraph parse_edge_list(std::string_view text);
WeightedSignedGraph read_edge_list_file(const std::string& path);
std::string serialize_edge_list(const WeightedSignedGraph& g);

// Generators.

enum class GraphKind { cycle, path, complete, random };

struct AllPositive {};
struct AllNegative {};
/// Edges listed here (as 0-based unordered pairs) are negative, all others positive.
struct NegativeEdges {
  std::vector<std::pair<int, int>> pairs;
};
/// Each edge is independently negative with this probability.
struct NegativeProbability {
  double p;
};
using SignSpec = std::variant<AllPositive, AllNegative, NegativeEdges, NegativeProbability>;

struct GeneratorOptions {
  /// Edge density for GraphKind::random.
  double edge_probability = 0.5;
  int max_attempts = 1000;
};

SignedGraph generate(GraphKind kind, int n, const SignSpec& signs, std::uint64_t seed,
                     const GeneratorOptions& options = {});

/// Attaches independent uniform integer weights in [lo, hi].
WeightedSignedGraph with_random_integer_weights(const SignedGraph& g, int lo, int hi,
                                                std::uint64_t seed);

SwitchingFunction random_switching(int n, std::uint64_t seed);

}  // namespace sgd
