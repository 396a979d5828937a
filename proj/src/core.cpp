#include "sgd/core.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace sgd {

SignedGraph::SignedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw GraphError("vertex count must be nonnegative");
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw GraphError("edge " + std::to_string(i + 1) + " has an endpoint outside 1.." +
                       std::to_string(n));
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u + 1));
    if (e.sign != Sign::positive && e.sign != Sign::negative)
      throw GraphError("edge " + std::to_string(i + 1) + " has an invalid sign");
    if (!seen.emplace(std::minmax(e.u, e.v)).second)
      throw GraphError("duplicate edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1));
    const int idx = static_cast<int>(i);
    adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.sign, idx});
    adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.sign, idx});
  }
}

std::optional<int> SignedGraph::find_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  const auto& nu = adj_[static_cast<std::size_t>(u)];
  const auto& nv = adj_[static_cast<std::size_t>(v)];
  const auto& shorter = nu.size() <= nv.size() ? nu : nv;
  const int target = nu.size() <= nv.size() ? v : u;
  for (const Neighbor& nb : shorter)
    if (nb.vertex == target) return nb.edge;
  return std::nullopt;
}

Sign SignedGraph::sign(int u, int v) const {
  const auto e = find_edge(u, v);
  if (!e) throw InvalidArgument("vertices " + std::to_string(u + 1) + " and " +
                                std::to_string(v + 1) + " are not adjacent");
  return edges_[static_cast<std::size_t>(*e)].sign;
}

bool SignedGraph::all_positive() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.sign == Sign::positive; });
}

WeightedSignedGraph::WeightedSignedGraph(SignedGraph base)
    : base_(std::move(base)), weights_(static_cast<std::size_t>(base_.size()), 1.0) {}

WeightedSignedGraph::WeightedSignedGraph(SignedGraph base, std::vector<double> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  if (weights_.size() != static_cast<std::size_t>(base_.size()))
    throw GraphError("weight count " + std::to_string(weights_.size()) +
                     " does not match edge count " + std::to_string(base_.size()));
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!(w > 0.0) || !std::isfinite(w))
      throw GraphError("edge " + std::to_string(i + 1) + " has a nonpositive weight");
    if (w != std::floor(w) || w > 9.0e15) integral_ = false;
  }
}

std::vector<long long> WeightedSignedGraph::integer_weights() const {
  if (!integral_) throw InvalidArgument("graph has non-integer weights");
  std::vector<long long> out;
  out.reserve(weights_.size());
  for (double w : weights_) out.push_back(static_cast<long long>(w));
  return out;
}

Orientation Orientation::canonical(const SignedGraph& g) {
  Orientation o;
  o.arcs.reserve(static_cast<std::size_t>(g.size()));
  for (const Edge& e : g.edges()) o.arcs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  return o;
}

SignedGraph switch_signs(const SignedGraph& g, const SwitchingFunction& zeta) {
  if (zeta.zeta.size() != static_cast<std::size_t>(g.order()))
    throw InvalidArgument("switching function has length " + std::to_string(zeta.zeta.size()) +
                          ", expected " + std::to_string(g.order()));
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges)
    e.sign = zeta.zeta[static_cast<std::size_t>(e.u)] * e.sign * zeta.zeta[static_cast<std::size_t>(e.v)];
  return SignedGraph(g.order(), std::move(edges));
}

WeightedSignedGraph switch_signs(const WeightedSignedGraph& g, const SwitchingFunction& zeta) {
  return WeightedSignedGraph(switch_signs(g.base(), zeta), g.weights());
}

Sign path_sign(const SignedGraph& g, std::span<const int> walk) {
  Sign s = Sign::positive;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    const auto e = g.find_edge(walk[i - 1], walk[i]);
    if (!e)
      throw InvalidArgument("walk step " + std::to_string(walk[i - 1] + 1) + " -> " +
                            std::to_string(walk[i] + 1) + " is not an edge");
    s = s * g.edge(*e).sign;
  }
  return s;
}

std::vector<std::vector<int>> components(const SignedGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (const Neighbor& nb : g.neighbors(comp[head]))
        if (!seen[static_cast<std::size_t>(nb.vertex)]) {
          seen[static_cast<std::size_t>(nb.vertex)] = true;
          comp.push_back(nb.vertex);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SignedGraph& g) { return components(g).size() <= 1; }

}  // namespace sgd
