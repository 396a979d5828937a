#include <algorithm>
#include <array>

#include "sgd/balance.hpp"

namespace sgd {
namespace {

// Union-find over at most kMaxForestOrder vertices. Each vertex stores the sign
// of its link to the parent so that the product of link signs between two
// vertices of one component equals the sign of the tree path joining them.
// No path compression: the whole state is copied on every inclusion and
// restored on backtrack.
struct SignedUnionFind {
  std::array<int, kMaxForestOrder> parent{};
  std::array<int, kMaxForestOrder> size{};
  std::array<Sign, kMaxForestOrder> link{};
  std::array<bool, kMaxForestOrder> has_cycle{};
  int components = 0;

  explicit SignedUnionFind(int n) : components(n) {
    for (int i = 0; i < n; ++i) {
      parent[static_cast<std::size_t>(i)] = i;
      size[static_cast<std::size_t>(i)] = 1;
      link[static_cast<std::size_t>(i)] = Sign::positive;
    }
  }

  std::pair<int, Sign> find(int x) const {
    Sign s = Sign::positive;
    while (parent[static_cast<std::size_t>(x)] != x) {
      s = s * link[static_cast<std::size_t>(x)];
      x = parent[static_cast<std::size_t>(x)];
    }
    return {x, s};
  }

  /// Adds edge (u, v, sign) if every component stays within one cycle (and,
  /// with negative_only, every closed cycle is negative). Returns false otherwise.
  bool add(int u, int v, Sign sign, bool negative_only) {
    auto [ru, su] = find(u);
    auto [rv, sv] = find(v);
    if (ru == rv) {
      if (has_cycle[static_cast<std::size_t>(ru)]) return false;
      if (negative_only && su * sv * sign == Sign::positive) return false;
      has_cycle[static_cast<std::size_t>(ru)] = true;
      return true;
    }
    if (has_cycle[static_cast<std::size_t>(ru)] && has_cycle[static_cast<std::size_t>(rv)]) return false;
    if (size[static_cast<std::size_t>(ru)] > size[static_cast<std::size_t>(rv)]) std::swap(ru, rv);
    parent[static_cast<std::size_t>(ru)] = rv;
    link[static_cast<std::size_t>(ru)] = su * sv * sign;
    size[static_cast<std::size_t>(rv)] += size[static_cast<std::size_t>(ru)];
    has_cycle[static_cast<std::size_t>(rv)] = has_cycle[static_cast<std::size_t>(rv)] || has_cycle[static_cast<std::size_t>(ru)];
    --components;
    return true;
  }
};

void check_order(int n) {
  if (n > kMaxForestOrder)
    throw InvalidArgument("1-forest enumeration is limited to n <= " +
                          std::to_string(kMaxForestOrder) + " (got n=" + std::to_string(n) + ")");
}

}  // namespace

bool OneForest::contrabalanced() const noexcept {
  return std::all_of(components.begin(), components.end(),
                     [](const OneTree& t) { return t.cycle_sign == Sign::negative; });
}

void for_each_spanning_1forest(
    const SignedGraph& g, bool contrabalanced_only,
    const std::function<void(const std::vector<int>& edges, int components)>& visit) {
  const int n = g.order();
  check_order(n);
  const int m = g.size();
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(n));

  // A spanning subgraph with n edges in which no component holds more than one
  // cycle has edges == vertices in every component, i.e. it is a 1-forest.
  auto rec = [&](auto&& self, int next, const SignedUnionFind& uf) -> void {
    if (static_cast<int>(chosen.size()) == n) {
      visit(chosen, uf.components);
      return;
    }
    for (int e = next; m - e >= n - static_cast<int>(chosen.size()); ++e) {
      SignedUnionFind branch = uf;
      const Edge& edge = g.edge(e);
      if (!branch.add(edge.u, edge.v, edge.sign, contrabalanced_only)) continue;
      chosen.push_back(e);
      self(self, e + 1, branch);
      chosen.pop_back();
    }
  };
  if (n > 0) rec(rec, 0, SignedUnionFind(n));
}

OneForest describe_1forest(const SignedGraph& g, std::vector<int> edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<Edge> sub;
  sub.reserve(edges.size());
  for (int e : edges) sub.push_back(g.edge(e));
  const SignedGraph h(g.order(), std::move(sub));

  OneForest forest;
  forest.edges = std::move(edges);
  const int n = h.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  for (auto& comp : components(h)) {
    long long edge_count = 0;
    for (int v : comp) edge_count += static_cast<long long>(h.neighbors(v).size());
    if (edge_count / 2 != static_cast<long long>(comp.size()))
      throw InvalidArgument("edge subset is not a spanning 1-forest");

    // BFS tree; the single edge left over closes the cycle.
    const int root = comp.front();
    std::vector<int> order{root};
    parent[static_cast<std::size_t>(root)] = root;
    std::optional<std::pair<int, int>> extra;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int u = order[head];
      for (const Neighbor& nb : h.neighbors(u)) {
        if (nb.edge == parent_edge[static_cast<std::size_t>(u)]) continue;
        if (parent[static_cast<std::size_t>(nb.vertex)] == -1) {
          parent[static_cast<std::size_t>(nb.vertex)] = u;
          parent_edge[static_cast<std::size_t>(nb.vertex)] = nb.edge;
          depth[static_cast<std::size_t>(nb.vertex)] = depth[static_cast<std::size_t>(u)] + 1;
          order.push_back(nb.vertex);
        } else if (!extra) {
          extra = std::pair{u, nb.vertex};
        }
      }
    }

    auto [a, b] = *extra;
    std::vector<int> up, down;
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
        up.push_back(a);
        a = parent[static_cast<std::size_t>(a)];
      } else {
        down.push_back(b);
        b = parent[static_cast<std::size_t>(b)];
      }
    }
    up.push_back(a);
    up.insert(up.end(), down.rbegin(), down.rend());

    OneTree tree;
    tree.vertices = comp;
    tree.cycle = up;
    std::vector<int> closed = up;
    closed.push_back(up.front());
    tree.cycle_sign = path_sign(h, closed);
    forest.components.push_back(std::move(tree));
  }
  return forest;
}

std::vector<OneForest> enumerate_spanning_1forests(const WeightedSignedGraph& g,
                                                   bool contrabalanced_only) {
  std::vector<OneForest> out;
  for_each_spanning_1forest(g.base(), contrabalanced_only,
                            [&](const std::vector<int>& edges, int) {
                              out.push_back(describe_1forest(g.base(), edges));
                            });
  return out;
}

ForestDeterminant forest_det(const WeightedSignedGraph& g) {
  ForestDeterminant result;
  const bool exact = g.integral();
  BigInt total = 0;
  std::vector<long long> iw;
  if (exact) iw = g.integer_weights();
  for_each_spanning_1forest(g.base(), true, [&](const std::vector<int>& edges, int comps) {
    ++result.forests;
    if (exact) {
      BigInt term = BigInt(1) << (2 * comps);
      for (int e : edges) term *= iw[static_cast<std::size_t>(e)];
      total += term;
    } else {
      double term = std::ldexp(1.0, 2 * comps);
      for (int e : edges) term *= g.weight(e);
      result.value += term;
    }
  });
  if (exact) {
    result.exact = total;
    result.value = total.convert_to<double>();
  }
  return result;
}

}  // namespace sgd
