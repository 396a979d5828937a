#include "sgd/distance.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace sgd {
namespace {

unsigned worker_count(int sources) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SGD_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min(hw, static_cast<unsigned>(cap));
  }
  // Thread start-up dominates for small graphs.
  if (sources < 64) return 1;
  return std::min(hw, static_cast<unsigned>(sources));
}

}  // namespace

std::vector<PairDistanceSummary> sssp_signs(const SignedGraph& g, int src) {
  const int n = g.order();
  if (src < 0 || src >= n) throw InvalidArgument("source vertex out of range");
  std::vector<PairDistanceSummary> out(static_cast<std::size_t>(n), {-1, false, false});
  out[static_cast<std::size_t>(src)] = {0, true, false};

  std::vector<int> layer{src};
  int depth = 0;
  std::size_t reached = 1;
  while (!layer.empty()) {
    std::vector<int> next;
    for (int u : layer) {
      const auto& fu = out[static_cast<std::size_t>(u)];
      for (const Neighbor& nb : g.neighbors(u)) {
        auto& fv = out[static_cast<std::size_t>(nb.vertex)];
        if (fv.d == -1) {
          fv.d = depth + 1;
          next.push_back(nb.vertex);
          ++reached;
        }
        if (fv.d != depth + 1) continue;
        if (nb.sign == Sign::positive) {
          fv.exists_pos = fv.exists_pos || fu.exists_pos;
          fv.exists_neg = fv.exists_neg || fu.exists_neg;
        } else {
          fv.exists_pos = fv.exists_pos || fu.exists_neg;
          fv.exists_neg = fv.exists_neg || fu.exists_pos;
        }
      }
    }
    layer = std::move(next);
    ++depth;
  }
  if (reached != static_cast<std::size_t>(n)) {
    for (int v = 0; v < n; ++v)
      if (out[static_cast<std::size_t>(v)].d == -1) throw DisconnectedError(v);
  }
  return out;
}

DistanceTable distance_table(const SignedGraph& g) {
  const int n = g.order();
  if (const auto comps = components(g); comps.size() > 1) throw DisconnectedError(comps[1].front());
  DistanceTable table(n);
  auto fill = [&](int src) {
    const auto row = sssp_signs(g, src);
    for (int v = 0; v < n; ++v) table.at(src, v) = row[static_cast<std::size_t>(v)];
  };

  const unsigned workers = worker_count(n);
  if (workers <= 1) {
    for (int s = 0; s < n; ++s) fill(s);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int s = static_cast<int>(w); s < n; s += static_cast<int>(workers)) fill(s);
      });
  }
  return table;
}

SquareMatrix distance_matrix(const DistanceTable& table, DistanceKind kind) {
  if (kind == DistanceKind::pm) {
    if (const auto c = is_compatible(table); !c.compatible) throw IncompatibleError(*c.witness);
    kind = DistanceKind::max;
  }
  const int n = table.order();
  SquareMatrix m(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const auto& p = table.at(u, v);
      const Sign s = kind == DistanceKind::max ? p.sigma_max() : p.sigma_min();
      m(u, v) = to_int(s) * p.d;
    }
  return m;
}

Compatibility is_compatible(const DistanceTable& table) {
  for (int u = 0; u < table.order(); ++u)
    for (int v = u + 1; v < table.order(); ++v)
      if (!table.at(u, v).compatible()) return {false, std::pair{u, v}};
  return {};
}

std::vector<long long> transmission(const DistanceTable& table) {
  std::vector<long long> tr(static_cast<std::size_t>(table.order()), 0);
  for (int u = 0; u < table.order(); ++u)
    for (int v = 0; v < table.order(); ++v) tr[static_cast<std::size_t>(u)] += table.at(u, v).d;
  return tr;
}

WeightedSignedGraph associated_complete(const SignedGraph& g, const DistanceTable& table,
                                        DistanceKind kind) {
  if (table.order() != g.order()) throw InvalidArgument("table order does not match graph");
  if (kind == DistanceKind::pm) {
    if (const auto c = is_compatible(table); !c.compatible) throw IncompatibleError(*c.witness);
    kind = DistanceKind::max;
  }
  std::vector<Edge> edges = g.edges();
  std::vector<double> weights(edges.size(), 1.0);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      const auto& p = table.at(u, v);
      edges.push_back({u, v, kind == DistanceKind::max ? p.sigma_max() : p.sigma_min()});
      weights.push_back(p.d);
    }
  return WeightedSignedGraph(SignedGraph(g.order(), std::move(edges)), std::move(weights));
}

}  // namespace sgd
