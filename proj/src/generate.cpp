#include <algorithm>
#include <set>

#include "rng.hpp"
#include "sgd/core.hpp"

namespace sgd {
namespace {

std::vector<std::pair<int, int>> skeleton(GraphKind kind, int n, detail::Rng& rng,
                                          const GeneratorOptions& opt) {
  std::vector<std::pair<int, int>> pairs;
  switch (kind) {
    case GraphKind::cycle:
      for (int i = 0; i < n; ++i) pairs.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
      break;
    case GraphKind::path:
      for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
      break;
    case GraphKind::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      break;
    case GraphKind::random:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.bernoulli(opt.edge_probability)) pairs.emplace_back(i, j);
      break;
  }
  return pairs;
}

bool pairs_connected(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int comps = n;
  for (auto [u, v] : pairs) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --comps;
    }
  }
  return comps <= 1;
}

}  // namespace

SignedGraph generate(GraphKind kind, int n, const SignSpec& signs, std::uint64_t seed,
                     const GeneratorOptions& options) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (kind == GraphKind::cycle && n < 3) throw InvalidArgument("cycles need n >= 3");
  if (auto* p = std::get_if<NegativeProbability>(&signs); p && !(p->p >= 0.0 && p->p <= 1.0))
    throw InvalidArgument("sign probability must lie in [0, 1]");
  if (kind == GraphKind::random &&
      !(options.edge_probability >= 0.0 && options.edge_probability <= 1.0))
    throw InvalidArgument("edge probability must lie in [0, 1]");

  detail::Rng rng(seed);
  auto pairs = skeleton(kind, n, rng, options);
  if (kind == GraphKind::random) {
    int attempt = 1;
    while (!pairs_connected(n, pairs)) {
      if (attempt++ >= options.max_attempts)
        throw Error("no connected random graph after " + std::to_string(options.max_attempts) +
                    " attempts (n=" + std::to_string(n) + ")");
      pairs = skeleton(kind, n, rng, options);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  std::set<std::pair<int, int>> negative;
  if (auto* ne = std::get_if<NegativeEdges>(&signs)) {
    const std::set<std::pair<int, int>> present(pairs.begin(), pairs.end());
    for (auto [u, v] : ne->pairs) {
      const auto key = std::minmax(u, v);
      if (!present.count(key))
        throw InvalidArgument("negative edge " + std::to_string(u + 1) + "-" +
                              std::to_string(v + 1) + " is not an edge of the generated graph");
      negative.insert(key);
    }
  }
  for (auto [u, v] : pairs) {
    Sign s = Sign::positive;
    if (std::holds_alternative<AllNegative>(signs)) {
      s = Sign::negative;
    } else if (std::holds_alternative<NegativeEdges>(signs)) {
      s = negative.count({u, v}) ? Sign::negative : Sign::positive;
    } else if (auto* p = std::get_if<NegativeProbability>(&signs)) {
      s = rng.bernoulli(p->p) ? Sign::negative : Sign::positive;
    }
    edges.push_back({u, v, s});
  }
  return SignedGraph(n, std::move(edges));
}

WeightedSignedGraph with_random_integer_weights(const SignedGraph& g, int lo, int hi,
                                                std::uint64_t seed) {
  if (lo < 1 || hi < lo) throw InvalidArgument("weight range must satisfy 1 <= lo <= hi");
  detail::Rng rng(seed);
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(g.size()));
  for (int e = 0; e < g.size(); ++e) w.push_back(static_cast<double>(rng.uniform_int(lo, hi)));
  return WeightedSignedGraph(g, std::move(w));
}

SwitchingFunction random_switching(int n, std::uint64_t seed) {
  detail::Rng rng(seed);
  SwitchingFunction z;
  z.zeta.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) z.zeta.push_back(rng.bernoulli(0.5) ? Sign::negative : Sign::positive);
  return z;
}

}  // namespace sgd
