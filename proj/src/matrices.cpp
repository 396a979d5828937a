#include "sgd/matrices.hpp"

#include <algorithm>
#include <cmath>

namespace sgd {

SquareMatrix adjacency_matrix(const WeightedSignedGraph& g) {
  SquareMatrix a(g.order());
  for (int e = 0; e < g.size(); ++e) {
    const Edge& edge = g.base().edge(e);
    const double x = to_int(edge.sign) * g.weight(e);
    a(edge.u, edge.v) = x;
    a(edge.v, edge.u) = x;
  }
  return a;
}

SquareMatrix weighted_degree_matrix(const WeightedSignedGraph& g) {
  SquareMatrix d(g.order());
  for (int e = 0; e < g.size(); ++e) {
    const Edge& edge = g.base().edge(e);
    d(edge.u, edge.u) += g.weight(e);
    d(edge.v, edge.v) += g.weight(e);
  }
  return d;
}

SquareMatrix weighted_laplacian(const WeightedSignedGraph& g) {
  return weighted_degree_matrix(g) - adjacency_matrix(g);
}

IncidenceMatrix incidence_matrix(const WeightedSignedGraph& g, const Orientation& o) {
  if (o.arcs.size() != static_cast<std::size_t>(g.size()))
    throw InvalidArgument("orientation has " + std::to_string(o.arcs.size()) + " arcs for " +
                          std::to_string(g.size()) + " edges");
  IncidenceMatrix h(g.order(), g.size(), o);
  for (int e = 0; e < g.size(); ++e) {
    const Edge& edge = g.base().edge(e);
    const auto [tail, head] = o.arcs[static_cast<std::size_t>(e)];
    if (std::minmax(tail, head) != std::minmax(edge.u, edge.v))
      throw InvalidArgument("arc " + std::to_string(e + 1) + " does not match edge " +
                            std::to_string(edge.u + 1) + "-" + std::to_string(edge.v + 1));
    const double root = std::sqrt(g.weight(e));
    h(tail, e) = to_int(edge.sign) * root;
    h(head, e) = -root;
  }
  return h;
}

SquareMatrix gram(const IncidenceMatrix& h, bool integral) {
  SquareMatrix out(h.rows());
  for (int i = 0; i < h.rows(); ++i)
    for (int j = i; j < h.rows(); ++j) {
      double s = 0.0;
      for (int k = 0; k < h.cols(); ++k) s += h(i, k) * h(j, k);
      if (integral) {
        const double r = std::nearbyint(s);
        if (std::abs(s - r) >= 1e-9)
          throw InvariantViolation("H·Hᵀ entry (" + std::to_string(i + 1) + ", " +
                                   std::to_string(j + 1) + ") is not near an integer");
        s = r;
      }
      out(i, j) = s;
      out(j, i) = s;
    }
  return out;
}

SquareMatrix distance_laplacian(const DistanceTable& table, DistanceKind kind) {
  SquareMatrix l = distance_matrix(table, kind);
  const auto tr = transmission(table);
  for (int u = 0; u < l.order(); ++u)
    for (int v = 0; v < l.order(); ++v)
      l(u, v) = u == v ? static_cast<double>(tr[static_cast<std::size_t>(u)]) : -l(u, v);
  return l;
}

SquareMatrix distance_laplacian(const SignedGraph& g, DistanceKind kind) {
  return distance_laplacian(distance_table(g), kind);
}

}  // namespace sgd
