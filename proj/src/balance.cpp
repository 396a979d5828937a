#include <algorithm>
#include <numeric>

#include "sgd/balance.hpp"
#include "sgd/matrices.hpp"

namespace sgd {

std::string to_string(Shape s) {
  switch (s) {
    case Shape::tree: return "tree";
    case Shape::cycle: return "cycle";
    case Shape::unicyclic: return "unicyclic";
    case Shape::one_forest: return "1-forest";
  }
  return "?";
}

std::string to_string(BalanceMethod m) {
  switch (m) {
    case BalanceMethod::switching: return "switching";
    case BalanceMethod::det_max: return "det-max";
    case BalanceMethod::det_min: return "det-min";
    case BalanceMethod::det_pm: return "det-pm";
    case BalanceMethod::forest_sum: return "forest-sum";
  }
  return "?";
}

std::optional<ClosedFormDeterminant> closed_form_det(const WeightedSignedGraph& g) {
  const SignedGraph& base = g.base();
  const auto comps = components(base);
  if (comps.size() == 1 && g.size() == g.order() - 1) {
    ClosedFormDeterminant out{Shape::tree, 0.0, std::nullopt};
    if (g.integral()) out.exact = BigInt(0);
    return out;
  }
  for (const auto& comp : comps) {
    std::size_t degree_sum = 0;
    for (int v : comp) degree_sum += base.neighbors(v).size();
    if (degree_sum / 2 != comp.size()) return std::nullopt;
  }

  std::vector<int> all(static_cast<std::size_t>(g.size()));
  std::iota(all.begin(), all.end(), 0);
  const OneForest forest = describe_1forest(base, std::move(all));

  Shape shape = Shape::one_forest;
  if (comps.size() == 1) {
    const bool two_regular = std::all_of(comps.front().begin(), comps.front().end(),
                                         [&](int v) { return base.neighbors(v).size() == 2; });
    shape = two_regular ? Shape::cycle : Shape::unicyclic;
  }

  // w(Σ) · Π 2(1 - σ(C_ψ)); each factor is 0 or 4.
  const bool any_positive = !forest.contrabalanced();
  const int factor_power = 2 * static_cast<int>(forest.components.size());
  ClosedFormDeterminant out{shape, 0.0, std::nullopt};
  if (g.integral()) {
    BigInt v = 0;
    if (!any_positive) {
      v = BigInt(1) << factor_power;
      for (long long w : g.integer_weights()) v *= w;
    }
    out.exact = v;
    out.value = v.convert_to<double>();
  } else if (!any_positive) {
    double v = std::ldexp(1.0, factor_power);
    for (double w : g.weights()) v *= w;
    out.value = v;
  }
  return out;
}

BalanceReport is_balanced_switching(const SignedGraph& g) {
  const int n = g.order();
  if (const auto comps = components(g); comps.size() > 1) throw DisconnectedError(comps[1].front());

  SwitchingFunction zeta = SwitchingFunction::identity(n);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  if (n > 0) {
    order.push_back(0);
    parent[0] = 0;
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int u = order[head];
    for (const Neighbor& nb : g.neighbors(u)) {
      const auto v = static_cast<std::size_t>(nb.vertex);
      if (parent[v] != -1) continue;
      parent[v] = u;
      depth[v] = depth[static_cast<std::size_t>(u)] + 1;
      zeta.zeta[v] = zeta.zeta[static_cast<std::size_t>(u)] * nb.sign;
      order.push_back(nb.vertex);
    }
  }

  for (const Edge& e : g.edges()) {
    if (zeta.zeta[static_cast<std::size_t>(e.u)] * e.sign * zeta.zeta[static_cast<std::size_t>(e.v)] ==
        Sign::positive)
      continue;
    // Fundamental cycle of the offending non-tree edge.
    int a = e.u, b = e.v;
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
    return {false, BalanceMethod::switching, std::nullopt, NegativeCycle{std::move(up)}};
  }
  return {true, BalanceMethod::switching, std::nullopt, std::move(zeta)};
}

namespace {

BalanceReport det_report(const DistanceTable& table, DistanceKind kind) {
  const BalanceMethod method = kind == DistanceKind::max   ? BalanceMethod::det_max
                               : kind == DistanceKind::min ? BalanceMethod::det_min
                                                           : BalanceMethod::det_pm;
  if (kind == DistanceKind::pm) {
    if (const auto c = is_compatible(table); !c.compatible)
      return {false, method, std::nullopt, *c.witness};
  }
  BigInt det = det_exact(distance_laplacian(table, kind));
  const bool balanced = det == 0;
  return {balanced, method, std::move(det), std::monostate{}};
}

}  // namespace

BalanceReport is_balanced_det(const SignedGraph& g, DetKind kind) {
  const DistanceTable table = distance_table(g);
  switch (kind) {
    case DetKind::max: return det_report(table, DistanceKind::max);
    case DetKind::min: return det_report(table, DistanceKind::min);
    case DetKind::pm: return det_report(table, DistanceKind::pm);
    case DetKind::all: break;
  }

  BalanceReport rmax = det_report(table, DistanceKind::max);
  const BalanceReport rmin = det_report(table, DistanceKind::min);
  const BalanceReport rpm = det_report(table, DistanceKind::pm);
  BalanceReport sw = is_balanced_switching(g);
  if (rmax.balanced != rmin.balanced || rmax.balanced != rpm.balanced ||
      rmax.balanced != sw.balanced)
    throw InvariantViolation("balance verdicts disagree: det-max " + std::to_string(rmax.balanced) +
                             ", det-min " + std::to_string(rmin.balanced) + ", det-pm " +
                             std::to_string(rpm.balanced) + ", switching " +
                             std::to_string(sw.balanced));
  if (rmax.balanced &&
      distance_laplacian(table, DistanceKind::max) != distance_laplacian(table, DistanceKind::min))
    throw InvariantViolation("balanced graph with L^max != L^min");
  rmax.certificate = std::move(sw.certificate);
  return rmax;
}

BalanceReport is_balanced_forest(const SignedGraph& g, DistanceKind kind) {
  if (kind == DistanceKind::pm) throw InvalidArgument("forest decider takes kind max or min");
  const DistanceTable table = distance_table(g);
  const ForestDeterminant fd = forest_det(associated_complete(g, table, kind));
  return {fd.exact ? *fd.exact == 0 : fd.value == 0.0, BalanceMethod::forest_sum, fd.exact,
          std::monostate{}};
}

bool verify_certificate(const SignedGraph& g, const BalanceReport& report) {
  if (const auto* z = std::get_if<SwitchingFunction>(&report.certificate)) {
    if (z->zeta.size() != static_cast<std::size_t>(g.order())) return false;
    return switch_signs(g, *z).all_positive();
  }
  if (const auto* c = std::get_if<NegativeCycle>(&report.certificate)) {
    if (c->cycle.size() < 3) return false;
    std::vector<int> sorted = c->cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    std::vector<int> closed = c->cycle;
    closed.push_back(c->cycle.front());
    try {
      return path_sign(g, closed) == Sign::negative;
    } catch (const InvalidArgument&) {
      return false;
    }
  }
  if (const auto* p = std::get_if<std::pair<int, int>>(&report.certificate)) {
    const DistanceTable table = distance_table(g);
    return !table.at(p->first, p->second).compatible();
  }
  return true;
}

}  // namespace sgd
