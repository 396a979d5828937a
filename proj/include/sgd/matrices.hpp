#pragma once

#include "sgd/core.hpp"
#include "sgd/distance.hpp"
#include "sgd/matrix.hpp"

namespace sgd {

/// A(Σ,w): sign·weight on edges, zero elsewhere.
SquareMatrix adjacency_matrix(const WeightedSignedGraph& g);

/// D(Σ,w): diagonal of incident edge weights, signs ignored.
SquareMatrix weighted_degree_matrix(const WeightedSignedGraph& g);

/// L(Σ,w) = D(Σ,w) - A(Σ,w).
SquareMatrix weighted_laplacian(const WeightedSignedGraph& g);

/// H(Σ,w): column e holds σ(e)√w(e) at its tail and -√w(e) at its head.
/// Throws InvalidArgument if the orientation does not match the edge list.
IncidenceMatrix incidence_matrix(const WeightedSignedGraph& g, const Orientation& o);

/// H·Hᵀ. When `integral` is set the entries are known to be integers and are
/// rounded; a pre-rounding deviation of 1e-9 or more raises InvariantViolation.
SquareMatrix gram(const IncidenceMatrix& h, bool integral);

/// Tr(G) - D^kind(Σ). Throws DisconnectedError, or IncompatibleError for kind=pm.
SquareMatrix distance_laplacian(const SignedGraph& g, DistanceKind kind);
SquareMatrix distance_laplacian(const DistanceTable& table, DistanceKind kind);

}  // namespace sgd
