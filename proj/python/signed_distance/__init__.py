"""Signed distance matrices, balance deciders and spectra for signed graphs."""

from ._core import (
    DisconnectedError,
    Error,
    Graph,
    GraphError,
    IncompatibleError,
    InvalidArgument,
    ParseError,
    adjacency_matrix,
    associated_complete,
    closed_form_det,
    cospectral,
    count_1forests,
    det_exact,
    distance_laplacian,
    distance_matrix,
    eigenvalues,
    forest_det,
    generate,
    hop_distances,
    incidence_matrix,
    is_balanced,
    is_compatible,
    laplacian,
    odd_cycle_report,
    parse_edge_list,
    read_edge_list,
    serialize_edge_list,
    transmission,
    transmission_shift,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
