"""Exact clique polynomials and edge-subgraph expansion checks."""

import json

from ._core import (
    DomainError,
    Error,
    Graph,
    OverflowError,
    ParseError,
    Polynomial,
    ScaleError,
    alternating_spanning_sum,
    classify,
    clique_count,
    clique_polynomial,
    count_cliques_bruteforce,
    cstar,
    enumerate_edge_masks,
    explain_diff,
    graph_from_edge_mask,
    identity_check,
    inclusion_exclusion_rhs,
    sample_gnp,
    scale_shift,
    spanning_subgraph_count,
    sweep_json,
    theorem_rhs,
)


def sweep(n_min, n_max=None, **kwargs):
    """Run a sweep and return the report as a dict (same fields as the CLI's JSON)."""
    return json.loads(sweep_json(n_min, n_min if n_max is None else n_max, **kwargs))


__all__ = [name for name in dir() if not name.startswith("_")]
