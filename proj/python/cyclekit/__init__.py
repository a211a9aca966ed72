"""Cycle-structure decomposition of undirected graphs.

Thin wrapper over the compiled core: relevant-cycle families, minimum cycle
bases, interchange classes, uniform basis sampling, and ring statistics.
"""

import json as _json

from ._core import (
    Graph,
    bracelet_graph,
    dualgraph_json,
    fit_power_law,
    fixture_graph,
    fixture_names,
    generate_rgg,
    load_graphs,
    oracle_check,
    ring_rates,
    sample_mcb,
)
from ._core import decompose_json as _decompose_json


def decompose(graph):
    """Full decomposition report as nested dicts (counts are decimal strings)."""
    return _json.loads(_decompose_json(graph))


def dualgraph(graph, seed=0, max_exchanges=100):
    """Postprocessed-basis dual graph per cyclic component."""
    return _json.loads(dualgraph_json(graph, seed, max_exchanges))


__all__ = [
    "Graph",
    "bracelet_graph",
    "decompose",
    "dualgraph",
    "fit_power_law",
    "fixture_graph",
    "fixture_names",
    "generate_rgg",
    "load_graphs",
    "oracle_check",
    "ring_rates",
    "sample_mcb",
]
