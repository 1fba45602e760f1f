"""Critical independent sets and König-Egerváry graphs.

Vertex sets are lists of labels in vertex order.
"""

import json

from . import _kecrit
from ._kecrit import (
    Graph,
    OracleBoundError,
    ParseError,
    bipartite_gnp,
    critical_difference,
    critical_family,
    critical_independent_set,
    decompose,
    diadem,
    disjoint_union,
    extends_to_critical_independent,
    fixture,
    gnp,
    independence_profile,
    ke_verdicts,
    matching,
    matching_number,
    max_critical_independent_set,
    parse,
    verify_fast_paths,
    verify_theorems,
)


def analyze(g, oracle_bound=20, include_checks=True):
    """Full report as a dict; same schema as `kecrit analyze --output json`."""
    return json.loads(_kecrit.analyze_json(g, oracle_bound, include_checks))


__all__ = [
    "Graph",
    "OracleBoundError",
    "ParseError",
    "analyze",
    "bipartite_gnp",
    "critical_difference",
    "critical_family",
    "critical_independent_set",
    "decompose",
    "diadem",
    "disjoint_union",
    "extends_to_critical_independent",
    "fixture",
    "gnp",
    "independence_profile",
    "ke_verdicts",
    "matching",
    "matching_number",
    "max_critical_independent_set",
    "parse",
    "verify_fast_paths",
    "verify_theorems",
]
