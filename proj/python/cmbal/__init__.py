"""Face numbers, Cohen–Macaulay tests and balancing witnesses for simplicial complexes.

Complexes are lists of facets (lists of vertex labels); graphs are edge lists
with optional isolated vertices.
"""

import json

from . import _cmbal
from ._cmbal import (
    DEFAULT_SEED,
    InputError,
    VerificationError,
    clique_complex,
    f_from_h,
    f_vector,
    h_from_f,
    h_vector,
    independence_complex,
    link,
    named_graph,
    reduced_betti,
    run_cli,
)

__all__ = [
    "DEFAULT_SEED",
    "InputError",
    "VerificationError",
    "balance",
    "classify",
    "clique_complex",
    "cohen_macaulay",
    "embed",
    "f_from_h",
    "f_vector",
    "h_from_f",
    "h_vector",
    "independence_complex",
    "link",
    "named_graph",
    "reduced_betti",
    "run_cli",
]


def cohen_macaulay(facets):
    """Reisner test; returns {"cm", "pure", "betti", "violation"}."""
    return json.loads(_cmbal.cm_report(facets))


def classify(edges, vertices=()):
    """One verdict per connected component."""
    return json.loads(_cmbal.classify_report(edges, list(vertices)))


def embed(edges, vertices=()):
    """Join cover of I(G) for a graph whose components are K1 or in PG."""
    return json.loads(_cmbal.embed_report(edges, list(vertices)))


def balance(facets, cover, seed=DEFAULT_SEED, retries=8):
    """Balancing witness for a complex covered by `cover` (a list of factor dicts)."""
    return json.loads(_cmbal.balance_report(facets, json.dumps(cover), seed, retries))
