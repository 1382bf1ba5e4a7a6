"""Python bindings for the nestcyc C++ library."""

import json as _json

from ._core import (
    Graph,
    InputError,
    InvariantError,
    chords_cross,
    epsilon,
    generate,
    girth,
    parse_edge_list,
    shortest_cycle,
)
from . import _core

__all__ = [
    "Graph",
    "InputError",
    "InvariantError",
    "chords_cross",
    "epsilon",
    "extract",
    "generate",
    "girth",
    "oracle",
    "parse_edge_list",
    "pipeline",
    "shortest_cycle",
    "verify",
]


def verify(g, outer, inner):
    return _json.loads(_core.verify(g, list(outer), list(inner)))


def oracle(g, max_cycles=500000, max_len=0):
    return _json.loads(_core.oracle(g, max_cycles, max_len))


def extract(g, eps1=0.1, k=None):
    return _json.loads(_core.extract(g, eps1, k))


def pipeline(g, eps1=0.1, blob_size=None):
    return _json.loads(_core.pipeline(g, eps1, blob_size))
