from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from corpusgen import _cache_path, graphs_up_to  # noqa: E402

from critlab.graph6 import parse_graph6  # noqa: E402
from critlab.solver import is_edge_delta_critical  # noqa: E402


@pytest.fixture(scope="session")
def corpus_n7() -> list[str]:
    """All 1252 pairwise non-isomorphic graphs on 1..7 vertices."""
    return graphs_up_to(7, connected=False)


@pytest.fixture(scope="session")
def connected_n8() -> list[str]:
    """All 12113 connected graphs on 1..8 vertices."""
    return graphs_up_to(8, connected=True)


@pytest.fixture(scope="session")
def critical_n8(connected_n8) -> list[str]:
    """graph6 of every edge-Delta-critical graph with n <= 8 (cached)."""
    cache = _cache_path("critical_n8.g6")
    if os.path.exists(cache):
        with open(cache, "r", encoding="ascii") as fh:
            return [line.strip() for line in fh if line.strip()]
    out = []
    for s in connected_n8:
        g = parse_graph6(s)
        if g.m and is_edge_delta_critical(g).is_critical:
            out.append(s)
    with open(cache, "w", encoding="ascii") as fh:
        fh.write("\n".join(out) + "\n")
    return out
