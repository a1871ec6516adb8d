"""Shared fixtures and independent oracles.

The oracles deliberately avoid the library's own search machinery: coloring
counts come from full Cartesian products, cycles from path DFS, isomorphism
from permutation scans.  They are slow and only used at tiny sizes.
"""

from __future__ import annotations

import itertools
from pathlib import Path

import pytest

from listcolor.graphs import Graph, parse_graph6

CATALOG = Path(__file__).resolve().parents[1] / "src" / "listcolor" / "data" / "connected_n_le_6.g6"


@pytest.fixture(scope="session")
def catalog_lines():
    return [l.strip() for l in CATALOG.read_text().splitlines() if l.strip()]


@pytest.fixture(scope="session")
def catalog_graphs(catalog_lines):
    return [parse_graph6(l) for l in catalog_lines]


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def naive_count_list_colorings(g: Graph, lists) -> int:
    """Cartesian-product enumeration; lists is a sequence of color sets."""
    count = 0
    for choice in itertools.product(*[sorted(l) for l in lists]):
        if all(choice[u] != choice[v] for u, v in g.edges):
            count += 1
    return count


def naive_colorings(g: Graph, t: int):
    """All proper colorings with colors 1..t."""
    out = []
    for choice in itertools.product(range(1, t + 1), repeat=g.n):
        if all(choice[u] != choice[v] for u, v in g.edges):
            out.append(choice)
    return out


def all_cycle_tuples(g: Graph):
    """Every cycle once, as a vertex tuple starting at its least vertex."""
    cycles = set()

    def dfs(path):
        v = path[-1]
        start = path[0]
        for w in g.neighbors(v):
            if w == start and len(path) >= 3:
                if path[1] < path[-1]:  # one direction per cycle
                    cycles.add(tuple(path))
            elif w > start and w not in path:
                dfs(path + [w])

    for s in range(g.n):
        dfs([s])
    return cycles


def cycle_has_chord(g: Graph, cyc) -> bool:
    p = len(cyc)
    for i in range(p):
        for j in range(i + 2, p):
            if i == 0 and j == p - 1:
                continue
            if g.adjacent(cyc[i], cyc[j]):
                return True
    return False


def is_isomorphic_small(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    for pm in itertools.permutations(range(a.n)):
        if all(b.adjacent(pm[u], pm[v]) for u, v in a.edges):
            return True
    return False


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)
