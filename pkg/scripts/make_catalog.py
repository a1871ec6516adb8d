#!/usr/bin/env python3
"""Regenerate src/listcolor/data/connected_n_le_6.g6: every connected graph
on 1..6 vertices, one representative per isomorphism class, as sorted graph6
lines.  Representatives are canonical: lexicographically least upper-triangle
bit vector over all vertex relabelings.

Cross-checked by tests/test_catalog.py against known counts and the
networkx atlas.  Requires numpy (dev dependency only).
"""

import itertools
import pathlib
import sys

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from listcolor.graphs import Graph, encode_graph6, is_connected  # noqa: E402

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "listcolor" / "data" / "connected_n_le_6.g6"


def pair_index(n):
    pairs = list(itertools.combinations(range(n), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    return pairs, idx


def canonical_reps(n):
    """Canonical upper-triangle bit rows for all graphs on n vertices."""
    pairs, idx = pair_index(n)
    m = len(pairs)
    total = 1 << m
    # all graphs as a bit matrix, row g = its pair-indicator vector
    bits = ((np.arange(total, dtype=np.uint32)[:, None] >> np.arange(m)) & 1).astype(np.uint8)
    # weights make lexicographic comparison a single integer comparison;
    # earliest pair = most significant
    weights = (1 << np.arange(m - 1, -1, -1, dtype=np.uint64))
    best = None
    for perm in itertools.permutations(range(n)):
        # column c of the permuted matrix is pair (perm[u], perm[v]) sorted
        cols = [idx[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        val = (bits[:, cols].astype(np.uint64) * weights).sum(axis=1)
        best = val if best is None else np.minimum(best, val)
    reps = np.unique(best)
    out = []
    for val in reps:
        edges = frozenset(
            pairs[i] for i in range(m) if (int(val) >> (m - 1 - i)) & 1
        )
        out.append(Graph(n, edges))
    return out


def main():
    lines = []
    for n in range(1, 7):
        if n == 1:
            graphs = [Graph(1, frozenset())]
        else:
            graphs = [g for g in canonical_reps(n) if is_connected(g)]
        lines.extend(sorted(encode_graph6(g) for g in graphs))
        print(f"n={n}: {len(graphs)} connected graphs")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} lines to {OUT}")


if __name__ == "__main__":
    main()
