"""Immutable simple graphs on vertices 0..n-1, graph6 I/O, DOT export.

Vertices are dense integers so adjacency can be kept as one bitmask row per
vertex; every other module relies on that for fast backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional

from .errors import GraphParseError

# A vertex subset is just a frozenset of indices in [0, n).
VertexSet = frozenset

# Parsing guard; the package targets desk-scale graphs (soft limit n <= 64).
_MAX_PARSE_VERTICES = 1024


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite undirected simple graph. Immutable and hashable."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"graph must have at least one vertex, got n={self.n}")
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} out of range or not normalized for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.append(_normalize_edge(u, v))
        if len(norm) != len(set(norm)):
            raise ValueError("duplicate edge in input")
        return cls(n, frozenset(norm))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Bitmask adjacency rows: bit v of adj[u] is set iff uv is an edge."""
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one line of graph6 into a Graph.

    Layout: N(n) followed by the upper triangle of the adjacency matrix in
    column order ((0,1),(0,2),(1,2),(0,3),...), packed big-endian into 6-bit
    groups, each stored as one printable byte (value + 63).  Padding bits
    must be zero.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 line")
    data = s.encode("ascii", errors="replace")
    for i, b in enumerate(data):
        if not (63 <= b <= 126):
            raise GraphParseError(f"character {chr(b)!r} outside graph6 alphabet", offset=i)

    pos = 0
    if data[0] == 126:  # '~': long form
        if len(data) >= 2 and data[1] == 126:
            raise GraphParseError("8-byte vertex counts not supported", offset=1)
        if len(data) < 4:
            raise GraphParseError("truncated long-form vertex count", offset=len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n == 0:
        raise GraphParseError("graph has no vertices", offset=0)
    if n > _MAX_PARSE_VERTICES:
        raise GraphParseError(f"vertex count {n} exceeds parser limit", offset=0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise GraphParseError(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(data) - pos}",
            offset=pos,
        )

    edges = []
    bit = 0
    u, v = 0, 1  # column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
    for i in range(pos, len(data)):
        chunk = data[i] - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (chunk >> k) & 1:
                    raise GraphParseError("nonzero padding bit", offset=i)
                continue
            if (chunk >> k) & 1:
                edges.append((u, v))
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, frozenset(edges))


def encode_graph6(g: Graph) -> str:
    """Inverse of parse_graph6 (short form for n <= 62, long form above)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        raise ValueError(f"n={n} too large for supported graph6 forms")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.adjacent(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [parse_graph6(line) for line in lines if line.strip()]


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def to_dot(g: Graph, labels: Optional[Mapping[int, str]] = None) -> str:
    """Render as an undirected DOT document, vertices and edges ascending."""
    if labels is not None:
        missing = [v for v in range(g.n) if v not in labels]
        if missing:
            raise ValueError(f"labels missing for vertices {missing}")
    out = ["graph G {"]
    for v in range(g.n):
        if labels is not None:
            esc = str(labels[v]).replace("\\", "\\\\").replace('"', '\\"')
            out.append(f'  {v} [label="{esc}"];')
        else:
            out.append(f"  {v};")
    for u, v in g.sorted_edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Elementary structural queries
# ---------------------------------------------------------------------------

def max_degree(g: Graph) -> int:
    return max(g.degree(v) for v in range(g.n))


def connected_components(g: Graph) -> list[frozenset]:
    """Components as vertex sets, ordered by smallest member."""
    seen = 0
    comps = []
    for root in range(g.n):
        if seen >> root & 1:
            continue
        comp = 1 << root
        frontier = [root]
        while frontier:
            u = frontier.pop()
            for w in g.neighbors(u):
                if not comp >> w & 1:
                    comp |= 1 << w
                    frontier.append(w)
        seen |= comp
        comps.append(frozenset(_bits(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_2connected(g: Graph) -> bool:
    """True iff n >= 3, connected, and no cut vertex. K2 is not 2-connected."""
    if g.n < 3 or not is_connected(g):
        return False
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        sub, _ = induced_subgraph(g, frozenset(rest))
        if not is_connected(sub):
            return False
    return True


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on s, relabeled 0..|s|-1.

    Returns (subgraph, vmap) where vmap[new_index] = original vertex; the
    original vertices are taken in ascending order.
    """
    if not s:
        raise ValueError("induced subgraph of empty vertex set")
    vmap = tuple(sorted(s))
    if not all(0 <= v < g.n for v in vmap):
        raise ValueError("vertex set not contained in the graph")
    index = {v: i for i, v in enumerate(vmap)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(vmap), edges), vmap


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """New graph with edge uv added; value semantics, input untouched."""
    if u == v:
        raise ValueError(f"cannot add loop at {u}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"edge ({u},{v}) out of range")
    if g.adjacent(u, v):
        raise ValueError(f"edge ({u},{v}) already present")
    return Graph(g.n, g.edges | {_normalize_edge(u, v)})


# ---------------------------------------------------------------------------
# Constructors used throughout tests and the synthesis pipeline
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, frozenset(_normalize_edge(i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset((u, a + v) for u in range(a) for v in range(b)))


def theta_graph(p: int, q: int, r: int) -> Graph:
    """Two endpoints joined by three internally disjoint paths.

    Canonical order: endpoint u=0, endpoint v=1, then the interior of each
    path in argument order, each path written from u towards v.
    """
    lengths = (p, q, r)
    if min(lengths) < 1:
        raise ValueError("path lengths must be positive")
    if sum(1 for x in lengths if x == 1) > 1:
        raise ValueError("at most one path may have length 1")
    edges = []
    nxt = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append(_normalize_edge(prev, nxt))
            prev = nxt
            nxt += 1
        edges.append(_normalize_edge(prev, 1))
    return Graph.from_edges(nxt, edges)


def theta_paths(p: int, q: int, r: int) -> list[list[int]]:
    """Vertex sequences (u..v) of the three paths of theta_graph(p, q, r)."""
    paths = []
    nxt = 2
    for length in (p, q, r):
        inner = list(range(nxt, nxt + length - 1))
        paths.append([0] + inner + [1])
        nxt += length - 1
    return paths
