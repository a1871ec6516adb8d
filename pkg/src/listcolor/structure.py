"""Structural discovery: blocks and their classification, triangles,
chorded cycles, theta subgraphs, degree-2 vertices, and the closed-
neighborhood contraction used by the theta recursion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, is_connected

BLOCK_COMPLETE = "Complete"
BLOCK_COMPLETE_BIPARTITE = "CompleteBipartite"
BLOCK_CYCLE = "Cycle"
BLOCK_OTHER = "Other"


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple  # of frozensets, deterministic order
    cut_vertices: frozenset


@dataclass(frozen=True)
class BlockClass:
    """Classification with priority Complete > CompleteBipartite > Cycle > Other.

    `parts` carries the bipartition (part containing vertex 0 first) and
    `cycle_order` a traversal for the two structured classes.
    """

    tag: str
    parts: Optional[tuple] = None
    cycle_order: Optional[tuple] = None


@dataclass(frozen=True)
class ThetaSubgraph:
    """Two endpoints joined by three internally disjoint paths."""

    endpoints: tuple
    paths: tuple  # three vertex sequences, each endpoints[0]..endpoints[1]

    @property
    def lengths(self) -> tuple:
        return tuple(len(p) - 1 for p in self.paths)

    def vertices(self) -> frozenset:
        out = set()
        for p in self.paths:
            out.update(p)
        return frozenset(out)

    def edge_set(self) -> frozenset:
        out = set()
        for p in self.paths:
            for a, b in zip(p, p[1:]):
                out.add((a, b) if a < b else (b, a))
        return frozenset(out)

    def validate(self, host: Graph, induced: bool = True) -> None:
        u, v = self.endpoints
        if u == v:
            raise ValueError("endpoints coincide")
        if len(self.paths) != 3:
            raise ValueError("need exactly three paths")
        interiors = []
        for p in self.paths:
            if p[0] != u or p[-1] != v:
                raise ValueError(f"path {p} does not join {u} and {v}")
            if len(set(p)) != len(p):
                raise ValueError(f"path {p} repeats a vertex")
            for a, b in zip(p, p[1:]):
                if not host.adjacent(a, b):
                    raise ValueError(f"({a},{b}) missing in host")
            interiors.append(set(p[1:-1]))
        if sum(1 for p in self.paths if len(p) == 2) > 1:
            raise ValueError("at most one path may have length 1")
        for i in range(3):
            for j in range(i + 1, 3):
                if interiors[i] & interiors[j]:
                    raise ValueError("paths share an interior vertex")
        if induced:
            verts = self.vertices()
            host_edges = frozenset(
                e for e in host.edges if e[0] in verts and e[1] in verts
            )
            if host_edges != self.edge_set():
                raise ValueError("subgraph is not induced in the host")


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------

def block_decomposition(g: Graph) -> BlockDecomposition:
    """Maximal 2-connected subgraphs and bridges, via lowpoint DFS.

    Isolated vertices belong to no block.  Blocks are reported as vertex
    sets sorted by their sorted member tuples.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    cuts = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1 or g.degree(root) == 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        estack = []
        while stack:
            v, pv, it = stack[-1]
            w = next(it, None)
            if w is not None:
                if w == pv:
                    continue
                if disc[w] == -1:
                    estack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                elif disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                members = set()
                while True:
                    e = estack.pop()
                    members.update(e)
                    if e == (u, v):
                        break
                blocks.append(frozenset(members))
                if u != root:
                    cuts.add(u)
        if root_children > 1:
            cuts.add(root)
    blocks.sort(key=lambda b: tuple(sorted(b)))
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def classify_block(b: Graph) -> BlockClass:
    n = b.n
    if b.edge_count == n * (n - 1) // 2:
        return BlockClass(BLOCK_COMPLETE)
    parts = _bipartition(b)
    if parts is not None:
        a, c = parts
        if b.edge_count == len(a) * len(c):
            first = a if 0 in a else c
            second = c if 0 in a else a
            return BlockClass(BLOCK_COMPLETE_BIPARTITE, parts=(first, second))
    if n >= 3 and is_connected(b) and all(b.degree(v) == 2 for v in range(n)):
        order = [0, min(b.neighbors(0))]
        while len(order) < n:
            a, prev = order[-1], order[-2]
            order.append(next(w for w in b.neighbors(a) if w != prev))
        return BlockClass(BLOCK_CYCLE, cycle_order=tuple(order))
    return BlockClass(BLOCK_OTHER)


def _bipartition(g: Graph):
    """(part0, part1) of a connected bipartite graph, else None."""
    if not is_connected(g) or g.n < 2:
        return None
    side = [-1] * g.n
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if side[w] == -1:
                side[w] = 1 - side[v]
                queue.append(w)
            elif side[w] == side[v]:
                return None
    zero = frozenset(v for v in range(g.n) if side[v] == 0)
    one = frozenset(range(g.n)) - zero
    if not zero or not one:
        return None
    return zero, one


# ---------------------------------------------------------------------------
# Triangles and chorded cycles
# ---------------------------------------------------------------------------

def find_triangle(g: Graph) -> Optional[frozenset]:
    for t in _triangles(g):
        return frozenset(t)
    return None


def _triangles(g: Graph):
    """All triangles as ascending triples, lexicographically ordered."""
    for u in range(g.n):
        above_u = g.adj[u] >> (u + 1) << (u + 1)
        m = above_u
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            common = above_u & g.adj[v] >> (v + 1) << (v + 1)
            c = common
            while c:
                lw = c & -c
                yield (u, v, lw.bit_length() - 1)
                c ^= lw


def find_chorded_cycle(g: Graph) -> Optional[tuple]:
    """Some shortest cycle having a chord, as (cycle sequence, chord).

    The chord is (cycle[0], cycle[l-1]) for some 2 < l < p.  For each edge,
    the shortest cycle in which that edge is a chord is the minimum total
    length of two internally disjoint paths between its ends that avoid the
    edge itself; minimize over edges, first edge in sorted order wins ties.
    """
    best = None
    for idx, (x, y) in enumerate(g.sorted_edges()):
        res = _two_disjoint_paths(g, x, y)
        if res is None:
            continue
        total = len(res[0]) + len(res[1]) - 2
        if best is None or total < best[0]:
            best = (total, idx, x, y, res)
    if best is None:
        return None
    _, _, x, y, (p1, p2) = best
    if p2[1] < p1[1]:
        p1, p2 = p2, p1
    cycle = tuple(p1 + list(reversed(p2[1:-1])))
    return cycle, (x, y)


def _two_disjoint_paths(g: Graph, x: int, y: int):
    """Two internally vertex-disjoint x-y paths avoiding the edge xy, with
    minimum total length; None if they do not exist.

    Min-cost flow of value 2 on the vertex-split digraph: v_in -> v_out of
    capacity 1 for interior vertices, each edge a pair of unit-cost arcs.
    """
    n = g.n
    size = 2 * n
    src, snk = 2 * x + 1, 2 * y  # x_out, y_in
    graph_arcs = [[] for _ in range(size)]  # per node: [to, cap, cost, rev]

    def arc(a, b, cap, cost):
        graph_arcs[a].append([b, cap, cost, len(graph_arcs[b])])
        graph_arcs[b].append([a, 0, -cost, len(graph_arcs[a]) - 1])

    for v in range(n):
        if v != x and v != y:
            arc(2 * v, 2 * v + 1, 1, 0)
    for u, v in g.sorted_edges():
        if (u, v) == (min(x, y), max(x, y)):
            continue
        arc(2 * u + 1, 2 * v, 1, 1)
        arc(2 * v + 1, 2 * u, 1, 1)

    flow_sent = 0
    for _ in range(2):
        # Bellman-Ford (queue form): residual costs can be negative
        dist = [None] * size
        in_q = [False] * size
        pre = [None] * size
        dist[src] = 0
        queue = deque([src])
        in_q[src] = True
        while queue:
            a = queue.popleft()
            in_q[a] = False
            for ai, e in enumerate(graph_arcs[a]):
                b, cap, cost, _ = e
                if cap > 0 and dist[a] is not None and (
                    dist[b] is None or dist[a] + cost < dist[b]
                ):
                    dist[b] = dist[a] + cost
                    pre[b] = (a, ai)
                    if not in_q[b]:
                        queue.append(b)
                        in_q[b] = True
        if dist[snk] is None:
            return None
        b = snk
        while b != src:
            a, ai = pre[b]
            graph_arcs[a][ai][1] -= 1
            rev = graph_arcs[a][ai][3]
            graph_arcs[b][rev][1] += 1
            b = a
        flow_sent += 1
    if flow_sent < 2:
        return None

    # decompose: two arc paths from x_out using saturated forward arcs
    used = set()
    paths = []
    for _ in range(2):
        node = src
        verts = [x]
        while node != snk:
            for ai, (b, cap, cost, _) in enumerate(graph_arcs[node]):
                if cost == 1 and cap == 0 and (node, ai) not in used:
                    used.add((node, ai))
                    node = b  # b is some v_in
                    verts.append(b // 2)
                    node = b + 1 if b != snk else b  # hop v_in -> v_out
                    break
            else:
                raise AssertionError("flow decomposition failed")
        paths.append(verts)
    return paths[0], paths[1]


# ---------------------------------------------------------------------------
# Theta subgraphs
# ---------------------------------------------------------------------------

def find_theta_1_2_r(g: Graph) -> Optional[ThetaSubgraph]:
    """An induced theta with lengths (1,2,r): a triangle x,y,z plus an
    induced y-z path avoiding x and its neighborhood.  Smallest r wins,
    ties resolved by triangle enumeration order.
    """
    best = None
    for tri in _triangles(g):
        for x in tri:
            y, z = sorted(set(tri) - {x})
            blocked = {x} | (set(g.neighbors(x)) - {y, z})
            path = _shortest_path_avoiding(g, y, z, blocked, banned_edge=(y, z))
            if path is None:
                continue
            r = len(path) - 1
            if best is None or r < best[0]:
                best = (r, ThetaSubgraph((y, z), ((y, z), (y, x, z), tuple(path))))
    return best[1] if best else None


def _shortest_path_avoiding(g: Graph, a: int, b: int, blocked, banned_edge):
    be = (min(banned_edge), max(banned_edge))
    parent = {a: None}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            path = []
            while v is not None:
                path.append(v)
                v = parent[v]
            return list(reversed(path))
        for w in g.neighbors(v):
            if w in blocked or w in parent:
                continue
            if (min(v, w), max(v, w)) == be:
                continue
            parent[w] = v
            queue.append(w)
    return None


def find_induced_theta(g: Graph, forbid_222: bool = False) -> Optional[ThetaSubgraph]:
    """Some induced theta subgraph, smallest vertex count first; with
    forbid_222 the (2,2,2) shape is skipped.
    """
    for m in range(4, g.n + 1):
        for p, q, r in _length_triples(m + 1):
            if forbid_222 and (p, q, r) == (2, 2, 2):
                continue
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    if g.adjacent(u, v) != (p == 1):
                        continue
                    paths = _grow_theta_paths(g, u, v, (p, q, r))
                    if paths is not None:
                        return ThetaSubgraph((u, v), paths)
    return None


def _length_triples(total: int):
    """Sorted triples p<=q<=r, sum=total, at most one equal to 1."""
    for p in range(1, total // 3 + 1):
        for q in range(max(p, 2), (total - p) // 2 + 1):
            r = total - p - q
            if r >= q:
                yield (p, q, r)


def _grow_theta_paths(g: Graph, u: int, v: int, lengths):
    """DFS for three internally disjoint induced paths u..v of the given
    lengths whose union is an induced subgraph; candidate vertices ascending.
    """
    placed = {u, v}
    paths = []

    def extend(pi: int) -> bool:
        if pi == 3:
            return True
        length = lengths[pi]
        if length == 1:
            paths.append((u, v))
            if extend(pi + 1):
                return True
            paths.pop()
            return False
        # equal-length paths in ascending first-interior order kill duplicates
        floor = 0
        if pi > 0 and lengths[pi - 1] == length and len(paths[pi - 1]) > 2:
            floor = paths[pi - 1][1] + 1
        return grow(pi, length, [u], floor)

    def grow(pi: int, length: int, seq: list, floor: int) -> bool:
        pos = len(seq)  # next interior position, 1-based
        prev = seq[-1]
        last = pos == length - 1
        for w in range(floor, g.n):
            if w in placed or not g.adjacent(w, prev):
                continue
            ok = True
            for z in placed:
                if z == prev:
                    continue
                if g.adjacent(w, z) and not (z == v and last):
                    ok = False
                    break
            if not ok:
                continue
            if last and not g.adjacent(w, v):
                continue
            seq.append(w)
            placed.add(w)
            if last:
                paths.append(tuple(seq) + (v,))
                if extend(pi + 1):
                    return True
                paths.pop()
            else:
                if grow(pi, length, seq, 0):
                    return True
            placed.remove(w)
            seq.pop()
        return False

    if extend(0):
        return tuple(paths)
    return None


def find_degree2_vertex(g: Graph) -> Optional[int]:
    for v in range(g.n):
        if g.degree(v) == 2:
            return v
    return None


def contract_closed_neighborhood(g: Graph, v: int) -> tuple:
    """Identify a degree-2 vertex v with both neighbors; parallel edges merge.

    Returns (contracted graph, mapping) where mapping[old] = new; the merged
    vertex gets the last index.  The two neighbors must be nonadjacent or
    the merge would need a loop.
    """
    if g.degree(v) != 2:
        raise ValueError(f"vertex {v} has degree {g.degree(v)}, need 2")
    n1, n2 = g.neighbors(v)
    if g.adjacent(n1, n2):
        raise ValueError("neighbors are adjacent; contraction would create a loop")
    merged = {v, n1, n2}
    others = sorted(set(range(g.n)) - merged)
    new_index = {w: i for i, w in enumerate(others)}
    star = len(others)
    for w in merged:
        new_index[w] = star
    edges = set()
    for a, b in g.edges:
        ma, mb = new_index[a], new_index[b]
        if ma != mb:
            edges.add((min(ma, mb), max(ma, mb)))
    mapping = tuple(new_index[w] for w in range(g.n))
    return Graph(g.n - 2, frozenset(edges)), mapping
