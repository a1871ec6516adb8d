"""Exact coloring machinery: chromatic number, constrained colorings,
list-coloring counting, forced-distinct pairs, and the closure that joins
every pair forced apart in all bounded-palette colorings.

Colors are positive integers 1..t.  A coloring is a plain tuple indexed by
vertex; uniqueness questions are answered by exhaustive counting with a cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from time import monotonic
from typing import Iterable, Mapping, Optional

from . import kernel
from .errors import BudgetExceededError
from .graphs import Graph, VertexSet, add_edge, induced_subgraph

Coloring = tuple  # vertex -> color, 1-based


class SearchBudget:
    """Node/time allowance shared by all kernel calls of one operation.

    Mutable on purpose: nested calls draw from the same pool and the first
    overdraft raises BudgetExceededError instead of returning a wrong answer.
    """

    def __init__(self, nodes: Optional[int] = None, seconds: Optional[float] = None):
        self.nodes = nodes
        self.deadline = monotonic() + seconds if seconds else 0.0

    def run(self, adj, allowed, *, cap, want=0, symmetry=False, backend=None):
        if self.nodes is not None and self.nodes <= 0:
            raise BudgetExceededError("node budget exhausted")
        count, found, used, hit = kernel.solve_colorings(
            adj,
            allowed,
            cap=cap,
            want=want,
            symmetry=symmetry,
            budget_nodes=self.nodes or 0,
            deadline=self.deadline,
            backend=backend,
        )
        if self.nodes is not None:
            self.nodes -= used
        if hit:
            raise BudgetExceededError("search budget exceeded")
        return count, found


def _solve(g: Graph, allowed, *, cap, want=0, symmetry=False, budget=None):
    budget = budget or SearchBudget()
    return budget.run(g.adj, allowed, cap=cap, want=want, symmetry=symmetry)


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex color lists; the palette is always recomputed, never trusted."""

    lists: tuple

    def __post_init__(self):
        object.__setattr__(self, "lists", tuple(frozenset(l) for l in self.lists))
        for v, l in enumerate(self.lists):
            if not l:
                raise ValueError(f"empty color list at vertex {v}")
            if any(not isinstance(c, int) or c < 1 for c in l):
                raise ValueError(f"colors must be positive integers, got {sorted(l)} at vertex {v}")

    @cached_property
    def palette(self) -> frozenset:
        out = frozenset()
        for l in self.lists:
            out |= l
        return out

    @property
    def t(self) -> int:
        return len(self.palette)

    @property
    def k_profile(self) -> tuple:
        return tuple(len(l) for l in self.lists)

    @property
    def n(self) -> int:
        return len(self.lists)

    def masks(self) -> tuple:
        return tuple(sum(1 << (c - 1) for c in l) for l in self.lists)

    @classmethod
    def from_dict(cls, d: Mapping, n: int) -> "ListAssignment":
        lists = []
        for v in range(n):
            key = v if v in d else str(v)
            if key not in d:
                raise ValueError(f"missing list for vertex {v}")
            lists.append(frozenset(int(c) for c in d[key]))
        return cls(tuple(lists))

    def to_dict(self) -> dict:
        return {str(v): sorted(l) for v, l in enumerate(self.lists)}


@dataclass(frozen=True)
class ColorConstraints:
    """Partial color fixings plus pairs that must share a color."""

    fixed: tuple = ()
    equal_pairs: tuple = ()

    @classmethod
    def make(cls, fixed: Optional[Mapping] = None, equal_pairs: Optional[Iterable] = None):
        fx = tuple(sorted((int(v), int(c)) for v, c in (fixed or {}).items()))
        eq = tuple(sorted(tuple(sorted(p)) for p in (equal_pairs or ())))
        return cls(fx, eq)

    def __bool__(self):
        return bool(self.fixed or self.equal_pairs)

    def validate(self, g: Graph, t: int):
        for v, c in self.fixed:
            if not 0 <= v < g.n:
                raise ValueError(f"fixed vertex {v} out of range")
            if not 1 <= c <= t:
                raise ValueError(f"fixed color {c} outside palette 1..{t}")
        for u, v in self.equal_pairs:
            if u == v or not (0 <= u < g.n and 0 <= v < g.n):
                raise ValueError(f"bad equal pair ({u},{v})")
            if g.adjacent(u, v):
                raise ValueError(f"equal pair ({u},{v}) is adjacent")


def is_proper_coloring(g: Graph, colors) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges)


def coloring_in_lists(L: ListAssignment, colors) -> bool:
    return all(colors[v] in L.lists[v] for v in range(L.n))


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def chromatic_number(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    """Exact chromatic number by iterative deepening on the palette size."""
    for t in range(1, g.n + 1):
        if find_coloring(g, t, budget=budget) is not None:
            return t
    raise AssertionError("unreachable: n colors always suffice")


def find_coloring(
    g: Graph,
    t: int,
    cons: Optional[ColorConstraints] = None,
    budget: Optional[SearchBudget] = None,
) -> Optional[Coloring]:
    """First proper coloring with colors in 1..t meeting the constraints.

    Deterministic under the kernel's fixed branching order.  Color-symmetry
    breaking is applied only when there are no constraints; with constraints
    the full space is searched so "no coloring" answers stay exact.
    """
    if t < 1:
        raise ValueError("palette size must be positive")
    full = (1 << t) - 1
    if cons is None or not cons:
        count, found = _solve(g, (full,) * g.n, cap=1, want=1, symmetry=True, budget=budget)
        return found[0] if found else None

    cons.validate(g, t)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in cons.equal_pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    reps = sorted({find(v) for v in range(g.n)})
    rep_index = {r: i for i, r in enumerate(reps)}
    cls_of = [rep_index[find(v)] for v in range(g.n)]

    qedges = set()
    for u, v in g.edges:
        cu, cv = cls_of[u], cls_of[v]
        if cu == cv:
            return None  # merged class contains an edge: unsatisfiable
        qedges.add((min(cu, cv), max(cu, cv)))
    q = Graph(len(reps), frozenset(qedges))

    masks = [full] * q.n
    for v, c in cons.fixed:
        bit = 1 << (c - 1)
        if not masks[cls_of[v]] & bit:
            return None  # conflicting fixed colors inside one class
        masks[cls_of[v]] = bit
    count, found = _solve(q, tuple(masks), cap=1, want=1, budget=budget)
    if not found:
        return None
    qcol = found[0]
    return tuple(qcol[cls_of[v]] for v in range(g.n))


def count_list_colorings(
    g: Graph,
    L: ListAssignment,
    cap: int,
    budget: Optional[SearchBudget] = None,
) -> int:
    """Exact number of proper colorings drawn from the lists, saturated at cap."""
    count, _ = _list_solve(g, L, cap, 0, budget)
    return count


def list_colorings(
    g: Graph,
    L: ListAssignment,
    cap: int,
    budget: Optional[SearchBudget] = None,
) -> tuple:
    """(capped count, first colorings in search order, up to cap)."""
    return _list_solve(g, L, cap, cap, budget)


def _list_solve(g, L, cap, want, budget):
    if L.n != g.n:
        raise ValueError(f"assignment covers {L.n} vertices, graph has {g.n}")
    return _solve(g, L.masks(), cap=cap, want=want, budget=budget)


def forced_distinct(
    g: Graph,
    u: int,
    v: int,
    t: int,
    budget: Optional[SearchBudget] = None,
) -> Optional[bool]:
    """True iff u and v get different colors in every proper coloring with
    colors in 1..t.  Returns None when no such coloring exists at all, since
    the question degenerates there.
    """
    if u == v:
        raise ValueError("vertices must be distinct")
    if g.adjacent(u, v):
        raise ValueError(f"({u},{v}) is an edge; forced-distinct is about independent pairs")
    if find_coloring(g, t, budget=budget) is None:
        return None
    return _forced_distinct_feasible(g, u, v, t, budget)


def _forced_distinct_feasible(g, u, v, t, budget):
    cons = ColorConstraints.make(equal_pairs=[(u, v)])
    return find_coloring(g, t, cons, budget=budget) is None


def gstar_closure(
    g: Graph,
    t: int,
    *,
    single_pass: bool = False,
    budget: Optional[SearchBudget] = None,
) -> Graph:
    """Join every independent pair forced to differ in all colorings with
    colors 1..t; by default iterate sweeps to a fixed point (added edges can
    force new pairs), with single_pass=True doing one sweep over the input.
    """
    if find_coloring(g, t, budget=budget) is None:
        raise ValueError(f"graph has no coloring with {t} colors")
    cur = g
    while True:
        forced = [
            (u, v)
            for u in range(cur.n)
            for v in range(u + 1, cur.n)
            if not cur.adjacent(u, v) and _forced_distinct_feasible(cur, u, v, t, budget)
        ]
        if not forced:
            break
        for u, v in forced:
            cur = add_edge(cur, u, v)
        if single_pass:
            break
    return cur


def reduce_monochromatic_part(
    g: Graph,
    L: ListAssignment,
    c: Coloring,
    X: VertexSet,
    i: int,
) -> tuple:
    """Remove a monochromatic independent part X (the full class of color i)
    and shrink every remaining list by one: drop i where present, otherwise
    drop some color other than the vertex's own.

    Returns (subgraph, vmap, reduced assignment); the caller guarantees that
    c is the unique coloring from L.  The restriction of c remains a proper
    choice from the reduced lists.
    """
    X = frozenset(X)
    if not X <= frozenset(range(g.n)):
        raise ValueError("X not contained in the vertex set")
    if X == frozenset(range(g.n)):
        raise ValueError("X must leave at least one vertex")
    for u in X:
        for w in X:
            if u < w and g.adjacent(u, w):
                raise ValueError(f"X is not independent: edge ({u},{w})")
        if c[u] != i:
            raise ValueError(f"vertex {u} in X has color {c[u]}, expected {i}")
    if not is_proper_coloring(g, c) or not coloring_in_lists(L, c):
        raise ValueError("c is not a proper coloring from L")
    rest = sorted(set(range(g.n)) - X)
    for v in rest:
        if c[v] == i:
            raise ValueError(f"vertex {v} outside X also has color {i}; X must be the full class")
        if len(L.lists[v]) < 2:
            raise ValueError(f"list at vertex {v} too small to reduce")
    if not X:
        return g, tuple(range(g.n)), L

    sub, vmap = induced_subgraph(g, frozenset(rest))
    reduced = []
    for v in vmap:
        l = L.lists[v]
        if i in l:
            reduced.append(l - {i})
        else:
            j = min(l - {c[v]})
            reduced.append(l - {j})
    return sub, vmap, ListAssignment(tuple(reduced))
