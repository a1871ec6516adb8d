"""Exhaustive desk-scale search: decide unique (k,t)-list colorability by
enumeration, compute the uniquely-list-chromatic profile over bounded k and
t, and scan for counterexample candidates to the max-degree-plus-one bound.

Assignments are enumerated modulo color relabeling: only the representative
whose concatenated sorted lists are lexicographically least in its orbit is
emitted.  Enumeration is depth-first over vertices with surjectivity and
canonicality pruning, so each t is searched independently (no monotonicity
in t is ever assumed).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Optional

from .coloring import ListAssignment, SearchBudget, chromatic_number
from .errors import BudgetExceededError
from .graphs import Graph, encode_graph6, max_degree
from .structure import BLOCK_CYCLE, classify_block


@dataclass(frozen=True)
class UniquenessScan:
    """Outcome of one (k,t) scan: a verified witness, or none with a flag
    telling proof-of-absence apart from a budget stop."""

    witness: Optional[ListAssignment]
    exhausted: bool


@dataclass(frozen=True)
class ChiUResult:
    k: int
    t_min: int  # 0 = no witness in the searched range
    witness: Optional[ListAssignment]
    searched_t_range: tuple  # inclusive (lo, hi); empty when lo > hi
    exhaustive: bool


@dataclass(frozen=True)
class ChiUSummary:
    per_k: tuple
    max_t_min: int
    t_truncated: bool  # some k reported 0 without covering every feasible t


@dataclass(frozen=True)
class ConjectureReport:
    graph6: str
    delta_plus_1: int
    per_k: tuple  # ChiUResult over t <= delta_plus_1
    probes: tuple  # ChiUResult over (delta_plus_1, k*n] for k with t_min=0
    status: str  # consistent | equality | counterexample-candidate | inconclusive
    is_complete: bool
    is_odd_cycle: bool


# ---------------------------------------------------------------------------
# Canonical enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _perm_tables(k: int, t: int):
    """k-subsets of 1..t in lex order, plus one index-translation table per
    non-identity color permutation fixing {1..k} setwise (the only
    permutations that can still tie after the first vertex's forced list).
    """
    subsets = tuple(combinations(range(1, t + 1), k))
    index = {s: i for i, s in enumerate(subsets)}
    identity = tuple(range(1, t + 1))
    tables = []
    for head in permutations(range(1, k + 1)):
        for tail in permutations(range(k + 1, t + 1)):
            pi = head + tail
            if pi == identity:
                continue
            tables.append(
                tuple(index[tuple(sorted(pi[c - 1] for c in s))] for s in subsets)
            )
    return subsets, tuple(tables)


def _raw_assignments(n: int, k: int, t: int, v1_index: Optional[int] = None):
    """Canonical representatives as tuples of sorted k-tuples, DFS order.

    The first vertex always gets (1..k): anything else maps below it under
    some relabeling.  A prefix is abandoned when an active permutation sends
    it strictly lower, or when the unused colors cannot fit in the remaining
    list slots.  v1_index restricts the second vertex to one subset (used to
    split the space into deterministic chunks).
    """
    if k < 1:
        raise ValueError("list size k must be >= 1")
    if t < k:
        raise ValueError(f"palette t={t} cannot host {k}-subsets")
    if n * k < t:
        return
    subsets, perms = _perm_tables(k, t)
    masks = tuple(sum(1 << (c - 1) for c in s) for s in subsets)
    full = (1 << t) - 1
    nsub = len(subsets)
    chosen = [0] * n

    def rec(i: int, used: int, active) -> Iterator:
        if i == n:
            if used == full:
                yield tuple(subsets[ci] for ci in chosen)
            return
        slots_after = (n - i - 1) * k
        lo, hi = (0, nsub)
        if i == 1 and v1_index is not None:
            lo, hi = v1_index, v1_index + 1
        for ci in range(lo, hi):
            nact = []
            prune = False
            for table in active:
                img = table[ci]
                if img < ci:
                    prune = True
                    break
                if img == ci:
                    nact.append(table)
            if prune:
                continue
            nused = used | masks[ci]
            if t - bin(nused).count("1") > slots_after:
                continue
            chosen[i] = ci
            yield from rec(i + 1, nused, nact)

    if t - k > (n - 1) * k:
        return
    chosen[0] = 0
    yield from rec(1, masks[0], perms)


def enumerate_assignments(g: Graph, k: int, t: int) -> Iterator[ListAssignment]:
    """Every (k,t)-list assignment on g's vertices whose lists union to
    exactly {1..t}, one representative per color-relabeling orbit."""
    for raw in _raw_assignments(g.n, k, t):
        yield ListAssignment(tuple(frozenset(s) for s in raw))


# ---------------------------------------------------------------------------
# Uniqueness scans
# ---------------------------------------------------------------------------

def _scan_stream(g: Graph, stream, budget: Optional[SearchBudget]):
    budget = budget or SearchBudget()
    try:
        for raw in stream:
            masks = tuple(sum(1 << (c - 1) for c in s) for s in raw)
            count, _ = budget.run(g.adj, masks, cap=2)
            if count == 1:
                return raw, True
        return None, True
    except BudgetExceededError:
        return None, False


def _chunk_worker(args):
    n, edges, k, t, chunk, nodes = args
    g = Graph(n, frozenset(edges))
    budget = SearchBudget(nodes=nodes) if nodes else None
    raw, exhausted = _scan_stream(g, _raw_assignments(n, k, t, v1_index=chunk), budget)
    return chunk, raw, exhausted


def is_uniquely_k_t(
    g: Graph,
    k: int,
    t: int,
    budget: Optional[SearchBudget] = None,
    jobs: int = 1,
) -> UniquenessScan:
    """First canonical (k,t)-assignment with exactly one list coloring, or
    the exhaustion/budget verdict.  With jobs > 1 the space is split into
    contiguous chunks by the second vertex's list and merged by lowest chunk
    first, so the outcome is independent of worker scheduling (node budgets
    are divided evenly across chunks; time budgets are honored only in the
    sequential path).
    """
    if k < 1:
        raise ValueError("list size k must be >= 1")
    if t < k or g.n * k < t:
        return UniquenessScan(None, True)
    if t > g.n:
        # Proved empty without enumerating: in a unique list coloring every
        # non-chosen list color must appear on a neighbor (otherwise
        # recoloring that vertex yields a second coloring), so the whole
        # palette lies inside the coloring's image, of size at most n.
        return UniquenessScan(None, True)
    if jobs > 1 and g.n >= 2:
        return _parallel_scan(g, k, t, budget, jobs)
    raw, exhausted = _scan_stream(g, _raw_assignments(g.n, k, t), budget)
    witness = ListAssignment(tuple(frozenset(s) for s in raw)) if raw else None
    return UniquenessScan(witness, exhausted)


def _parallel_scan(g, k, t, budget, jobs):
    subsets, _ = _perm_tables(k, t)
    nchunks = len(subsets)
    per_chunk = None
    if budget is not None and budget.nodes is not None:
        per_chunk = max(1, budget.nodes // nchunks)
    args = [
        (g.n, tuple(g.edges), k, t, chunk, per_chunk) for chunk in range(nchunks)
    ]
    results = {}
    try:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk, raw, exhausted in pool.map(_chunk_worker, args):
                results[chunk] = (raw, exhausted)
    except (ImportError, OSError):  # no subprocess support: degrade gracefully
        for a in args:
            chunk, raw, exhausted = _chunk_worker(a)
            results[chunk] = (raw, exhausted)
    exhausted_all = all(results[c][1] for c in range(nchunks))
    for c in range(nchunks):
        raw = results[c][0]
        if raw is not None:
            witness = ListAssignment(tuple(frozenset(s) for s in raw))
            return UniquenessScan(witness, exhausted_all)
    return UniquenessScan(None, exhausted_all)


def brute_force_u2lc(g: Graph, budget: Optional[SearchBudget] = None) -> bool:
    """Oracle: does some (2, max{3, chi})-assignment have a unique coloring?
    Raises rather than answer from a truncated search."""
    t = max(3, chromatic_number(g, budget))
    scan = is_uniquely_k_t(g, 2, t, budget=budget)
    if not scan.exhausted and scan.witness is None:
        raise BudgetExceededError("oracle scan truncated; verdict unavailable")
    return scan.witness is not None


# ---------------------------------------------------------------------------
# Uniquely-list-chromatic profile
# ---------------------------------------------------------------------------

def chi_u_k(
    g: Graph,
    k: int,
    t_max: int,
    budget: Optional[SearchBudget] = None,
    allow_empty: bool = False,
) -> ChiUResult:
    """Minimum t in [start, t_max] admitting a unique (k,t) witness, where
    start is k+1 (or the chromatic number when k=1); 0 when there is none.
    Every t is searched independently.
    """
    if k < 1:
        raise ValueError("list size k must be >= 1")
    start = chromatic_number(g, budget) if k == 1 else k + 1
    if t_max < start and not allow_empty:
        raise ValueError(f"t_max={t_max} below the scan start {start}")
    exhaustive = True
    for t in range(start, t_max + 1):
        scan = is_uniquely_k_t(g, k, t, budget=budget)
        if scan.witness is not None:
            assert scan.witness.t == t and all(x == k for x in scan.witness.k_profile)
            return ChiUResult(k, t, scan.witness, (start, t), exhaustive)
        if not scan.exhausted:
            exhaustive = False
    return ChiUResult(k, 0, None, (start, t_max), exhaustive)


def chi_u(
    g: Graph,
    k_max: int,
    t_max: int,
    budget: Optional[SearchBudget] = None,
) -> ChiUSummary:
    """Per-k minima for k = 1..k_max; the reported maximum is only a lower
    bound on the uniquely-list-chromatic number since k is truncated."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    per_k = tuple(chi_u_k(g, k, t_max, budget) for k in range(1, k_max + 1))
    max_t = max((r.t_min for r in per_k), default=0)
    t_truncated = any(
        r.t_min == 0 and (not r.exhaustive or t_max < r.k * g.n) for r in per_k
    )
    return ChiUSummary(per_k, max_t, t_truncated)


def conjecture_check(
    g: Graph,
    k_max: int,
    budget: Optional[SearchBudget] = None,
    t_probe_max: Optional[int] = None,
) -> ConjectureReport:
    """Scan t up to max degree + 1 for each k, then hunt beyond that bound
    for any k that came back empty.  A candidate needs an exhaustive empty
    range below the bound plus an actual witness above it.
    """
    delta1 = max_degree(g) + 1
    per_k = tuple(
        chi_u_k(g, k, delta1, budget, allow_empty=True) for k in range(1, k_max + 1)
    )
    probes = []
    for r in per_k:
        if r.t_min != 0:
            continue
        lo = max(delta1 + 1, r.searched_t_range[0])
        hi = t_probe_max if t_probe_max is not None else r.k * g.n
        probes.append(chi_u_k_range(g, r.k, lo, hi, budget))
    probes = tuple(probes)

    candidates = [
        p
        for p in probes
        if p.t_min > 0 and next(r for r in per_k if r.k == p.k).exhaustive
    ]
    if candidates:
        status = "counterexample-candidate"
    elif any(not r.exhaustive for r in per_k) or any(not p.exhaustive for p in probes):
        status = "inconclusive"
    elif max((r.t_min for r in per_k), default=0) == delta1:
        status = "equality"
    else:
        status = "consistent"

    n = g.n
    complete = g.edge_count == n * (n - 1) // 2
    odd_cycle = n >= 3 and n % 2 == 1 and classify_block(g).tag == BLOCK_CYCLE
    return ConjectureReport(
        encode_graph6(g), delta1, per_k, probes, status, complete, odd_cycle
    )


def chi_u_k_range(
    g: Graph,
    k: int,
    lo: int,
    hi: int,
    budget: Optional[SearchBudget] = None,
) -> ChiUResult:
    """chi_u_k over an explicit inclusive t range (used for probing above
    the max-degree bound); an empty range is exhausted vacuously."""
    exhaustive = True
    for t in range(lo, hi + 1):
        scan = is_uniquely_k_t(g, k, t, budget=budget)
        if scan.witness is not None:
            return ChiUResult(k, t, scan.witness, (lo, t), exhaustive)
        if not scan.exhausted:
            exhaustive = False
    return ChiUResult(k, 0, None, (lo, hi), exhaustive)
