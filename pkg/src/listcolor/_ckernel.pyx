# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of listcolor._pykernel.

Same search tree, same order, same results; restricted to n <= 64 vertices
and <= 64 colors so masks fit in one machine word.  The dispatcher in
listcolor.kernel falls back to the pure-Python kernel outside that range.
"""

from libc.stdlib cimport free, malloc
from time import monotonic

BACKEND = "cython"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64


def solve_colorings(adj, allowed, cap, want, symmetry, budget_nodes, deadline):
    """See listcolor._pykernel.solve_colorings for the contract."""
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled kernel limited to 64 vertices")
    cdef int sym = 1 if symmetry else 0
    cdef long long cap_c = cap
    cdef long long want_c = want
    cdef long long budget = budget_nodes if budget_nodes else 0
    cdef double deadline_c = deadline if deadline else 0.0

    # one arena: adj | cand | per-depth snapshots | rest | used (depth <= n)
    cdef u64 *arena = <u64 *> malloc((n * n + 4 * n) * sizeof(u64))
    cdef int *iarena = <int *> malloc(2 * n * sizeof(int))
    if arena == NULL or iarena == NULL:
        free(<void *> arena)
        free(<void *> iarena)
        raise MemoryError()
    cdef u64 *adj_c = arena
    cdef u64 *cand = arena + n
    cdef u64 *snap = arena + 2 * n
    cdef u64 *frame_rest = arena + 2 * n + n * n
    cdef u64 *frame_used = arena + 3 * n + n * n
    cdef int *frame_v = iarena
    cdef int *color = iarena + n

    cdef int i, v, u, best, best_pc, pc, depth
    cdef u64 branch, bit, neigh, low, used_mask, inv
    cdef long long count = 0, nodes = 0
    cdef bint budget_hit = False, descend = True, have_move
    cdef int unassigned = n
    found = []

    for i in range(n):
        adj_c[i] = <u64> adj[i]
        cand[i] = <u64> allowed[i]
        color[i] = 0
    used_mask = 0
    depth = 0
    best = 0
    bit = 0

    try:
        while True:
            have_move = False
            if descend:
                if unassigned == 0:
                    count += 1
                    if <long long> len(found) < want_c:
                        found.append(tuple([color[i] for i in range(n)]))
                    if count >= cap_c:
                        break
                    descend = False
                    continue
                best = -1
                best_pc = 1 << 30
                for v in range(n):
                    if color[v] == 0:
                        pc = __builtin_popcountll(cand[v])
                        if pc < best_pc:
                            best = v
                            best_pc = pc
                            if pc == 0:
                                break
                if best_pc == 0:
                    descend = False
                    continue
                branch = cand[best]
                if sym:
                    branch &= used_mask | (~used_mask & (used_mask + 1))
                    if branch == 0:
                        descend = False
                        continue
                bit = branch & (0 - branch)
                frame_v[depth] = best
                frame_rest[depth] = branch ^ bit
                frame_used[depth] = used_mask
                for i in range(n):
                    snap[depth * n + i] = cand[i]
                depth += 1
                have_move = True
            else:
                while depth > 0:
                    v = frame_v[depth - 1]
                    color[v] = 0
                    unassigned += 1
                    used_mask = frame_used[depth - 1]
                    for i in range(n):
                        cand[i] = snap[(depth - 1) * n + i]
                    if frame_rest[depth - 1]:
                        bit = frame_rest[depth - 1] & (0 - frame_rest[depth - 1])
                        frame_rest[depth - 1] ^= bit
                        best = v
                        have_move = True
                        break
                    depth -= 1
                if not have_move:
                    break
                descend = True

            # assign color `bit` to vertex `best`
            nodes += 1
            if budget and nodes > budget:
                budget_hit = True
                break
            if deadline_c != 0.0 and nodes % 4096 == 0 and monotonic() > deadline_c:
                budget_hit = True
                break
            color[best] = __builtin_ctzll(bit) + 1
            unassigned -= 1
            used_mask |= bit
            inv = ~bit
            neigh = adj_c[best]
            while neigh:
                low = neigh & (0 - neigh)
                u = __builtin_ctzll(low)
                if color[u] == 0:
                    cand[u] &= inv
                neigh ^= low
    finally:
        free(<void *> arena)
        free(<void *> iarena)

    return count, found, nodes, budget_hit
