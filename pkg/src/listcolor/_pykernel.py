"""Pure-Python backtracking kernel for proper-coloring search and counting.

This is the reference implementation; listcolor._ckernel is a compiled twin
with identical semantics for n <= 64 and palettes of <= 64 colors.  Both must
visit the same search tree in the same order so that counts, first solutions,
and node budgets agree exactly.

Search scheme: maintain a candidate-color bitmask per vertex; repeatedly
branch on the unassigned vertex with the fewest candidates (ties to the
lowest index), colors in ascending order.  Single-candidate vertices are
assigned without real branching (forced-move propagation).  In symmetry mode
branch colors are limited to those already used plus one fresh color, which
is sound only for existence questions on a free palette.
"""

from __future__ import annotations

from time import monotonic

BACKEND = "python"


def solve_colorings(adj, allowed, cap, want, symmetry, budget_nodes, deadline):
    """Count proper colorings where vertex v may use the colors in allowed[v].

    adj: per-vertex neighbor bitmasks; allowed: per-vertex color bitmasks
    (bit c encodes color c+1).  Returns (count, colorings, nodes, budget_hit)
    with count capped at `cap`, at most `want` colorings collected in search
    order (tuples of 1-based colors), and nodes the number of assignments
    attempted.  budget_nodes=0 and deadline=0 disable the respective limits.
    """
    n = len(adj)
    cand = list(allowed)
    color = [0] * n
    unassigned = n
    used_mask = 0
    count = 0
    found = []
    nodes = 0
    budget_hit = False
    # frame: (vertex, untried colors, candidate snapshot, used mask before)
    stack = []
    descend = True

    while True:
        if descend:
            if unassigned == 0:
                count += 1
                if len(found) < want:
                    found.append(tuple(color))
                if count >= cap:
                    break
                descend = False
                continue
            best, best_pc = -1, 1 << 62
            for v in range(n):
                if color[v] == 0:
                    pc = bin(cand[v]).count("1")
                    if pc < best_pc:
                        best, best_pc = v, pc
                        if pc == 0:
                            break
            if best_pc == 0:
                descend = False
                continue
            branch = cand[best]
            if symmetry:
                branch &= used_mask | (~used_mask & (used_mask + 1))
                if branch == 0:
                    descend = False
                    continue
            bit = branch & -branch
            stack.append((best, branch ^ bit, cand[:], used_mask))
        else:
            while stack:
                v, rest, snapshot, prev_used = stack[-1]
                color[v] = 0
                unassigned += 1
                used_mask = prev_used
                if rest:
                    bit = rest & -rest
                    stack[-1] = (v, rest ^ bit, snapshot, prev_used)
                    cand = snapshot[:]
                    best = v
                    break
                stack.pop()
                cand = snapshot
            else:
                break
            descend = True

        # assign color `bit` to vertex `best`
        nodes += 1
        if budget_nodes and nodes > budget_nodes:
            budget_hit = True
            break
        if deadline and nodes % 4096 == 0 and monotonic() > deadline:
            budget_hit = True
            break
        color[best] = bit.bit_length()
        unassigned -= 1
        used_mask |= bit
        inv = ~bit
        neigh = adj[best]
        while neigh:
            low = neigh & -neigh
            u = low.bit_length() - 1
            if color[u] == 0:
                cand[u] &= inv
            neigh ^= low

    return count, found, nodes, budget_hit
